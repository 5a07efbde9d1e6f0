"""Direct and localized pseudo-colimits of category-valued diagrams."""

import pytest

from bifrac.colimit import (
    Homotopy,
    Premorphism,
    colimit_direct,
    colimit_via_localization,
    compose_premorphisms,
    crosscheck_iso,
    elementary_homotopy,
    homotopic,
    premorphisms_between,
    validate_catvalued_cocone,
)
from bifrac.core import PreconditionError, validate_category
from bifrac.functors import (
    is_equivalence_of_categories,
    validate_functor,
)

from helpers import (
    bicat,
    catvalued,
    constant_catvalued,
    idempotent_diagram,
    span_base,
    terminal_category,
)


def diagram_inputs():
    return [
        ("fixf", catvalued("fixf")),
        ("idempotents", idempotent_diagram()),
        ("constant-fixi", constant_catvalued(bicat("fixi"), terminal_category())),
        ("constant-fixp", constant_catvalued(bicat("fixp"), terminal_category())),
    ]


def all_squares(B, v1, u2):
    out = []
    for d in B.iter_objects():
        for f in B.hom1(B.tgt1(v1), d):
            for g in B.hom1(B.tgt1(u2), d):
                for gamma in B.two_between(B.hc1(f, v1), B.hc1(g, u2)):
                    if B.inv2(gamma) is not None:
                        out.append((f, g, gamma))
    return out


def class_reps(col):
    reps = {}
    for p, c in col.class_of.items():
        if c not in reps or p.key() < reps[c].key():
            reps[c] = p
    return reps


# -- premorphisms and homotopies


def test_premorphism_enumeration_respects_fibers():
    F = catvalued("fixf")
    assert premorphisms_between(F, "0", "x", "0", "y") == [
        Premorphism("1", "u", "u", "e", "x", "y")
    ]
    assert premorphisms_between(F, "1", "q", "0", "x") == []


def test_every_premorphism_is_self_homotopic_through_its_apex():
    F = catvalued("fixf")
    p = Premorphism("0", "i0", "i0", "ix", "x", "x")
    assert homotopic(F, p, p) == Homotopy("0", "i0", "i0", "1_i0", "1_i0")


def test_homotopy_requires_a_shared_boundary():
    F = catvalued("fixf")
    p = Premorphism("0", "i0", "i0", "ix", "x", "x")
    q = Premorphism("0", "i0", "i0", "iy", "y", "y")
    with pytest.raises(PreconditionError):
        homotopic(F, p, q)


def test_elementary_pushforward():
    F = catvalued("fixf")
    p = Premorphism("0", "i0", "i0", "ix", "x", "x")
    pushed = elementary_homotopy(F, p, "u")
    assert pushed == Premorphism("1", "u", "u", "ip", "x", "x")
    assert homotopic(F, p, pushed) is not None
    stay = elementary_homotopy(F, p, "i0")
    assert homotopic(F, p, stay) is not None
    twice = elementary_homotopy(F, pushed, "i1")
    assert homotopic(F, twice, pushed) is not None


def test_legs_that_never_rejoin_are_not_homotopic():
    G = constant_catvalued(span_base(), terminal_category())
    p = Premorphism("b", "r", "r", "i", "*", "*")
    q = Premorphism("c", "s", "s", "i", "*", "*")
    assert homotopic(G, p, q) is None
    with pytest.raises(PreconditionError, match="pseudofiltered"):
        colimit_direct(G)


# -- the direct construction


def test_colimit_of_the_connecting_diagram_is_its_top_fiber():
    F = catvalued("fixf")
    col = colimit_direct(F)
    assert validate_category(col.category).ok
    assert col.category.arrows == {
        "[(0,i0,i0,ix,x,x)]": ("(0,x)", "(0,x)"),
        "[(0,i0,i0,iy,y,y)]": ("(0,y)", "(0,y)"),
        "[(1,i1,i1,e,p,q)]": ("(1,p)", "(1,q)"),
        "[(1,i1,i1,ip,p,p)]": ("(1,p)", "(1,p)"),
        "[(1,i1,i1,iq,q,q)]": ("(1,q)", "(1,q)"),
        "[(1,i1,u,e,p,y)]": ("(1,p)", "(0,y)"),
        "[(1,i1,u,ip,p,x)]": ("(1,p)", "(0,x)"),
        "[(1,i1,u,iq,q,y)]": ("(1,q)", "(0,y)"),
        "[(1,u,i1,e,x,q)]": ("(0,x)", "(1,q)"),
        "[(1,u,i1,ip,x,p)]": ("(0,x)", "(1,p)"),
        "[(1,u,i1,iq,y,q)]": ("(0,y)", "(1,q)"),
        "[(1,u,u,e,x,y)]": ("(0,x)", "(0,y)"),
    }
    assert col.category.identity["(0,x)"] == "[(0,i0,i0,ix,x,x)]"
    assert col.category.hom("(0,x)", "(0,y)") == ("[(1,u,u,e,x,y)]",)
    assert is_equivalence_of_categories(col.insertions["1"])


def test_idempotents_keep_their_two_classes_per_hom():
    col = colimit_direct(idempotent_diagram())
    assert sorted(col.category.arrows) == [
        "[(0,i0,i0,ix,x,x)]", "[(0,i0,i0,m,x,x)]",
        "[(1,i1,i1,ip,p,p)]", "[(1,i1,i1,n,p,p)]",
        "[(1,i1,u,ip,p,x)]", "[(1,i1,u,n,p,x)]",
        "[(1,u,i1,ip,x,p)]", "[(1,u,i1,n,x,p)]",
    ]
    assert is_equivalence_of_categories(col.insertions["1"])
    assert not col.category.is_iso("[(1,u,i1,n,x,p)]")


@pytest.mark.parametrize("name", ["fixi", "fixp"])
def test_constant_terminal_diagram_collapses_to_a_chaotic_groupoid(name):
    col = colimit_direct(constant_catvalued(bicat(name), terminal_category()))
    C = col.category
    assert validate_category(C).ok
    for a in C.iter_objects():
        for b in C.iter_objects():
            assert len(C.hom(a, b)) == 1
    assert all(C.is_iso(a) for a in C.iter_arrows())


@pytest.mark.parametrize("name,F", diagram_inputs())
def test_insertions_and_cells_form_a_cocone(name, F):
    col = colimit_direct(F)
    assert validate_category(col.category).ok
    assert all(validate_functor(leg).ok for leg in col.insertions.values())
    assert validate_catvalued_cocone(F, col.category, col.insertions, col.cocone).ok


@pytest.mark.parametrize("name,F", diagram_inputs())
def test_composite_class_is_square_independent(name, F):
    col = colimit_direct(F)
    reps = class_reps(col)
    B = F.base
    for (qc, pc), r in sorted(col.category.comp.items()):
        p, q = reps[pc], reps[qc]
        squares = all_squares(B, p.v, q.u)
        assert squares
        got = {
            col.class_of[compose_premorphisms(F, p, q, square=s)] for s in squares
        }
        assert got == {r}


def test_cocone_validator_rejects_broken_data():
    D = idempotent_diagram()
    col = colimit_direct(D)

    cells = dict(col.cocone)
    cells[("u", "x")] = "[(1,u,i1,n,x,p)]"
    rep = validate_catvalued_cocone(D, col.category, col.insertions, cells)
    assert [(v.law, v.cells) for v in rep.violations] == [("PC0", ("u", "x"))]

    cells = dict(col.cocone)
    cells[("u", "x")] = col.category.identity["(0,x)"]
    rep = validate_catvalued_cocone(D, col.category, col.insertions, cells)
    assert rep.laws() == {"PC0"}

    legs = dict(col.insertions)
    del legs["1"]
    rep = validate_catvalued_cocone(D, col.category, legs, col.cocone)
    assert [(v.law, v.cells) for v in rep.violations] == [("PC0", ("1",))]


# -- agreement with the localization pipeline


@pytest.mark.parametrize("name,F", diagram_inputs())
def test_both_constructions_are_strictly_isomorphic(name, F):
    via = colimit_via_localization(F)
    assert validate_category(via).ok
    h, k = crosscheck_iso(F)
    assert h.dom.objects == h.cod.objects
    assert validate_functor(h).ok and validate_functor(k).ok
    assert all(h.a(k.a(c)) == c for c in k.on_arr)
    assert all(k.a(h.a(c)) == c for c in h.on_arr)


def test_localized_colimit_matches_direct_counts():
    F = catvalued("fixf")
    via = colimit_via_localization(F)
    direct = colimit_direct(F).category
    assert via.objects == direct.objects
    assert len(via.arrows) == len(direct.arrows)
