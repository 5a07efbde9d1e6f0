"""Cartesian cells, lifts, and the fibration predicates."""

import pytest

from bifrac.axioms import check_frc
from bifrac.core import PreconditionError, equivalences, family, is_equivalence1
from bifrac.fibrations import (
    cartesian_families,
    cartesian_lift,
    check_1fibration,
    check_fibration,
    is_1fibration,
    is_cartesian1,
    is_cartesian2,
    is_cartesian_arrow,
    is_cat_fibration,
    is_cofibration,
    is_fibration,
    lifted_family,
)
from bifrac.functors import identity_psf, local_functor, op_dual_psf, validate_psf

from helpers import (
    BICAT_FIXTURES,
    bicat,
    parallel_collapse,
    point_over_interval,
    product_with_projections,
    saturating_collapse,
    skew_interval,
)


@pytest.fixture(scope="module")
def projections():
    return product_with_projections(bicat("fixi"), bicat("fixp"))


def fibration_examples(projections):
    _, pr1, pr2 = projections
    return [pr1, pr2, saturating_collapse()]


# ---------------------------------------------------------------------------
# the hand-built pseudofunctors are valid inputs


def test_example_pseudofunctors_validate(projections):
    P, pr1, pr2 = projections
    for F in (pr1, pr2, saturating_collapse(), point_over_interval(),
              parallel_collapse(), skew_interval()):
        assert validate_psf(F).ok


# ---------------------------------------------------------------------------
# Cartesian 1-cells


@pytest.mark.parametrize("name", BICAT_FIXTURES)
def test_identity_cells_are_cartesian(name):
    B = bicat(name)
    I = identity_psf(B)
    for A in sorted(B.objects):
        assert is_cartesian1(I, B.id1[A])


def test_projection_cartesian_iff_other_component_equivalence(projections):
    P, pr1, pr2 = projections
    eq_p = equivalences(bicat("fixp")).members
    eq_i = equivalences(bicat("fixi")).members
    for f in sorted(P.one_cells):
        assert is_cartesian1(pr1, f) == (pr2.m1(f) in eq_p)
        assert is_cartesian1(pr2, f) == (pr1.m1(f) in eq_i)


def test_cartesian_families_of_projection(projections):
    _, pr1, _ = projections
    fams = cartesian_families(pr1)
    assert sorted(fams.c1.members) == [
        "(i0,iA)", "(i0,iB)", "(i1,iA)", "(i1,iB)", "(u,iA)", "(u,iB)",
    ]
    # every 2-cell of the product is invertible in the second component
    assert fams.c2 == frozenset(pr1.dom.two_cells)


# ---------------------------------------------------------------------------
# Cartesian 2-cells and the underlying 1-categorical notion


def test_collapse_cartesian_two_cells():
    C = saturating_collapse()
    assert is_cartesian2(C, "1")
    assert not is_cartesian2(C, "n")
    assert not is_cartesian2(C, "z")


def test_collapse_local_functor_is_category_fibration():
    Q = local_functor(saturating_collapse(), "*", "*")
    assert is_cat_fibration(Q)
    assert is_cartesian_arrow(Q, "1")
    assert not is_cartesian_arrow(Q, "n")
    assert not is_cartesian_arrow(Q, "z")


# ---------------------------------------------------------------------------
# lifts


def test_cartesian_lift_of_identity_is_identity(projections):
    _, pr1, _ = projections
    assert cartesian_lift(pr1, "(0,A)", "i0") == ("(0,A)", "(i0,iA)")
    assert cartesian_lift(saturating_collapse(), "*", "1") == ("*", "f")


def test_cartesian_lift_requires_matching_target(projections):
    _, pr1, _ = projections
    with pytest.raises(PreconditionError):
        cartesian_lift(pr1, "(0,A)", "u")


def test_skew_interval_lifts():
    R = skew_interval()
    assert cartesian_lift(R, "1", "g") == ("0", "u")
    assert cartesian_lift(R, "1", "f") is None


# ---------------------------------------------------------------------------
# fibration predicates


def test_collapse_is_a_fibration():
    C = saturating_collapse()
    assert check_fibration(C).ok
    assert is_fibration(C)
    assert is_cofibration(C)


def test_projections_are_fibrations_and_cofibrations(projections):
    _, pr1, pr2 = projections
    for F in (pr1, pr2):
        assert is_1fibration(F)
        assert is_fibration(F)
        assert is_cofibration(F)


def test_point_over_interval_has_no_lift_at_all():
    r = check_1fibration(point_over_interval())
    assert [(v.law, v.cells) for v in r.violations] == [("1-fibration", ("*", "u"))]
    assert r.violations[0].message == "no Cartesian lift, strict or lax"


def test_parallel_collapse_has_no_cartesian_candidate():
    r = check_1fibration(parallel_collapse())
    assert [(v.law, v.cells) for v in r.violations] == [("1-fibration", ("Y", "u"))]
    assert r.violations[0].message == "no Cartesian lift, strict or lax"


def test_skew_interval_admits_only_a_lax_lift():
    r = check_1fibration(skew_interval())
    assert [(v.law, v.cells) for v in r.violations] == [("1-fibration", ("1", "f"))]
    assert (
        r.violations[0].message
        == "no strict Cartesian lift; one exists up to invertible 2-cell"
    )


# ---------------------------------------------------------------------------
# stability properties of the Cartesian family


def test_equivalences_are_cartesian(projections):
    for F in fibration_examples(projections):
        c1 = cartesian_families(F).c1.members
        for e in sorted(equivalences(F.dom).members):
            assert e in c1


def test_cartesian_cells_closed_under_composition(projections):
    for F in fibration_examples(projections):
        c1 = cartesian_families(F).c1.members
        for (g, f), gf in sorted(F.dom.hcomp1.items()):
            if g in c1 and f in c1:
                assert gf in c1


def test_cartesian_cells_closed_under_invertible_two_cells(projections):
    for F in fibration_examples(projections):
        D = F.dom
        c1 = cartesian_families(F).c1.members
        for x in sorted(D.two_cells):
            if D.inv2(x) is None:
                continue
            src, tgt = D.two_cells[x]
            if src in c1:
                assert tgt in c1


def test_cartesian_cells_one_sided_two_out_of_three(projections):
    for F in fibration_examples(projections):
        c1 = cartesian_families(F).c1.members
        for (g, f), gf in sorted(F.dom.hcomp1.items()):
            if g in c1 and gf in c1:
                assert f in c1


def test_cartesian_over_equivalence_is_equivalence(projections):
    for F in fibration_examples(projections):
        c1 = cartesian_families(F).c1.members
        for f in sorted(F.dom.one_cells):
            if f in c1 and is_equivalence1(F.cod, F.m1(f)):
                assert is_equivalence1(F.dom, f)


# ---------------------------------------------------------------------------
# lifted families of fractions


def test_lifted_family_over_identities_is_equivalences_over_identities(projections):
    P, pr1, _ = projections
    lifted = lifted_family(pr1, "identities")
    assert lifted.name == "cartesian-over-identities"
    expected = {
        f for f in equivalences(P).members if pr1.m1(f) in ("i0", "i1")
    }
    assert lifted.members == frozenset(expected)


def test_lifted_family_inherits_right_fractions(projections):
    P, pr1, pr2 = projections
    assert check_frc(bicat("fixi"), "all").ok
    assert check_frc(bicat("fixp"), "all").ok
    assert check_frc(P, lifted_family(pr1, "all")).ok
    assert check_frc(P, lifted_family(pr2, "all")).ok


def test_cocartesian_family_inherits_left_fractions(projections):
    P, pr1, _ = projections
    cof = lifted_family(pr1, "all", co=True)
    assert cof.name == "cocartesian-over-all"
    op = op_dual_psf(pr1)
    assert check_frc(op.dom, family(cof.members, cof.name)).ok
