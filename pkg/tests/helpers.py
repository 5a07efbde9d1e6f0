"""Shared loaders and table-poking builders for the test suite."""

from __future__ import annotations

from bifrac.core import FinBicategory, FinCategory, family, locally_discrete
from bifrac.functors import (
    CatFunctor,
    CatValuedPSF,
    PsfBicat,
    identity_functor,
    identity_psf,
)
from bifrac.io import (
    load_bicategory,
    load_catvalued,
    load_category,
    load_psf,
    resolve_fixture,
)

BICAT_FIXTURES = ["fix1", "fixi", "fixp", "fixs", "fixm", "fixw", "fixe", "pairshape"]


def bicat(name: str) -> FinBicategory:
    return load_bicategory(resolve_fixture(name))


def cat(name: str) -> FinCategory:
    return load_category(resolve_fixture(name))


def psf(name: str) -> PsfBicat:
    return load_psf(resolve_fixture(name))


def catvalued(name: str) -> CatValuedPSF:
    return load_catvalued(resolve_fixture(name))


def clone_bicat(B: FinBicategory) -> FinBicategory:
    """Fresh tables and empty caches, safe to poke."""
    return FinBicategory(
        objects=B.objects,
        one_cells=dict(B.one_cells),
        two_cells=dict(B.two_cells),
        id1=dict(B.id1),
        id2=dict(B.id2),
        vcomp=dict(B.vcomp),
        hcomp1=dict(B.hcomp1),
        hcomp2=dict(B.hcomp2),
        lunitor=dict(B.lunitor),
        runitor=dict(B.runitor),
        associator=dict(B.associator),
        families=dict(B.families),
    )


def clone_cat(C: FinCategory) -> FinCategory:
    return FinCategory(
        objects=C.objects,
        arrows=dict(C.arrows),
        identity=dict(C.identity),
        comp=dict(C.comp),
        families=dict(C.families),
    )


def clone_catvalued(F: CatValuedPSF) -> CatValuedPSF:
    fiber = {A: clone_cat(c) for A, c in F.fiber.items()}
    on1 = {}
    for u, fun in F.on1.items():
        s, t = F.base.one_cells[u]
        on1[u] = CatFunctor(fiber[s], fiber[t], dict(fun.on_obj), dict(fun.on_arr))
    return CatValuedPSF(
        base=clone_bicat(F.base),
        fiber=fiber,
        on1=on1,
        on2={a: dict(c) for a, c in F.on2.items()},
        f2={k: dict(c) for k, c in F.f2.items()},
        f0={A: dict(c) for A, c in F.f0.items()},
    )


def clone_psf(F: PsfBicat) -> PsfBicat:
    return PsfBicat(
        dom=clone_bicat(F.dom),
        cod=clone_bicat(F.cod),
        on0=dict(F.on0),
        on1=dict(F.on1),
        on2=dict(F.on2),
        f2=dict(F.f2),
        f0=dict(F.f0),
    )


def two_points() -> FinBicategory:
    """Two objects, no arrows between them."""
    C = FinCategory(
        objects=frozenset({"X", "Y"}),
        arrows={"iX": ("X", "X"), "iY": ("Y", "Y")},
        identity={"X": "iX", "Y": "iY"},
        comp={("iX", "iX"): "iX", ("iY", "iY"): "iY"},
    )
    return locally_discrete(C)


def idempotent_diagram() -> CatValuedPSF:
    """Categories over the interval whose fibers are one-object idempotent monoids."""

    def monoid(obj: str, ident: str, idem: str) -> FinCategory:
        return FinCategory(
            objects=frozenset({obj}),
            arrows={ident: (obj, obj), idem: (obj, obj)},
            identity={obj: ident},
            comp={
                (ident, ident): ident,
                (ident, idem): idem,
                (idem, ident): idem,
                (idem, idem): idem,
            },
        )

    base = bicat("fixi")
    f0cat = monoid("x", "ix", "m")
    f1cat = monoid("p", "ip", "n")
    fiber = {"0": f0cat, "1": f1cat}
    on1 = {
        "i0": CatFunctor(f0cat, f0cat, {"x": "x"}, {"ix": "ix", "m": "m"}),
        "i1": CatFunctor(f1cat, f1cat, {"p": "p"}, {"ip": "ip", "n": "n"}),
        "u": CatFunctor(f0cat, f1cat, {"x": "p"}, {"ix": "ip", "m": "n"}),
    }
    on2 = {
        "1_i0": {"x": "ix"},
        "1_i1": {"p": "ip"},
        "1_u": {"x": "ip"},
    }
    f2 = {
        ("i0", "i0"): {"x": "ix"},
        ("i1", "i1"): {"p": "ip"},
        ("u", "i0"): {"x": "ip"},
        ("i1", "u"): {"x": "ip"},
    }
    f0 = {"0": {"x": "ix"}, "1": {"p": "ip"}}
    return CatValuedPSF(base=base, fiber=fiber, on1=on1, on2=on2, f2=f2, f0=f0)


def _minus_all_unitors(B: FinBicategory, which: str) -> None:
    table = B.lunitor if which == "l" else B.runitor
    for u in list(table):
        table[u] = f"{u}{u}m"


def _minus_all_associators(B: FinBicategory) -> None:
    for key in list(B.associator):
        plus = B.associator[key]
        assert plus.endswith("p")
        B.associator[key] = plus[:-1] + "m"


def validator_mutations():
    """Ten independent single-law breakages: (label, kind, build, law).

    kind selects the validator: "bicat", "catvalued", or "psf".  Each build
    returns a fresh poked presentation; the named law must appear among the
    violated laws of the corresponding report.
    """

    def m1():
        B = clone_bicat(bicat("fixp"))
        B.vcomp[("s", "si")] = "s"
        return B

    def m2():
        B = clone_bicat(bicat("fixs"))
        B.vcomp[("eep", "eep")] = "eem"
        return B

    def m3():
        B = clone_bicat(bicat("fixs"))
        B.hcomp2[("aam", "aam")] = "bbm"
        return B

    def m4():
        B = clone_bicat(bicat("fixs"))
        B.hcomp2[("aap", "aap")] = "bbm"
        return B

    def m5():
        B = clone_bicat(bicat("fixm"))
        B.lunitor["f"] = "n"
        return B

    def m6():
        B = clone_bicat(bicat("fixm"))
        B.associator[("f", "f", "f")] = "n"
        return B

    def m7():
        B = clone_bicat(bicat("fixs"))
        _minus_all_unitors(B, "l")
        return B

    def m8():
        B = clone_bicat(bicat("fixs"))
        _minus_all_associators(B)
        _minus_all_unitors(B, "l")
        return B

    def m9():
        F = clone_catvalued(idempotent_diagram())
        F.on1["u"].on_arr["ix"] = "n"
        return F

    def m10():
        F = clone_psf(identity_psf(bicat("fixm")))
        F.f2[("f", "f")] = "n"
        return F

    return [
        ("mis-tabled vertical composite", "bicat", m1, "local-category"),
        ("vertical identity flipped", "bicat", m2, "local-category"),
        ("horizontal composite sign flipped", "bicat", m3, "interchange"),
        ("horizontal identity flipped", "bicat", m4, "hcomp2-identity"),
        ("left unitor not invertible", "bicat", m5, "unitor-invertibility"),
        ("associator not invertible", "bicat", m6, "associator-invertibility"),
        ("all left unitors negated", "bicat", m7, "triangle"),
        ("associators and left unitors negated", "bicat", m8, "pentagon"),
        ("fiber functor drops an identity", "catvalued", m9, "local-functoriality"),
        ("composition constraint not invertible", "psf", m10, "constraint-invertibility"),
    ]


def product_with_projections(
    B1: FinBicategory, B2: FinBicategory
) -> tuple[FinBicategory, PsfBicat, PsfBicat]:
    """Componentwise product bicategory with its two strict projections."""

    def p(a: str, b: str) -> str:
        return f"({a},{b})"

    one_cells = {}
    for f, (s1, t1) in B1.one_cells.items():
        for g, (s2, t2) in B2.one_cells.items():
            one_cells[p(f, g)] = (p(s1, s2), p(t1, t2))
    two_cells = {}
    for x, (sf1, tf1) in B1.two_cells.items():
        for y, (sf2, tf2) in B2.two_cells.items():
            two_cells[p(x, y)] = (p(sf1, sf2), p(tf1, tf2))
    id1 = {
        p(a, b): p(B1.id1[a], B2.id1[b]) for a in B1.objects for b in B2.objects
    }
    id2 = {
        p(f, g): p(B1.id2[f], B2.id2[g]) for f in B1.one_cells for g in B2.one_cells
    }
    vcomp = {}
    for (b1, a1), c1 in B1.vcomp.items():
        for (b2, a2), c2 in B2.vcomp.items():
            vcomp[(p(b1, b2), p(a1, a2))] = p(c1, c2)
    hcomp1 = {}
    for (g1, f1), h1 in B1.hcomp1.items():
        for (g2, f2_), h2 in B2.hcomp1.items():
            hcomp1[(p(g1, g2), p(f1, f2_))] = p(h1, h2)
    hcomp2 = {}
    for (b1, a1), c1 in B1.hcomp2.items():
        for (b2, a2), c2 in B2.hcomp2.items():
            hcomp2[(p(b1, b2), p(a1, a2))] = p(c1, c2)
    lunitor = {
        p(f, g): p(B1.lunitor[f], B2.lunitor[g])
        for f in B1.one_cells
        for g in B2.one_cells
    }
    runitor = {
        p(f, g): p(B1.runitor[f], B2.runitor[g])
        for f in B1.one_cells
        for g in B2.one_cells
    }
    associator = {}
    for (u1, v1, w1), a1 in B1.associator.items():
        for (u2, v2, w2), a2 in B2.associator.items():
            associator[(p(u1, u2), p(v1, v2), p(w1, w2))] = p(a1, a2)
    P = FinBicategory(
        objects=frozenset(id1),
        one_cells=one_cells,
        two_cells=two_cells,
        id1=id1,
        id2=id2,
        vcomp=vcomp,
        hcomp1=hcomp1,
        hcomp2=hcomp2,
        lunitor=lunitor,
        runitor=runitor,
        associator=associator,
        families={
            "all": family(one_cells, "all"),
            "identities": family(id1.values(), "identities"),
        },
    )

    def proj(cod: FinBicategory, pick: int) -> PsfBicat:
        on1 = {}
        for f in B1.one_cells:
            for g in B2.one_cells:
                on1[p(f, g)] = (f, g)[pick]
        on2 = {}
        for x in B1.two_cells:
            for y in B2.two_cells:
                on2[p(x, y)] = (x, y)[pick]
        return PsfBicat(
            dom=P,
            cod=cod,
            on0={p(a, b): (a, b)[pick] for a in B1.objects for b in B2.objects},
            on1=on1,
            on2=on2,
            f2={
                (u, v): cod.id2[cod.hcomp1[(on1[u], on1[v])]]
                for (u, v) in P.hcomp1
            },
            f0={X: cod.id2[cod.id1[(a, b)[pick]]] for X, (a, b) in _unpair(P)},
        )

    def _unpair(prod):
        out = []
        for a in B1.objects:
            for b in B2.objects:
                out.append((p(a, b), (a, b)))
        return out

    return P, proj(B1, 0), proj(B2, 1)


def saturating_collapse() -> PsfBicat:
    """Squash the three-endocell hom onto the terminal bicategory."""
    M, pt = bicat("fixm"), bicat("fix1")
    return PsfBicat(
        dom=M,
        cod=pt,
        on0={"*": "*"},
        on1={"f": "1"},
        on2={a: "1_1" for a in M.two_cells},
        f2={("f", "f"): "1_1"},
        f0={"*": "1_1"},
    )


def point_over_interval() -> PsfBicat:
    """Include the point over the far end of the walking arrow."""
    return PsfBicat(
        dom=bicat("fix1"),
        cod=bicat("fixi"),
        on0={"*": "1"},
        on1={"1": "i1"},
        on2={"1_1": "1_i1"},
        f2={("1", "1"): "1_i1"},
        f0={"*": "1_i1"},
    )


def parallel_collapse() -> PsfBicat:
    """Identify the two parallel arrows of the pair shape onto the walking arrow."""
    shape, interval = bicat("pairshape"), bicat("fixi")
    on1 = {"iX": "i0", "iY": "i1", "k": "u", "l": "u"}
    return PsfBicat(
        dom=shape,
        cod=interval,
        on0={"X": "0", "Y": "1"},
        on1=on1,
        on2={"1_iX": "1_i0", "1_iY": "1_i1", "1_k": "1_u", "1_l": "1_u"},
        f2={
            (g, f): interval.id2[interval.hcomp1[(on1[g], on1[f])]]
            for (g, f) in shape.hcomp1
        },
        f0={"X": "1_i0", "Y": "1_i1"},
    )


def skew_interval() -> PsfBicat:
    """Walking arrow into the parallel pair, landing on the far leg only."""
    return PsfBicat(
        dom=bicat("fixi"),
        cod=bicat("fixp"),
        on0={"0": "A", "1": "B"},
        on1={"i0": "iA", "i1": "iB", "u": "g"},
        on2={"1_i0": "1A", "1_i1": "1B", "1_u": "1g"},
        f2={
            ("i0", "i0"): "1A",
            ("i1", "i1"): "1B",
            ("u", "i0"): "1g",
            ("i1", "u"): "1g",
        },
        f0={"0": "1A", "1": "1B"},
    )


def terminal_category() -> FinCategory:
    return FinCategory(
        objects=frozenset({"*"}),
        arrows={"i": ("*", "*")},
        identity={"*": "i"},
        comp={("i", "i"): "i"},
    )


def constant_catvalued(B: FinBicategory, C: FinCategory) -> CatValuedPSF:
    """The diagram sending every cell of the base to the identity on C."""
    ident = identity_functor(C)
    on_all = {x: C.identity[x] for x in C.objects}
    return CatValuedPSF(
        base=B,
        fiber={A: C for A in B.objects},
        on1={f: ident for f in B.one_cells},
        on2={a: dict(on_all) for a in B.two_cells},
        f2={k: dict(on_all) for k in B.hcomp1},
        f0={A: dict(on_all) for A in B.objects},
    )


def rename_bicat(
    B: FinBicategory,
    o: dict[str, str],
    r1: dict[str, str],
    r2: dict[str, str],
) -> FinBicategory:
    """Relabel every cell; tables carried across verbatim."""
    return FinBicategory(
        objects=frozenset(o[x] for x in B.objects),
        one_cells={r1[i]: (o[s], o[t]) for i, (s, t) in B.one_cells.items()},
        two_cells={r2[i]: (r1[s], r1[t]) for i, (s, t) in B.two_cells.items()},
        id1={o[a]: r1[c] for a, c in B.id1.items()},
        id2={r1[a]: r2[c] for a, c in B.id2.items()},
        vcomp={(r2[b], r2[a]): r2[c] for (b, a), c in B.vcomp.items()},
        hcomp1={(r1[g], r1[f]): r1[c] for (g, f), c in B.hcomp1.items()},
        hcomp2={(r2[b], r2[a]): r2[c] for (b, a), c in B.hcomp2.items()},
        lunitor={r1[u]: r2[c] for u, c in B.lunitor.items()},
        runitor={r1[u]: r2[c] for u, c in B.runitor.items()},
        associator={
            (r1[u], r1[v], r1[w]): r2[c]
            for (u, v, w), c in B.associator.items()
        },
    )


def r2_failure_category() -> FinCategory:
    """Parallel pair merged by w with no equalizing member, plus a spare object.

    The family "w-wide" satisfies R0 and R1; R2 fails exactly at (f, g, w).
    """
    return FinCategory(
        objects=frozenset({"a", "b", "c", "d"}),
        arrows={
            "ia": ("a", "a"), "ib": ("b", "b"), "ic": ("c", "c"),
            "id_": ("d", "d"),
            "f": ("b", "c"), "g": ("b", "c"),
            "w": ("c", "d"), "m": ("b", "d"),
        },
        identity={"a": "ia", "b": "ib", "c": "ic", "d": "id_"},
        comp={
            ("ia", "ia"): "ia", ("ib", "ib"): "ib",
            ("ic", "ic"): "ic", ("id_", "id_"): "id_",
            ("f", "ib"): "f", ("ic", "f"): "f",
            ("g", "ib"): "g", ("ic", "g"): "g",
            ("w", "ic"): "w", ("id_", "w"): "w",
            ("m", "ib"): "m", ("id_", "m"): "m",
            ("w", "f"): "m", ("w", "g"): "m",
        },
        families={
            "all": family(
                ["ia", "ib", "ic", "id_", "f", "g", "w", "m"], "all"
            ),
            "identities": family(["ia", "ib", "ic", "id_"], "identities"),
            "w-wide": family(["ia", "ib", "ic", "id_", "w"], "w-wide"),
        },
    )


def span_base() -> FinBicategory:
    """Two legs out of a common source that never rejoin; fails 0-pflt."""
    one = {
        "ia": ("a", "a"), "ib": ("b", "b"), "ic": ("c", "c"),
        "r": ("a", "b"), "s": ("a", "c"),
    }
    hcomp1 = {
        ("ia", "ia"): "ia", ("ib", "ib"): "ib", ("ic", "ic"): "ic",
        ("r", "ia"): "r", ("ib", "r"): "r",
        ("s", "ia"): "s", ("ic", "s"): "s",
    }
    id2 = {f: "1_" + f for f in one}
    assoc = {}
    for (u, v), uv in hcomp1.items():
        for (v2, w), vw in hcomp1.items():
            if v2 == v and (u, vw) in hcomp1:
                assoc[(u, v, w)] = id2[hcomp1[(u, vw)]]
    return FinBicategory(
        objects=frozenset({"a", "b", "c"}),
        one_cells=one,
        two_cells={c: (f, f) for f, c in id2.items()},
        id1={"a": "ia", "b": "ib", "c": "ic"},
        id2=id2,
        vcomp={(c, c): c for c in id2.values()},
        hcomp1=hcomp1,
        hcomp2={(id2[g], id2[f]): id2[c] for (g, f), c in hcomp1.items()},
        lunitor={f: id2[f] for f in one},
        runitor={f: id2[f] for f in one},
        associator=assoc,
    )
