"""Pseudo-colimits of category-valued diagrams over pseudofiltered bases.

Two independent constructions are kept side by side: the direct quotient of
premorphisms by homotopy, and the localization of pi0 of the elements
bicategory at the co-Cartesian classes.  crosscheck_iso builds the functors
identifying them and fails loudly if they are not strictly inverse.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .axioms import NonFilteredError, PseudofilteredWitnesses, check_pflt
from .core import (
    CellId,
    FinCategory,
    HighSeverityFinding,
    PreconditionError,
    ValidationReport,
    Violation,
    pi0,
)
from .functors import (
    CatFunctor,
    CatValuedPSF,
    is_iso_of_categories,
    validate_catvalued,
    validate_functor,
)
from .grothendieck import ElementsResult, _enc, _fcomp, _finv, elements
from .localization import LocalizedCategory, Roof, induced_W0, localize_left


@dataclass(frozen=True)
class Premorphism:
    """An arrow-to-be (A,x) -> (B,y): a shared apex and a fiber arrow there.

    u: A -> apex and v: B -> apex in the base, xi: Fu(x) -> Fv(y) in the
    fiber at the apex.  x and y are carried so the boundary is part of the
    data; the base endpoints are the sources of u and v.
    """

    apex: str
    u: CellId
    v: CellId
    xi: CellId
    x: str
    y: str

    def key(self) -> tuple[str, CellId, CellId, CellId, str, str]:
        return (self.apex, self.u, self.v, self.xi, self.x, self.y)


@dataclass(frozen=True)
class Homotopy:
    """A cospan of base arrows with invertible 2-cells gluing two premorphisms."""

    apex: str
    w1: CellId
    w2: CellId
    alpha: CellId
    beta: CellId


@dataclass
class ColimitCategory:
    category: FinCategory
    insertions: dict[str, CatFunctor]
    cocone: dict[tuple[CellId, str], CellId] = field(compare=False)
    class_of: dict[Premorphism, CellId] = field(compare=False)


def _class_id(p: Premorphism) -> CellId:
    return "[" + _enc(*p.key()) + "]"


def _chain(fib: FinCategory, arrows: list[CellId], what: str) -> CellId:
    acc = arrows[0]
    for a in arrows[1:]:
        acc = _fcomp(fib, a, acc, what)
    return acc


def premorphisms_between(
    F: CatValuedPSF, a: str, x: str, b: str, y: str
) -> list[Premorphism]:
    B = F.base
    out = []
    for c in B.iter_objects():
        fib = F.fiber[c]
        for u in B.hom1(a, c):
            for v in B.hom1(b, c):
                for xi in fib.hom(F.ap(u, x), F.ap(v, y)):
                    out.append(Premorphism(c, u, v, xi, x, y))
    return out


def _boundary(F: CatValuedPSF, p: Premorphism) -> tuple[str, str]:
    return F.base.src1(p.u), F.base.src1(p.v)


def homotopic(F: CatValuedPSF, p: Premorphism, q: Premorphism) -> Homotopy | None:
    """First cospan (C, w1, w2) with invertible glue satisfying the square
    that equates the two pushed-forward fiber arrows, or None."""
    if _boundary(F, p) != _boundary(F, q) or (p.x, p.y) != (q.x, q.y):
        raise PreconditionError("premorphisms do not share a boundary")
    B = F.base
    x, y = p.x, p.y
    for c in B.iter_objects():
        fib = F.fiber[c]
        for w1 in B.hom1(p.apex, c):
            lhs_head = [
                F.f2[(w1, p.u)][x],
            ]
            rhs_tail = [
                F.ap_arr(w1, p.xi),
                F.f2[(w1, p.v)][y],
            ]
            for w2 in B.hom1(q.apex, c):
                for alpha in B.two_between(B.hc1(w1, p.u), B.hc1(w2, q.u)):
                    if B.inv2(alpha) is None:
                        continue
                    lhs = _chain(
                        fib,
                        lhs_head
                        + [
                            F.comp2(alpha, x),
                            _finv(fib, F.f2[(w2, q.u)][x], "homotopy glue"),
                            F.ap_arr(w2, q.xi),
                        ],
                        "homotopy glue",
                    )
                    for beta in B.two_between(B.hc1(w1, p.v), B.hc1(w2, q.v)):
                        if B.inv2(beta) is None:
                            continue
                        rhs = _chain(
                            fib,
                            rhs_tail
                            + [
                                F.comp2(beta, y),
                                _finv(fib, F.f2[(w2, q.v)][y], "homotopy glue"),
                            ],
                            "homotopy glue",
                        )
                        if lhs == rhs:
                            return Homotopy(c, w1, w2, alpha, beta)
    return None


def elementary_homotopy(F: CatValuedPSF, p: Premorphism, w: CellId) -> Premorphism:
    """Push a premorphism forward along w out of its apex; the result is
    homotopic to p (search-verified in tests, not assumed here)."""
    B = F.base
    if B.src1(w) != p.apex:
        raise PreconditionError("pushforward arrow does not start at the apex")
    fib = F.fiber[B.tgt1(w)]
    what = f"pushforward along {w}"
    xi = _chain(
        fib,
        [
            _finv(fib, F.f2[(w, p.u)][p.x], what),
            F.ap_arr(w, p.xi),
            F.f2[(w, p.v)][p.y],
        ],
        what,
    )
    return Premorphism(B.tgt1(w), B.hc1(w, p.u), B.hc1(w, p.v), xi, p.x, p.y)


def compose_premorphisms(
    F: CatValuedPSF,
    p: Premorphism,
    q: Premorphism,
    wit: PseudofilteredWitnesses | None = None,
    square: tuple[CellId, CellId, CellId] | None = None,
) -> Premorphism:
    """Composite of p: (A,x) -> (B,y) then q: (B,y) -> (C,z).

    The apexes are joined over the span (p.v, q.u) by a square with an
    invertible glue; any valid (f, g, gamma) gives a homotopic result, so
    the cached first witness is used unless one is passed in.
    """
    B = F.base
    if (B.src1(q.u), q.x) != (B.src1(p.v), p.y):
        raise PreconditionError("premorphisms are not composable")
    if square is None:
        if wit is None:
            wit = PseudofilteredWitnesses(B)
        try:
            f, g, gamma = wit.square(p.v, q.u)
        except NonFilteredError as e:
            raise PreconditionError(f"no joining square: {e}") from None
    else:
        f, g, gamma = square
    d = B.tgt1(f)
    fib = F.fiber[d]
    x, y, z = p.x, p.y, q.y
    what = f"composite over ({f}, {g})"
    xi = _chain(
        fib,
        [
            _finv(fib, F.f2[(f, p.u)][x], what),
            F.ap_arr(f, p.xi),
            F.f2[(f, p.v)][y],
            F.comp2(gamma, y),
            _finv(fib, F.f2[(g, q.u)][y], what),
            F.ap_arr(g, q.xi),
            F.f2[(g, q.v)][z],
        ],
        what,
    )
    return Premorphism(d, B.hc1(f, p.u), B.hc1(g, q.v), xi, x, z)


def _homotopy_classes(
    F: CatValuedPSF, prems: list[Premorphism]
) -> dict[Premorphism, Premorphism]:
    """Map each premorphism to the least member of its class, verifying that
    pairwise search really produced an equivalence relation."""
    prems = sorted(prems, key=Premorphism.key)
    n = len(prems)
    rel = [[False] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            rel[i][j] = homotopic(F, prems[i], prems[j]) is not None
    for i in range(n):
        if not rel[i][i]:
            raise HighSeverityFinding(
                f"homotopy is not reflexive at {prems[i].key()}"
            )
        for j in range(n):
            if rel[i][j] != rel[j][i]:
                raise HighSeverityFinding(
                    f"homotopy is not symmetric at {prems[i].key()}, {prems[j].key()}"
                )
            for k in range(n):
                if rel[i][j] and rel[j][k] and not rel[i][k]:
                    raise HighSeverityFinding(
                        "homotopy is not transitive at "
                        f"{prems[i].key()}, {prems[j].key()}, {prems[k].key()}"
                    )
    out = {}
    for i, p in enumerate(prems):
        out[p] = prems[min(j for j in range(n) if rel[i][j])]
    return out


def colimit_direct(F: CatValuedPSF) -> ColimitCategory:
    """The quotient category of premorphisms, with its insertions and the
    comparison cells that make them a cocone."""
    B = F.base
    rep = check_pflt(B)
    if not rep.ok:
        raise PreconditionError(
            "base is not pseudofiltered: " + ", ".join(sorted(rep.laws()))
        )
    if not validate_catvalued(F).ok:
        raise PreconditionError("diagram fails validation")
    wit = PseudofilteredWitnesses(B)

    pairs = [
        (a, x) for a in B.iter_objects() for x in F.fiber[a].iter_objects()
    ]
    objects = {(a, x): _enc(a, x) for (a, x) in pairs}

    class_of: dict[Premorphism, CellId] = {}
    rep_of: dict[CellId, Premorphism] = {}
    arrows: dict[CellId, tuple[str, str]] = {}
    for a, x in pairs:
        for b, y in pairs:
            block = premorphisms_between(F, a, x, b, y)
            reps = _homotopy_classes(F, block)
            for p, r in reps.items():
                cid = _class_id(r)
                class_of[p] = cid
                rep_of[cid] = r
                arrows[cid] = (objects[(a, x)], objects[(b, y)])

    identity = {}
    for a, x in pairs:
        i = B.id1[a]
        identity[objects[(a, x)]] = class_of[
            Premorphism(a, i, i, F.fiber[a].identity[F.ap(i, x)], x, x)
        ]

    comp: dict[tuple[CellId, CellId], CellId] = {}
    ids = sorted(arrows)
    for qc in ids:
        for pc in ids:
            if arrows[pc][1] != arrows[qc][0]:
                continue
            comp[(qc, pc)] = class_of[
                compose_premorphisms(F, rep_of[pc], rep_of[qc], wit=wit)
            ]

    cat = FinCategory(
        objects=frozenset(objects.values()),
        arrows=arrows,
        identity=identity,
        comp=comp,
    )

    insertions = {}
    for a in B.iter_objects():
        i = B.id1[a]
        fib = F.fiber[a]
        insertions[a] = CatFunctor(
            dom=fib,
            cod=cat,
            on_obj={x: objects[(a, x)] for x in fib.iter_objects()},
            on_arr={
                s: class_of[
                    Premorphism(a, i, i, F.ap_arr(i, s), fib.src(s), fib.tgt(s))
                ]
                for s in fib.iter_arrows()
            },
        )

    cocone = {}
    for f in B.iter_one_cells():
        a, b = B.one_cells[f]
        j = B.id1[b]
        for x in F.fiber[a].iter_objects():
            fx = F.ap(f, x)
            cocone[(f, x)] = class_of[
                Premorphism(b, f, j, F.f0[b][fx], x, fx)
            ]

    return ColimitCategory(cat, insertions, cocone, class_of)


def validate_catvalued_cocone(
    F: CatValuedPSF,
    vertex: FinCategory,
    legs: dict[str, CatFunctor],
    cells: dict[tuple[CellId, str], CellId],
) -> ValidationReport:
    """Cocone under a category-valued diagram with a category as vertex.

    PC0: legs are functors into the vertex and every comparison cell is an
    invertible vertex arrow with the right boundary.  PC1: cells are natural
    in fiber arrows.  PC2: cells respect identities, composition (through
    the diagram's constraint data) and 2-cells of the base.
    """
    B = F.base
    out: list[Violation] = []
    bad = out.append

    for a in B.iter_objects():
        leg = legs.get(a)
        if leg is None or leg.dom is not F.fiber[a] or leg.cod is not vertex:
            bad(Violation("PC0", (a,), "missing or misattached leg"))
        elif not validate_functor(leg).ok:
            bad(Violation("PC0", (a,), "leg is not a functor"))
    if out:
        return ValidationReport(tuple(out))

    for f in B.iter_one_cells():
        a, b = B.one_cells[f]
        for x in F.fiber[a].iter_objects():
            k = cells.get((f, x))
            want = (legs[a].o(x), legs[b].o(F.ap(f, x)))
            if k is None or vertex.arrows.get(k) != want:
                bad(Violation("PC0", (f, x), "comparison cell missing or misaimed"))
            elif not vertex.is_iso(k):
                bad(Violation("PC0", (f, x), "comparison cell is not invertible"))
    if out:
        return ValidationReport(tuple(out))

    for f in B.iter_one_cells():
        a, b = B.one_cells[f]
        for s in F.fiber[a].iter_arrows():
            x, x2 = F.fiber[a].arrows[s]
            left = vertex.c(cells[(f, x2)], legs[a].a(s))
            right = vertex.c(legs[b].a(F.ap_arr(f, s)), cells[(f, x)])
            if left != right:
                bad(Violation("PC1", (f, s), "comparison cells are not natural"))

    for a in B.iter_objects():
        for x in F.fiber[a].iter_objects():
            if cells[(B.id1[a], x)] != legs[a].a(F.f0[a][x]):
                bad(Violation("PC2", (a, x), "identity cell differs from the unit"))
    for (g, f), gf in sorted(B.hcomp1.items()):
        a = B.src1(f)
        b = B.tgt1(g)
        for x in F.fiber[a].iter_objects():
            glued = vertex.c(
                legs[b].a(F.f2[(g, f)][x]),
                vertex.c(cells[(g, F.ap(f, x))], cells[(f, x)]),
            )
            if glued != cells[(gf, x)]:
                bad(Violation("PC2", (g, f, x), "cells do not respect composition"))
    for t in B.iter_two_cells():
        f, f2 = B.two_cells[t]
        a = B.src1(f)
        for x in F.fiber[a].iter_objects():
            moved = vertex.c(legs[B.tgt1(f)].a(F.comp2(t, x)), cells[(f, x)])
            if moved != cells[(f2, x)]:
                bad(Violation("PC2", (t, x), "cells do not respect 2-cells"))
    return ValidationReport(tuple(out))


def _localization_pipeline(
    F: CatValuedPSF,
) -> tuple[ElementsResult, FinCategory, dict, LocalizedCategory]:
    E = elements(F)
    quotient, qmap = pi0(E.total)
    w0 = induced_W0(E.total, E.cocart1)
    return E, quotient, qmap, localize_left(quotient, w0)


def colimit_via_localization(F: CatValuedPSF) -> FinCategory:
    """Elements, then components, then left fractions at co-Cartesian classes."""
    return _localization_pipeline(F)[3].category


def crosscheck_iso(F: CatValuedPSF) -> tuple[CatFunctor, CatFunctor]:
    """Build the comparison functors between the localization and the direct
    quotient, in both directions, and insist they are strictly inverse."""
    direct = colimit_direct(F)
    E, quotient, qmap, loc = _localization_pipeline(F)
    B = F.base

    members: dict[CellId, list[CellId]] = {}
    for e, r in qmap.items():
        members.setdefault(r, []).append(e)

    k_arr: dict[CellId, CellId] = {}
    for cid in sorted(set(direct.class_of.values())):
        p = min(
            (q for q, c in direct.class_of.items() if c == cid),
            key=Premorphism.key,
        )
        z = F.ap(p.v, p.y)
        apex_obj = _enc(p.apex, z)
        f_leg = _enc(p.u, p.xi, p.x)
        w_leg = _enc(p.v, F.fiber[p.apex].identity[z], p.y)
        k_arr[cid] = loc.class_of[Roof(apex_obj, qmap[w_leg], qmap[f_leg], "left")]

    h_arr: dict[CellId, CellId] = {}
    rep_roof: dict[CellId, tuple[str, CellId, CellId]] = {}
    for roof, cid in loc.class_of.items():
        key = roof.key()
        if cid not in rep_roof or key < rep_roof[cid]:
            rep_roof[cid] = key
    for cid, (apex_obj, w_cls, f_cls) in sorted(rep_roof.items()):
        apex, z = E.obj_of[apex_obj]
        fib = F.fiber[apex]
        u, mu, x = E.one_of[min(members[f_cls])]
        v, nu, y = E.one_of[
            min(e for e in members[w_cls] if e in E.cocart1)
        ]
        xi = fib.c(_finv(fib, nu, "roof denominator"), mu)
        h_arr[cid] = direct.class_of[Premorphism(apex, u, v, xi, x, y)]

    on_obj = {o: o for o in loc.category.iter_objects()}
    h = CatFunctor(loc.category, direct.category, on_obj, h_arr)
    k = CatFunctor(direct.category, loc.category, dict(on_obj), k_arr)

    ok = (
        validate_functor(h).ok
        and validate_functor(k).ok
        and all(h_arr[k_arr[c]] == c for c in k_arr)
        and all(k_arr[h_arr[c]] == c for c in h_arr)
        and is_iso_of_categories(h)
        and is_iso_of_categories(k)
    )
    if not ok:
        raise HighSeverityFinding(
            "direct and localized pseudo-colimits are not strictly isomorphic"
        )
    return h, k
