"""Hom-categories of localized bicategories, built two independent ways.

The slice of a bicategory by an arrow family indexes a hom-valued diagram;
its pseudo-colimit is one presentation of the 2-cells between fractions.
The other is the direct quotient of quintuple data by the printed pasting
equivalence.  crosscheck_homcat builds the translating functors and fails
loudly when they are not strictly inverse.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .axioms import _resolve_family, check_closure, check_flt, check_frc
from .colimit import ColimitCategory, Premorphism, colimit_direct
from .core import (
    ArrowFamily,
    CellId,
    FinBicategory,
    FinCategory,
    HighSeverityFinding,
    PreconditionError,
    StructureError,
    ValidationReport,
    Violation,
    family,
    op_dual,
    validate_category,
    vcomp_many,
)
from .functors import (
    CatFunctor,
    CatValuedPSF,
    PsfBicat,
    is_iso_of_categories,
    validate_functor,
)
from .grothendieck import _enc


def _inv2s(B: FinBicategory, c: CellId, what: str) -> CellId:
    r = B.inv2(c)
    if r is None:
        raise StructureError(f"2-cell {c} is not invertible ({what})")
    return r


def _members_are_arrows(B: FinBicategory, W: ArrowFamily) -> None:
    for w in sorted(W.members):
        if w not in B.one_cells:
            raise PreconditionError(f"family member {w} is not an arrow")


def family_member_iso(B: FinBicategory, W: ArrowFamily, g: CellId):
    """First (m, iso) with m a family member and iso: m => g invertible.

    Literal membership is covered by the identity 2-cell, so this is the
    up-to-iso reading of "lands in the family"; None when no member works.
    """
    for m in sorted(W.members):
        for c in B.two_between(m, g):
            if B.inv2(c) is not None:
                return m, c
    return None


def is_contractible_groupoid(C: FinCategory) -> bool:
    """Nonempty with exactly one arrow between any two objects.

    Singleton homs force the unique endomorphisms to be identities, so
    every arrow is automatically invertible."""
    if not C.objects:
        return False
    return all(
        len(C.hom(a, b)) == 1
        for a in C.iter_objects()
        for b in C.iter_objects()
    )


def biterminal_objects(B: FinBicategory) -> tuple[str, ...]:
    return tuple(
        t
        for t in B.iter_objects()
        if all(
            is_contractible_groupoid(B.hom_category(e, t))
            for e in B.iter_objects()
        )
    )


# ---------------------------------------------------------------------------
# the slice of a bicategory by an arrow family


@dataclass
class SliceBicategory:
    """Legs of the family into one object, with leg-compatible cells above.

    Objects are pairs (C, w) with w: C -> anchor a member; arrows (f, alpha)
    carry an invertible comparison alpha: w1 => w2 f; 2-cells are ambient
    2-cells pasting compatibly with the comparisons.  The decode tables map
    the encoded ids back to their parts; "cartesian" collects the arrows
    whose underlying 1-cell is itself a member.
    """

    bicat: FinBicategory
    base: FinBicategory
    anchor: str
    leg_family: ArrowFamily
    obj_of: dict[str, tuple[str, CellId]] = field(compare=False)
    one_of: dict[CellId, tuple[CellId, CellId, CellId]] = field(compare=False)
    two_of: dict[CellId, tuple[CellId, CellId, CellId]] = field(compare=False)


def _present(table: dict, key: str, what: str) -> str:
    if key not in table:
        raise StructureError(f"derived slice cell is missing ({what}): {key}")
    return key


def slice_over(
    B: FinBicategory, W, A: str
) -> tuple[SliceBicategory, PsfBicat]:
    """The slice bicategory of family legs into A, with its projection."""
    W = _resolve_family(B, W)
    _members_are_arrows(B, W)
    if A not in B.objects:
        raise PreconditionError(f"{A} is not an object")

    obj_of: dict[str, tuple[str, CellId]] = {}
    for w in sorted(W.members):
        if B.tgt1(w) == A:
            obj_of[_enc(B.src1(w), w)] = (B.src1(w), w)

    one: dict[CellId, tuple[str, str]] = {}
    one_of: dict[CellId, tuple[CellId, CellId, CellId]] = {}
    for o1, (c1, w1) in sorted(obj_of.items()):
        for o2, (c2, w2) in sorted(obj_of.items()):
            for f in B.hom1(c1, c2):
                for al in B.two_between(w1, B.hc1(w2, f)):
                    if B.inv2(al) is None:
                        continue
                    aid = _enc(f, al, w2)
                    one[aid] = (o1, o2)
                    one_of[aid] = (f, al, w2)

    two: dict[CellId, tuple[CellId, CellId]] = {}
    two_of: dict[CellId, tuple[CellId, CellId, CellId]] = {}
    for a1, ends in sorted(one.items()):
        f1, al1, w2 = one_of[a1]
        for a2, ends2 in sorted(one.items()):
            if ends != ends2:
                continue
            f2, al2, _ = one_of[a2]
            for xi in B.two_between(f1, f2):
                if B.vc(B.whisk_l(w2, xi), al1) == al2:
                    tid = _enc(xi, a1, a2)
                    two[tid] = (a1, a2)
                    two_of[tid] = (xi, a1, a2)

    def comp1(ag: CellId, af: CellId) -> CellId:
        g, beta, w3 = one_of[ag]
        f, alpha, _ = one_of[af]
        part = vcomp_many(B, [alpha, B.whisk_r(beta, f), B.assoc(w3, g, f)])
        return _present(one, _enc(B.hc1(g, f), part, w3), "composite")

    id1 = {}
    for o, (c, w) in obj_of.items():
        r = _inv2s(B, B.run(w), "identity leg comparison")
        id1[o] = _present(one, _enc(B.id1[c], r, w), "identity arrow")
    id2 = {
        aid: _present(two, _enc(B.id2[one_of[aid][0]], aid, aid), "identity 2-cell")
        for aid in one
    }

    vcomp = {}
    for t2, (mid2, a3) in two.items():
        for t1, (a1, mid1) in two.items():
            if mid1 != mid2:
                continue
            vcomp[(t2, t1)] = _present(
                two,
                _enc(B.vc(two_of[t2][0], two_of[t1][0]), a1, a3),
                "vertical composite",
            )

    hcomp1 = {}
    for ag, (e1, e2) in one.items():
        for af, (d1, d2) in one.items():
            if d2 == e1:
                hcomp1[(ag, af)] = comp1(ag, af)

    hcomp2 = {}
    for tg in two:
        g1, g2 = two[tg]
        for tf in two:
            f1, f2 = two[tf]
            if one[f1][1] != one[g1][0]:
                continue
            hcomp2[(tg, tf)] = _present(
                two,
                _enc(
                    B.hc2(two_of[tg][0], two_of[tf][0]),
                    hcomp1[(g1, f1)],
                    hcomp1[(g2, f2)],
                ),
                "horizontal composite",
            )

    lunitor = {}
    runitor = {}
    for aid, (o1, o2) in one.items():
        f = one_of[aid][0]
        lunitor[aid] = _present(
            two, _enc(B.lun(f), hcomp1[(id1[o2], aid)], aid), "left unitor"
        )
        runitor[aid] = _present(
            two, _enc(B.run(f), hcomp1[(aid, id1[o1])], aid), "right unitor"
        )

    associator = {}
    for a1, (m2, _e) in one.items():
        for a2, (m1, n2) in one.items():
            if n2 != m2:
                continue
            for a3, (_s, n1) in one.items():
                if n1 != m1:
                    continue
                associator[(a1, a2, a3)] = _present(
                    two,
                    _enc(
                        B.assoc(one_of[a1][0], one_of[a2][0], one_of[a3][0]),
                        hcomp1[(hcomp1[(a1, a2)], a3)],
                        hcomp1[(a1, hcomp1[(a2, a3)])],
                    ),
                    "associator",
                )

    cartesian = family(
        frozenset(a for a in one if one_of[a][0] in W), "cartesian"
    )
    S = FinBicategory(
        objects=frozenset(obj_of),
        one_cells=one,
        two_cells=two,
        id1=id1,
        id2=id2,
        vcomp=vcomp,
        hcomp1=hcomp1,
        hcomp2=hcomp2,
        lunitor=lunitor,
        runitor=runitor,
        associator=associator,
        families={"all": family(frozenset(one), "all"), "cartesian": cartesian},
    )
    U = PsfBicat(
        dom=S,
        cod=B,
        on0={o: c for o, (c, _w) in obj_of.items()},
        on1={aid: one_of[aid][0] for aid in one},
        on2={tid: two_of[tid][0] for tid in two},
        f2={
            key: B.id2[B.hc1(one_of[key[0]][0], one_of[key[1]][0])]
            for key in hcomp1
        },
        f0={o: B.id2[B.id1[c]] for o, (c, _w) in obj_of.items()},
    )
    return SliceBicategory(S, B, A, W, obj_of, one_of, two_of), U


def check_slice_cofiltered(
    B: FinBicategory, W, A: str, S: SliceBicategory | None = None
) -> ValidationReport:
    """The reversed slice must be filtered whenever the family admits a
    calculus of right fractions; a failure past the gate is a broken theorem."""
    W = _resolve_family(B, W)
    gate = check_frc(B, W)
    closure = check_closure(B, W)
    laws = sorted(gate.laws() | closure.laws())
    if laws:
        raise PreconditionError("right-fraction axioms fail: " + ", ".join(laws))
    if S is None:
        S, _ = slice_over(B, W, A)
    rep = check_flt(op_dual(S.bicat))
    if not rep.ok:
        raise HighSeverityFinding(
            f"slice over {A} is not cofiltered: " + ", ".join(sorted(rep.laws()))
        )
    return rep


def lift_square(
    S: SliceBicategory,
    cospan: tuple[CellId, CellId],
    D: str,
    h: CellId,
    g: CellId,
    gamma: CellId,
) -> tuple[str, CellId, CellId, CellId]:
    """Lift a filled square of the ambient bicategory against the projection.

    cospan holds slice arrows (u, alpha): (C,w) -> (C2,w2) <- (C',w'):
    (v, beta); h: D -> C and g: D -> C' close it below gamma: vg => uh
    invertible.  Returns the apex (D, wh), the two lifted legs, and gamma
    as a slice 2-cell; the second leg's comparison is the unique pasting
    making that lift valid.
    """
    B = S.base
    au, av = cospan
    if au not in S.one_of or av not in S.one_of:
        raise PreconditionError("cospan legs are not slice arrows")
    if S.bicat.one_cells[au][1] != S.bicat.one_cells[av][1]:
        raise PreconditionError("cospan legs do not share a target")
    u, alpha, w2 = S.one_of[au]
    v, beta, _ = S.one_of[av]
    c_obj, w = S.obj_of[S.bicat.one_cells[au][0]]
    cp_obj, wp = S.obj_of[S.bicat.one_cells[av][0]]
    if h not in B.hom1(D, c_obj) or g not in B.hom1(D, cp_obj):
        raise PreconditionError("the closing arrows do not fit the cospan")
    if gamma not in B.two_between(B.hc1(v, g), B.hc1(u, h)):
        raise PreconditionError("the filling cell does not fit the square")
    if B.inv2(gamma) is None:
        raise PreconditionError("the filling cell is not invertible")
    wh = B.hc1(w, h)
    if wh not in S.leg_family:
        raise PreconditionError("the lifted object leg is not in the family")

    box = vcomp_many(
        B,
        [
            B.whisk_r(alpha, h),
            B.assoc(w2, u, h),
            _inv2s(B, B.whisk_l(w2, gamma), "square lift"),
            _inv2s(B, B.assoc(w2, v, g), "square lift"),
            _inv2s(B, B.whisk_r(beta, g), "square lift"),
        ],
    )
    apex = _enc(D, wh)
    left = _enc(h, B.id2[wh], w)
    right = _enc(g, box, wp)
    for part, what in ((apex, "apex"), (left, "left leg"), (right, "right leg")):
        table = S.obj_of if what == "apex" else S.one_of
        if part not in table:
            raise HighSeverityFinding(f"square lift fell outside the slice ({what}): {part}")
    lifted = _enc(
        gamma, S.bicat.hc1(av, right), S.bicat.hc1(au, left)
    )
    if lifted not in S.two_of:
        raise HighSeverityFinding(f"lifted filling is not a slice 2-cell: {lifted}")
    return apex, left, right, lifted


# ---------------------------------------------------------------------------
# the hom-valued diagram indexed by the reversed slice


def build_FAB(
    B: FinBicategory, W, A: str, Bobj: str, S: SliceBicategory | None = None
) -> CatValuedPSF:
    """Hom-categories into Bobj, indexed by the reversed slice over A.

    A slice arrow acts by precomposition with its underlying 1-cell; the
    constraint cells are the ambient associators and inverse right unitors.
    """
    if S is None:
        S, _ = slice_over(B, W, A)
    if Bobj not in B.objects:
        raise PreconditionError(f"{Bobj} is not an object")
    base = op_dual(S.bicat)
    fiber = {o: B.hom_category(c, Bobj) for o, (c, _w) in S.obj_of.items()}

    on1 = {}
    for aid, (o1, o2) in S.bicat.one_cells.items():
        f = S.one_of[aid][0]
        dom = fiber[o2]
        on1[aid] = CatFunctor(
            dom=dom,
            cod=fiber[o1],
            on_obj={k: B.hc1(k, f) for k in dom.iter_objects()},
            on_arr={e: B.whisk_r(e, f) for e in dom.iter_arrows()},
        )
    on2 = {}
    for tid, (a1, _a2) in S.bicat.two_cells.items():
        xi = S.two_of[tid][0]
        src = S.bicat.one_cells[a1][1]
        on2[tid] = {k: B.whisk_l(k, xi) for k in fiber[src].iter_objects()}
    f2 = {}
    for (p, q), _pq in base.hcomp1.items():
        fp = S.one_of[p][0]
        fq = S.one_of[q][0]
        f2[(p, q)] = {
            k: B.assoc(k, fq, fp) for k in fiber[base.src1(q)].iter_objects()
        }
    f0 = {
        o: {
            k: _inv2s(B, B.run(k), "unit constraint")
            for k in fiber[o].iter_objects()
        }
        for o in S.obj_of
    }
    return CatValuedPSF(base=base, fiber=fiber, on1=on1, on2=on2, f2=f2, f0=f0)


# ---------------------------------------------------------------------------
# the quintuple presentation


@dataclass(frozen=True)
class Fraction2Cell:
    """A span (u, v) out of a shared apex with comparison cells.

    alpha: w1 u => w2 v invertible, xi: f1 u => f2 v, between triples
    src = (C1,w1,f1) and tgt = (C2,w2,f2) carried as encoded ids; the
    composite over u must land in the family up to an invertible 2-cell.
    """

    apex: str
    u: CellId
    v: CellId
    alpha: CellId
    xi: CellId
    src: str
    tgt: str

    def key(self) -> tuple[str, CellId, CellId, CellId, CellId, str, str]:
        return (self.apex, self.u, self.v, self.alpha, self.xi, self.src, self.tgt)


@dataclass
class HomCategory:
    """One hom of the localized bicategory: fraction legs and quintuple classes."""

    category: FinCategory
    source: str
    target: str
    triple_of: dict[str, tuple[str, CellId, CellId]] = field(compare=False)
    class_of: dict[Fraction2Cell, CellId] = field(compare=False)
    squares: dict[tuple[CellId, CellId], tuple] = field(compare=False)


def _cls_id(q: Fraction2Cell) -> CellId:
    return "[" + _enc(*q.key()) + "]"


class _HomBuild:
    """Shared enumeration state for one (source, target) hom computation."""

    def __init__(self, B: FinBicategory, W: ArrowFamily, A: str, Bobj: str):
        self.B = B
        self.W = W
        self.A = A
        self.Bobj = Bobj
        self.agree = check_closure(B, W).ok
        self.triple_of: dict[str, tuple[str, CellId, CellId]] = {}
        for w in sorted(W.members):
            if B.tgt1(w) != A:
                continue
            c = B.src1(w)
            for f in B.hom1(c, Bobj):
                self.triple_of[_enc(c, w, f)] = (c, w, f)
        self._iso: dict[CellId, tuple | None] = {}
        self._sq: dict[tuple, tuple] = {}
        self.class_of: dict[Fraction2Cell, CellId] = {}
        self.rep_of: dict[CellId, Fraction2Cell] = {}

    def member_iso(self, g: CellId):
        if g not in self._iso:
            found = family_member_iso(self.B, self.W, g)
            if self.agree and (g in self.W) != (found is not None):
                raise HighSeverityFinding(
                    f"family closure and the up-to-iso side condition disagree at {g}"
                )
            self._iso[g] = found
        return self._iso[g]

    def side_ok(self, g: CellId) -> bool:
        return self.member_iso(g) is not None

    def quintuples(self, t1: str, t2: str) -> list[Fraction2Cell]:
        B = self.B
        c1, w1, f1 = self.triple_of[t1]
        c2, w2, f2 = self.triple_of[t2]
        out = []
        for c in B.iter_objects():
            for u in B.hom1(c, c1):
                w1u = B.hc1(w1, u)
                if not self.side_ok(w1u):
                    continue
                f1u = B.hc1(f1, u)
                for v in B.hom1(c, c2):
                    for alpha in B.two_between(w1u, B.hc1(w2, v)):
                        if B.inv2(alpha) is None:
                            continue
                        for xi in B.two_between(f1u, B.hc1(f2, v)):
                            out.append(Fraction2Cell(c, u, v, alpha, xi, t1, t2))
        return out

    def homotopy(self, q1: Fraction2Cell, q2: Fraction2Cell):
        """First (Cbar, h, ht, gamma, delta) gluing q1 to q2, or None.

        The two glue equations split over (gamma, delta): each side of each
        equation mentions only one of the two cells once the boundary data
        is fixed.  So for every (h, ht) the deltas are indexed by their
        right-hand sides first, then each gamma's left-hand sides are looked
        up, replacing the product search without changing which witness is
        found first.
        """
        B = self.B
        if (q1.src, q1.tgt) != (q2.src, q2.tgt):
            raise PreconditionError("quintuples do not share a boundary")
        _c1, w1, f1 = self.triple_of[q1.src]
        _c2, w2, f2 = self.triple_of[q1.tgt]
        for cb in B.iter_objects():
            for h in B.hom1(cb, q1.apex):
                if not self.side_ok(B.hc1(B.hc1(w1, q1.u), h)):
                    continue
                a1 = B.assoc(w1, q1.u, h)
                a1f = B.assoc(f1, q1.u, h)
                lo_w = B.vc(B.assoc(w2, q1.v, h), B.whisk_r(q1.alpha, h))
                lo_f = B.vc(B.assoc(f2, q1.v, h), B.whisk_r(q1.xi, h))
                vh = B.hc1(q1.v, h)
                uh = B.hc1(q1.u, h)
                for ht in B.hom1(cb, q2.apex):
                    gammas = [
                        g
                        for g in B.two_between(uh, B.hc1(q2.u, ht))
                        if B.inv2(g) is not None
                    ]
                    if not gammas:
                        continue
                    c2 = _inv2s(B, B.assoc(w2, q2.v, ht), "homotopy glue")
                    c2f = _inv2s(B, B.assoc(f2, q2.v, ht), "homotopy glue")
                    by_rhs: dict[tuple[CellId, CellId], CellId] = {}
                    for delta in B.two_between(vh, B.hc1(q2.v, ht)):
                        if B.inv2(delta) is None:
                            continue
                        key = (
                            B.vc(c2, B.vc(B.whisk_l(w2, delta), lo_w)),
                            B.vc(c2f, B.vc(B.whisk_l(f2, delta), lo_f)),
                        )
                        by_rhs.setdefault(key, delta)
                    if not by_rhs:
                        continue
                    c1 = _inv2s(B, B.assoc(w1, q2.u, ht), "homotopy glue")
                    c1f = _inv2s(B, B.assoc(f1, q2.u, ht), "homotopy glue")
                    d1 = B.whisk_r(q2.alpha, ht)
                    d1f = B.whisk_r(q2.xi, ht)
                    for gamma in gammas:
                        key = (
                            B.vc(d1, B.vc(c1, B.vc(B.whisk_l(w1, gamma), a1))),
                            B.vc(d1f, B.vc(c1f, B.vc(B.whisk_l(f1, gamma), a1f))),
                        )
                        delta = by_rhs.get(key)
                        if delta is not None:
                            return cb, h, ht, gamma, delta
        return None

    def _classes(
        self, block: list[Fraction2Cell]
    ) -> dict[Fraction2Cell, Fraction2Cell]:
        block = sorted(block, key=Fraction2Cell.key)
        n = len(block)
        rel = [[False] * n for _ in range(n)]
        for i in range(n):
            for j in range(n):
                rel[i][j] = self.homotopy(block[i], block[j]) is not None
        for i in range(n):
            if not rel[i][i]:
                raise HighSeverityFinding(
                    f"quintuple equivalence is not reflexive at {block[i].key()}"
                )
            for j in range(n):
                if rel[i][j] != rel[j][i]:
                    raise HighSeverityFinding(
                        "quintuple equivalence is not symmetric at "
                        f"{block[i].key()}, {block[j].key()}"
                    )
                for k in range(n):
                    if rel[i][j] and rel[j][k] and not rel[i][k]:
                        raise HighSeverityFinding(
                            "quintuple equivalence is not transitive at "
                            f"{block[i].key()}, {block[j].key()}, {block[k].key()}"
                        )
        return {
            p: block[min(j for j in range(n) if rel[i][j])]
            for i, p in enumerate(block)
        }

    def all_squares(self, q1: Fraction2Cell, q2: Fraction2Cell) -> list[tuple]:
        """Every (D, h, g, gamma) joining the composable pair q1 then q2."""
        B = self.B
        _c1, w1, _f1 = self.triple_of[q1.src]
        out = []
        for d in B.iter_objects():
            for h in B.hom1(d, q1.apex):
                if not self.side_ok(B.hc1(w1, B.hc1(q1.u, h))):
                    continue
                for g in B.hom1(d, q2.apex):
                    for gamma in B.two_between(
                        B.hc1(q2.u, g), B.hc1(q1.v, h)
                    ):
                        if B.inv2(gamma) is not None:
                            out.append((d, h, g, gamma))
        return out

    def square(self, q1: Fraction2Cell, q2: Fraction2Cell) -> tuple:
        _c1, w1, _f1 = self.triple_of[q1.src]
        key = (w1, q1.u, q1.v, q2.u)
        if key not in self._sq:
            found = self.all_squares(q1, q2)
            if not found:
                raise HighSeverityFinding(
                    "no joining square with an invertible filling over "
                    f"({q1.key()}, {q2.key()}); the family may lack closure"
                )
            self._sq[key] = found[0]
        return self._sq[key]

    def compose(
        self, q1: Fraction2Cell, q2: Fraction2Cell, square: tuple
    ) -> Fraction2Cell:
        """q1 then q2, pasted over a joining square, left-nested throughout."""
        B = self.B
        d, h, g, gamma = square
        _c1, w1, f1 = self.triple_of[q1.src]
        _c2, w2, f2 = self.triple_of[q1.tgt]
        _c3, w3, f3 = self.triple_of[q2.tgt]
        inv_gamma = _inv2s(B, gamma, "joining square")
        alpha = vcomp_many(
            B,
            [
                _inv2s(B, B.assoc(w1, q1.u, h), "composite"),
                B.whisk_r(q1.alpha, h),
                B.assoc(w2, q1.v, h),
                B.whisk_l(w2, inv_gamma),
                _inv2s(B, B.assoc(w2, q2.u, g), "composite"),
                B.whisk_r(q2.alpha, g),
                B.assoc(w3, q2.v, g),
            ],
        )
        xi = vcomp_many(
            B,
            [
                _inv2s(B, B.assoc(f1, q1.u, h), "composite"),
                B.whisk_r(q1.xi, h),
                B.assoc(f2, q1.v, h),
                B.whisk_l(f2, inv_gamma),
                _inv2s(B, B.assoc(f2, q2.u, g), "composite"),
                B.whisk_r(q2.xi, g),
                B.assoc(f3, q2.v, g),
            ],
        )
        return Fraction2Cell(
            d, B.hc1(q1.u, h), B.hc1(q2.v, g), alpha, xi, q1.src, q2.tgt
        )

    def build(self) -> HomCategory:
        B = self.B
        arrows: dict[CellId, tuple[str, str]] = {}
        for t1 in sorted(self.triple_of):
            for t2 in sorted(self.triple_of):
                block = self.quintuples(t1, t2)
                for q, r in self._classes(block).items():
                    cid = _cls_id(r)
                    self.class_of[q] = cid
                    self.rep_of[cid] = r
                    arrows[cid] = (t1, t2)

        identity = {}
        for t, (c, w, f) in self.triple_of.items():
            i = B.id1[c]
            identity[t] = self.class_of[
                Fraction2Cell(c, i, i, B.id2[B.hc1(w, i)], B.id2[B.hc1(f, i)], t, t)
            ]

        comp: dict[tuple[CellId, CellId], CellId] = {}
        squares: dict[tuple[CellId, CellId], tuple] = {}
        for c2 in sorted(arrows):
            for c1 in sorted(arrows):
                if arrows[c1][1] != arrows[c2][0]:
                    continue
                q1, q2 = self.rep_of[c1], self.rep_of[c2]
                sq = self.square(q1, q2)
                try:
                    comp[(c2, c1)] = self.class_of[self.compose(q1, q2, sq)]
                except KeyError:
                    raise HighSeverityFinding(
                        f"composite over ({c1}, {c2}) left the quintuple presentation"
                    ) from None
                squares[(c2, c1)] = sq

        cat = FinCategory(
            objects=frozenset(self.triple_of),
            arrows=arrows,
            identity=identity,
            comp=comp,
        )
        rep = validate_category(cat)
        if not rep.ok:
            raise HighSeverityFinding(
                "fraction hom-category fails the category laws: "
                + ", ".join(str(v) for v in rep.violations)
            )
        return HomCategory(
            cat, self.A, self.Bobj, dict(self.triple_of), self.class_of, squares
        )


def _frc_gate(B: FinBicategory, W: ArrowFamily) -> None:
    gate = check_frc(B, W)
    if not gate.ok:
        raise PreconditionError(
            "right-fraction axioms fail: " + ", ".join(sorted(gate.laws()))
        )


def homcat_pronk(B: FinBicategory, W, A: str, Bobj: str) -> HomCategory:
    """The hom-category of fractions from A to Bobj as quintuple classes."""
    W = _resolve_family(B, W)
    _members_are_arrows(B, W)
    if A not in B.objects or Bobj not in B.objects:
        raise PreconditionError("source or target is not an object")
    _frc_gate(B, W)
    return _HomBuild(B, W, A, Bobj).build()


def hom_inclusion(B: FinBicategory, hom: HomCategory) -> CatFunctor:
    """The canonical functor from the plain hom-category into the fractions
    hom; an equivalence whenever the family consists of equivalences."""
    A, Bobj = hom.source, hom.target
    dom = B.hom_category(A, Bobj)
    i = B.id1[A]
    on_obj = {x: _enc(A, i, x) for x in dom.iter_objects()}
    for o in on_obj.values():
        if o not in hom.category.objects:
            raise PreconditionError(
                "the identity arrow at the source is not a family leg"
            )
    alpha = B.id2[B.hc1(i, i)]
    on_arr = {}
    for e in dom.iter_arrows():
        x, x2 = dom.arrows[e]
        xi = vcomp_many(B, [B.run(x), e, _inv2s(B, B.run(x2), "hom inclusion")])
        on_arr[e] = hom.class_of[
            Fraction2Cell(A, i, i, alpha, xi, on_obj[x], on_obj[x2])
        ]
    return CatFunctor(dom=dom, cod=hom.category, on_obj=on_obj, on_arr=on_arr)


def check_gamma_independence(
    B: FinBicategory, W, A: str, Bobj: str
) -> ValidationReport:
    """Recompute every composite across all joining squares; the classes
    must not move."""
    W = _resolve_family(B, W)
    _members_are_arrows(B, W)
    _frc_gate(B, W)
    hb = _HomBuild(B, W, A, Bobj)
    hom = hb.build()
    out: list[Violation] = []
    for (c2, c1), _chosen in sorted(hom.squares.items()):
        q1, q2 = hb.rep_of[c1], hb.rep_of[c2]
        expected = hom.category.comp[(c2, c1)]
        for sq in hb.all_squares(q1, q2):
            if hb.class_of[hb.compose(q1, q2, sq)] != expected:
                out.append(
                    Violation(
                        "gamma-independence",
                        (c1, c2) + sq[1:],
                        "composite class depends on the joining square",
                    )
                )
    return ValidationReport(tuple(out))


# ---------------------------------------------------------------------------
# the same hom as a pseudo-colimit, and the comparison


def homcat_via_colimit(
    B: FinBicategory, W, A: str, Bobj: str
) -> ColimitCategory:
    W = _resolve_family(B, W)
    S, _ = slice_over(B, W, A)
    check_slice_cofiltered(B, W, A, S=S)
    return colimit_direct(build_FAB(B, W, A, Bobj, S=S))


def crosscheck_homcat(
    B: FinBicategory, W, A: str, Bobj: str
) -> tuple[CatFunctor, CatFunctor]:
    """Translate between the colimit and quintuple presentations both ways.

    Every premorphism decodes to a quintuple by collapsing its two leg
    comparisons; every quintuple re-expands by picking a family member
    isomorphic to its blurred leg.  Both maps are checked classwise on all
    representatives, as functors, and as strict mutual inverses.
    """
    W = _resolve_family(B, W)
    S, _ = slice_over(B, W, A)
    check_slice_cofiltered(B, W, A, S=S)
    F = build_FAB(B, W, A, Bobj, S=S)
    col = colimit_direct(F)
    pronk = homcat_pronk(B, W, A, Bobj)

    h_obj = {}
    for o, (c, w) in S.obj_of.items():
        for x in F.fiber[o].iter_objects():
            h_obj[_enc(o, x)] = _enc(c, w, x)
    if set(h_obj) != set(col.category.objects) or set(h_obj.values()) != set(
        pronk.category.objects
    ):
        raise HighSeverityFinding("hom presentations disagree on objects")
    k_obj = {v: k for k, v in h_obj.items()}

    def to_quintuple(p: Premorphism, cid: CellId) -> Fraction2Cell:
        u, alpha_u, _w1 = S.one_of[p.u]
        v, alpha_v, _w2 = S.one_of[p.v]
        c_apex = S.obj_of[p.apex][0]
        alpha = B.vc(alpha_v, _inv2s(B, alpha_u, "leg comparison"))
        s, t = col.category.arrows[cid]
        return Fraction2Cell(c_apex, u, v, alpha, p.xi, h_obj[s], h_obj[t])

    h_arr: dict[CellId, CellId] = {}
    for p, cid in col.class_of.items():
        try:
            image = pronk.class_of[to_quintuple(p, cid)]
        except KeyError:
            raise HighSeverityFinding(
                f"premorphism {p.key()} does not decode to a quintuple"
            ) from None
        if h_arr.setdefault(cid, image) != image:
            raise HighSeverityFinding(
                f"homotopic premorphisms decode to different classes at {cid}"
            )

    def to_premorphism(q: Fraction2Cell) -> Premorphism:
        _c1, w1, f1 = pronk.triple_of[q.src]
        _c2, w2, f2 = pronk.triple_of[q.tgt]
        found = family_member_iso(B, W, B.hc1(w1, q.u))
        if found is None:
            raise HighSeverityFinding(
                f"quintuple {q.key()} has no family leg over its apex"
            )
        m, alpha_u = found
        alpha_v = B.vc(q.alpha, alpha_u)
        return Premorphism(
            _enc(q.apex, m),
            _enc(q.u, alpha_u, w1),
            _enc(q.v, alpha_v, w2),
            q.xi,
            f1,
            f2,
        )

    k_arr: dict[CellId, CellId] = {}
    for q, cid in pronk.class_of.items():
        try:
            image = col.class_of[to_premorphism(q)]
        except KeyError:
            raise HighSeverityFinding(
                f"quintuple {q.key()} does not re-expand to a premorphism"
            ) from None
        if k_arr.setdefault(cid, image) != image:
            raise HighSeverityFinding(
                f"equivalent quintuples re-expand to different classes at {cid}"
            )

    H = CatFunctor(dom=col.category, cod=pronk.category, on_obj=h_obj, on_arr=h_arr)
    K = CatFunctor(dom=pronk.category, cod=col.category, on_obj=k_obj, on_arr=k_arr)
    ok = (
        validate_functor(H).ok
        and validate_functor(K).ok
        and all(k_arr[h_arr[c]] == c for c in h_arr)
        and all(h_arr[k_arr[c]] == c for c in k_arr)
        and is_iso_of_categories(H)
        and is_iso_of_categories(K)
    )
    if not ok:
        raise HighSeverityFinding(
            "colimit and quintuple hom-categories are not strictly isomorphic"
        )
    return H, K


def check_biterminal_preserved(B: FinBicategory, W) -> ValidationReport:
    """Localizing must keep a biterminal object biterminal: every fraction
    hom into it stays a contractible groupoid."""
    W = _resolve_family(B, W)
    _members_are_arrows(B, W)
    terms = biterminal_objects(B)
    if not terms:
        raise PreconditionError("no biterminal object")
    _frc_gate(B, W)
    t = terms[0]
    out: list[Violation] = []
    for a in B.iter_objects():
        hom = homcat_pronk(B, W, a, t)
        if not is_contractible_groupoid(hom.category):
            out.append(
                Violation(
                    "biterminal-preserved",
                    (a, t),
                    "fraction hom into the biterminal object is not contractible",
                )
            )
    return ValidationReport(tuple(out))
