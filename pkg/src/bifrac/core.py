"""Finite bicategories and categories presented by explicit cell tables.

Every cell is a string id, unique within its sort.  Equality of cells is
identity of table atoms; equality of composites is equality of the looked-up
results.  All values are treated as immutable after construction; validation
is expected to run before any other operation on a presentation.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

CellId = str


class StructureError(Exception):
    """An id in a presentation does not resolve or a table is malformed."""


class PreconditionError(Exception):
    """A documented precondition of an operation does not hold on this input."""


class TypedExprError(Exception):
    """A pasting expression has a boundary mismatch at the recorded node path."""

    def __init__(self, message: str, path: tuple[int, ...]):
        super().__init__(f"{message} (node path {list(path)})")
        self.path = path


class HighSeverityFinding(Exception):
    """A cross-checked identity that must hold on valid inputs failed."""


@dataclass(frozen=True)
class Violation:
    law: str
    cells: tuple[CellId, ...]
    message: str

    def __str__(self) -> str:
        return f"[{self.law}] {self.message} {self.cells}"


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple[Violation, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.violations

    def laws(self) -> set[str]:
        return {v.law for v in self.violations}

    def by_law(self, law: str) -> list[Violation]:
        return [v for v in self.violations if v.law == law]

    def to_dict(self) -> dict:
        return {
            "ok": self.ok,
            "violations": [
                {"law": v.law, "cells": list(v.cells), "message": v.message}
                for v in self.violations
            ],
        }

    def __str__(self) -> str:
        if self.ok:
            return "ok"
        return "\n".join(str(v) for v in self.violations)


@dataclass(frozen=True)
class ArrowFamily:
    """A designated family of 1-cells (or category arrows), e.g. a class W."""

    members: frozenset[CellId]
    name: str = ""

    def __contains__(self, cell: CellId) -> bool:
        return cell in self.members

    def __iter__(self):
        return iter(sorted(self.members))

    def __len__(self) -> int:
        return len(self.members)


def family(members, name: str = "") -> ArrowFamily:
    return ArrowFamily(frozenset(members), name)


# ---------------------------------------------------------------------------
# finite categories


@dataclass
class FinCategory:
    objects: frozenset[str]
    arrows: dict[CellId, tuple[str, str]]
    identity: dict[str, CellId]
    comp: dict[tuple[CellId, CellId], CellId]
    families: dict[str, ArrowFamily] = field(default_factory=dict, compare=False)
    _inv: dict = field(default_factory=dict, repr=False, compare=False)
    _hom: dict = field(default_factory=dict, repr=False, compare=False)

    def src(self, a: CellId) -> str:
        return self.arrows[a][0]

    def tgt(self, a: CellId) -> str:
        return self.arrows[a][1]

    def hom(self, a: str, b: str) -> tuple[CellId, ...]:
        if not self._hom:
            idx: dict[tuple[str, str], list[CellId]] = {}
            for f in sorted(self.arrows):
                idx.setdefault(self.arrows[f], []).append(f)
            self._hom.update({k: tuple(v) for k, v in idx.items()})
        return self._hom.get((a, b), ())

    def iter_objects(self):
        return sorted(self.objects)

    def iter_arrows(self):
        return sorted(self.arrows)

    def composable(self):
        """Yield (g, f) with g after f, in lexicographic order."""
        for g in self.iter_arrows():
            for f in self.iter_arrows():
                if self.tgt(f) == self.src(g):
                    yield g, f

    def c(self, g: CellId, f: CellId) -> CellId:
        return self.comp[(g, f)]

    def inverse(self, a: CellId) -> CellId | None:
        if a in self._inv:
            return self._inv[a]
        s, t = self.arrows[a]
        found = None
        for b in self.hom(t, s):
            if (
                self.comp.get((b, a)) == self.identity[s]
                and self.comp.get((a, b)) == self.identity[t]
            ):
                found = b
                break
        self._inv[a] = found
        return found

    def is_iso(self, a: CellId) -> bool:
        return self.inverse(a) is not None


def validate_category(C: FinCategory) -> ValidationReport:
    out: list[Violation] = []
    bad = out.append
    for a, (s, t) in sorted(C.arrows.items()):
        if s not in C.objects or t not in C.objects:
            bad(Violation("structure", (a,), "arrow endpoint is not an object"))
    for x in C.iter_objects():
        i = C.identity.get(x)
        if i is None:
            bad(Violation("structure", (x,), "missing identity arrow"))
        elif C.arrows.get(i) != (x, x):
            bad(Violation("structure", (x, i), "identity arrow has wrong endpoints"))
    for key, r in sorted(C.comp.items()):
        g, f = key
        if f not in C.arrows or g not in C.arrows or r not in C.arrows:
            bad(Violation("structure", (g, f, r), "composition entry names unknown arrow"))
    if out:
        return ValidationReport(tuple(out))

    for g, f in C.composable():
        r = C.comp.get((g, f))
        if r is None:
            bad(Violation("category", (g, f), "missing composite"))
        elif C.arrows[r] != (C.src(f), C.tgt(g)):
            bad(Violation("category", (g, f, r), "composite has wrong endpoints"))
    for (g, f) in sorted(C.comp):
        if C.tgt(f) != C.src(g):
            bad(Violation("category", (g, f), "non-composable pair tabled"))
    if out:
        return ValidationReport(tuple(out))

    for a in C.iter_arrows():
        s, t = C.arrows[a]
        if C.c(a, C.identity[s]) != a or C.c(C.identity[t], a) != a:
            bad(Violation("category", (a,), "identity is not neutral"))
    for h in C.iter_arrows():
        for g in C.iter_arrows():
            if C.tgt(g) != C.src(h):
                continue
            for f in C.iter_arrows():
                if C.tgt(f) != C.src(g):
                    continue
                if C.c(C.c(h, g), f) != C.c(h, C.c(g, f)):
                    bad(Violation("category", (h, g, f), "composition not associative"))
    return ValidationReport(tuple(out))


def op_category(C: FinCategory) -> FinCategory:
    return FinCategory(
        objects=C.objects,
        arrows={a: (t, s) for a, (s, t) in C.arrows.items()},
        identity=dict(C.identity),
        comp={(f, g): r for (g, f), r in C.comp.items()},
    )


# ---------------------------------------------------------------------------
# finite bicategories


@dataclass
class FinBicategory:
    objects: frozenset[str]
    one_cells: dict[CellId, tuple[str, str]]
    two_cells: dict[CellId, tuple[CellId, CellId]]
    id1: dict[str, CellId]
    id2: dict[CellId, CellId]
    vcomp: dict[tuple[CellId, CellId], CellId]
    hcomp1: dict[tuple[CellId, CellId], CellId]
    hcomp2: dict[tuple[CellId, CellId], CellId]
    lunitor: dict[CellId, CellId]
    runitor: dict[CellId, CellId]
    associator: dict[tuple[CellId, CellId, CellId], CellId]
    families: dict[str, ArrowFamily] = field(default_factory=dict, compare=False)
    _inv2: dict = field(default_factory=dict, repr=False, compare=False)
    _hom1: dict = field(default_factory=dict, repr=False, compare=False)
    _two_between: dict = field(default_factory=dict, repr=False, compare=False)

    # -- boundaries

    def src1(self, f: CellId) -> str:
        return self.one_cells[f][0]

    def tgt1(self, f: CellId) -> str:
        return self.one_cells[f][1]

    def src2(self, a: CellId) -> CellId:
        return self.two_cells[a][0]

    def tgt2(self, a: CellId) -> CellId:
        return self.two_cells[a][1]

    def hom1(self, a: str, b: str) -> tuple[CellId, ...]:
        if not self._hom1:
            idx: dict[tuple[str, str], list[CellId]] = {}
            for f in sorted(self.one_cells):
                idx.setdefault(self.one_cells[f], []).append(f)
            self._hom1.update({k: tuple(v) for k, v in idx.items()})
        return self._hom1.get((a, b), ())

    def two_between(self, f: CellId, g: CellId) -> tuple[CellId, ...]:
        if not self._two_between:
            idx: dict[tuple[CellId, CellId], list[CellId]] = {}
            for a in sorted(self.two_cells):
                idx.setdefault(self.two_cells[a], []).append(a)
            self._two_between.update({k: tuple(v) for k, v in idx.items()})
        return self._two_between.get((f, g), ())

    def two_cells_of_hom(self, a: str, b: str) -> list[CellId]:
        out = []
        for f in self.hom1(a, b):
            for g in self.hom1(a, b):
                out.extend(self.two_between(f, g))
        return sorted(out)

    def iter_objects(self):
        return sorted(self.objects)

    def iter_one_cells(self):
        return sorted(self.one_cells)

    def iter_two_cells(self):
        return sorted(self.two_cells)

    # -- table lookups

    def vc(self, b: CellId, a: CellId) -> CellId:
        return self.vcomp[(b, a)]

    def hc1(self, g: CellId, f: CellId) -> CellId:
        return self.hcomp1[(g, f)]

    def hc2(self, b: CellId, a: CellId) -> CellId:
        return self.hcomp2[(b, a)]

    def lun(self, u: CellId) -> CellId:
        return self.lunitor[u]

    def run(self, u: CellId) -> CellId:
        return self.runitor[u]

    def assoc(self, u: CellId, v: CellId, w: CellId) -> CellId:
        return self.associator[(u, v, w)]

    def whisk_l(self, g: CellId, a: CellId) -> CellId:
        """g * a for a 1-cell g; the identity-on-g whiskering."""
        return self.hc2(self.id2[g], a)

    def whisk_r(self, b: CellId, f: CellId) -> CellId:
        return self.hc2(b, self.id2[f])

    def inv2(self, a: CellId) -> CellId | None:
        if a in self._inv2:
            return self._inv2[a]
        f, g = self.two_cells[a]
        found = None
        for b in self.two_between(g, f):
            if (
                self.vcomp.get((b, a)) == self.id2[f]
                and self.vcomp.get((a, b)) == self.id2[g]
            ):
                found = b
                break
        self._inv2[a] = found
        return found

    def hom_category(self, a: str, b: str) -> FinCategory:
        """The hom-category B(a, b): objects 1-cells, arrows 2-cells, vcomp."""
        one = self.hom1(a, b)
        arrows = {}
        for f in one:
            for g in one:
                for c in self.two_between(f, g):
                    arrows[c] = (f, g)
        return FinCategory(
            objects=frozenset(one),
            arrows=arrows,
            identity={f: self.id2[f] for f in one},
            comp={k: v for k, v in self.vcomp.items() if k[0] in arrows and k[1] in arrows},
        )


def _structure_stage(B: FinBicategory) -> list[Violation]:
    out: list[Violation] = []
    bad = out.append
    for f, (s, t) in sorted(B.one_cells.items()):
        if s not in B.objects or t not in B.objects:
            bad(Violation("structure", (f,), "1-cell endpoint is not an object"))
    for a, (f, g) in sorted(B.two_cells.items()):
        if f not in B.one_cells or g not in B.one_cells:
            bad(Violation("structure", (a,), "2-cell boundary is not a 1-cell"))
        elif B.one_cells[f] != B.one_cells[g]:
            bad(Violation("structure", (a,), "2-cell boundary 1-cells are not parallel"))
    for x in sorted(B.objects):
        i = B.id1.get(x)
        if i is None:
            bad(Violation("structure", (x,), "missing identity 1-cell"))
        elif B.one_cells.get(i) != (x, x):
            bad(Violation("structure", (x, i), "identity 1-cell has wrong endpoints"))
    for f in B.iter_one_cells():
        i = B.id2.get(f)
        if i is None:
            bad(Violation("structure", (f,), "missing identity 2-cell"))
        elif B.two_cells.get(i) != (f, f):
            bad(Violation("structure", (f, i), "identity 2-cell has wrong boundary"))
    if out:
        return out

    # hcomp1 is a total function on composable pairs
    for g in B.iter_one_cells():
        for f in B.iter_one_cells():
            if B.tgt1(f) != B.src1(g):
                continue
            r = B.hcomp1.get((g, f))
            if r is None:
                bad(Violation("structure", (g, f), "missing horizontal composite"))
            elif B.one_cells[r] != (B.src1(f), B.tgt1(g)):
                bad(Violation("structure", (g, f, r), "horizontal composite has wrong endpoints"))
    for (g, f) in sorted(B.hcomp1):
        if g not in B.one_cells or f not in B.one_cells:
            bad(Violation("structure", (g, f), "hcomp1 entry names unknown 1-cell"))
        elif B.tgt1(f) != B.src1(g):
            bad(Violation("structure", (g, f), "hcomp1 tabled on non-composable pair"))
    if out:
        return out

    # hcomp2 total on horizontally composable 2-cell pairs
    for b in B.iter_two_cells():
        for a in B.iter_two_cells():
            if B.tgt1(B.src2(a)) != B.src1(B.src2(b)):
                continue
            r = B.hcomp2.get((b, a))
            want = (B.hc1(B.src2(b), B.src2(a)), B.hc1(B.tgt2(b), B.tgt2(a)))
            if r is None:
                bad(Violation("structure", (b, a), "missing horizontal composite of 2-cells"))
            elif B.two_cells[r] != want:
                bad(Violation("structure", (b, a, r), "hcomp2 result has wrong boundary"))
    for u in B.iter_one_cells():
        s, t = B.one_cells[u]
        for table, name, source in (
            (B.lunitor, "lunitor", B.hcomp1.get((B.id1[t], u))),
            (B.runitor, "runitor", B.hcomp1.get((u, B.id1[s]))),
        ):
            c = table.get(u)
            if c is None:
                bad(Violation("structure", (u,), f"missing {name}"))
            elif B.two_cells.get(c) != (source, u):
                bad(Violation("structure", (u, c), f"{name} has wrong boundary"))
    for w in B.iter_one_cells():
        for v in B.iter_one_cells():
            if B.tgt1(w) != B.src1(v):
                continue
            for u in B.iter_one_cells():
                if B.tgt1(v) != B.src1(u):
                    continue
                c = B.associator.get((u, v, w))
                want = (B.hc1(B.hc1(u, v), w), B.hc1(u, B.hc1(v, w)))
                if c is None:
                    bad(Violation("structure", (u, v, w), "missing associator"))
                elif B.two_cells.get(c) != want:
                    bad(Violation("structure", (u, v, w, c), "associator has wrong boundary"))
    return out


def _local_category_stage(B: FinBicategory) -> list[Violation]:
    out: list[Violation] = []
    bad = out.append
    by_hom: dict[tuple[str, str], list[CellId]] = {}
    for a in B.iter_two_cells():
        by_hom.setdefault(B.one_cells[B.src2(a)], []).append(a)
    for (x, y), cells in sorted(by_hom.items()):
        for b in cells:
            for a in cells:
                if B.tgt2(a) != B.src2(b):
                    continue
                r = B.vcomp.get((b, a))
                if r is None:
                    bad(Violation("local-category", (b, a), f"missing vertical composite in hom({x},{y})"))
                elif B.two_cells[r] != (B.src2(a), B.tgt2(b)):
                    bad(Violation("local-category", (b, a, r), f"vertical composite has wrong boundary in hom({x},{y})"))
    for (b, a) in sorted(B.vcomp):
        if B.tgt2(a) != B.src2(b):
            bad(Violation("local-category", (b, a), "non-composable pair tabled in vcomp"))
    if out:
        return out
    for a in B.iter_two_cells():
        f, g = B.two_cells[a]
        if B.vc(B.id2[g], a) != a or B.vc(a, B.id2[f]) != a:
            bad(Violation("local-category", (a,), "identity 2-cell is not neutral"))
    for (x, y), cells in sorted(by_hom.items()):
        for c in cells:
            for b in cells:
                if B.tgt2(b) != B.src2(c):
                    continue
                for a in cells:
                    if B.tgt2(a) != B.src2(b):
                        continue
                    if B.vc(B.vc(c, b), a) != B.vc(c, B.vc(b, a)):
                        bad(Violation("local-category", (c, b, a), f"vertical composition not associative in hom({x},{y})"))
    return out


def _functoriality_stage(B: FinBicategory) -> list[Violation]:
    out: list[Violation] = []
    bad = out.append
    for g in B.iter_one_cells():
        for f in B.iter_one_cells():
            if B.tgt1(f) != B.src1(g):
                continue
            if B.hc2(B.id2[g], B.id2[f]) != B.id2[B.hc1(g, f)]:
                bad(Violation("hcomp2-identity", (g, f), "horizontal composite of identities is not the identity"))
    two_by_hom: dict[tuple[str, str], list[CellId]] = {}
    for a in B.iter_two_cells():
        two_by_hom.setdefault(B.one_cells[B.src2(a)], []).append(a)
    homs = sorted(two_by_hom)
    for (a1, b1) in homs:
        for (a2, b2) in homs:
            if b1 != a2:
                continue
            left = two_by_hom[(a1, b1)]
            right = two_by_hom[(a2, b2)]
            lpairs = [(p2, p1) for p2 in left for p1 in left if B.tgt2(p1) == B.src2(p2)]
            rpairs = [(q2, q1) for q2 in right for q1 in right if B.tgt2(q1) == B.src2(q2)]
            for q2, q1 in rpairs:
                for p2, p1 in lpairs:
                    lhs = B.hc2(B.vc(q2, q1), B.vc(p2, p1))
                    rhs = B.vc(B.hc2(q2, p2), B.hc2(q1, p1))
                    if lhs != rhs:
                        bad(Violation("interchange", (q2, q1, p2, p1), "interchange law fails"))
    return out


def _coherence_stage(B: FinBicategory) -> list[Violation]:
    out: list[Violation] = []
    bad = out.append
    for u in B.iter_one_cells():
        if B.inv2(B.lun(u)) is None:
            bad(Violation("unitor-invertibility", (u, B.lun(u)), "left unitor is not invertible"))
        if B.inv2(B.run(u)) is None:
            bad(Violation("unitor-invertibility", (u, B.run(u)), "right unitor is not invertible"))
    for key, c in sorted(B.associator.items()):
        if B.inv2(c) is None:
            bad(Violation("associator-invertibility", key + (c,), "associator is not invertible"))
    if out:
        return out

    for a in B.iter_two_cells():
        u, u2 = B.two_cells[a]
        x, y = B.one_cells[u]
        if B.vc(B.lun(u2), B.hc2(B.id2[B.id1[y]], a)) != B.vc(a, B.lun(u)):
            bad(Violation("unitor-naturality", (a,), "left unitor not natural"))
        if B.vc(B.run(u2), B.hc2(a, B.id2[B.id1[x]])) != B.vc(a, B.run(u)):
            bad(Violation("unitor-naturality", (a,), "right unitor not natural"))
    cells = B.iter_two_cells()
    for a in cells:
        for b in cells:
            if B.tgt1(B.src2(b)) != B.src1(B.src2(a)):
                continue
            for c in cells:
                if B.tgt1(B.src2(c)) != B.src1(B.src2(b)):
                    continue
                u, u2 = B.two_cells[a]
                v, v2 = B.two_cells[b]
                w, w2 = B.two_cells[c]
                lhs = B.vc(B.assoc(u2, v2, w2), B.hc2(B.hc2(a, b), c))
                rhs = B.vc(B.hc2(a, B.hc2(b, c)), B.assoc(u, v, w))
                if lhs != rhs:
                    bad(Violation("associator-naturality", (a, b, c), "associator not natural"))

    for v in B.iter_one_cells():
        for u in B.iter_one_cells():
            if B.tgt1(v) != B.src1(u):
                continue
            mid = B.id1[B.tgt1(v)]
            lhs = B.vc(B.hc2(B.id2[u], B.lun(v)), B.assoc(u, mid, v))
            rhs = B.hc2(B.run(u), B.id2[v])
            if lhs != rhs:
                bad(Violation("triangle", (u, v), "triangle identity fails"))
    ones = B.iter_one_cells()
    for x in ones:
        for w in ones:
            if B.tgt1(x) != B.src1(w):
                continue
            for v in ones:
                if B.tgt1(w) != B.src1(v):
                    continue
                for u in ones:
                    if B.tgt1(v) != B.src1(u):
                        continue
                    lhs = B.vc(B.assoc(u, v, B.hc1(w, x)), B.assoc(B.hc1(u, v), w, x))
                    rhs = B.vc(
                        B.hc2(B.id2[u], B.assoc(v, w, x)),
                        B.vc(B.assoc(u, B.hc1(v, w), x), B.hc2(B.assoc(u, v, w), B.id2[x])),
                    )
                    if lhs != rhs:
                        bad(Violation("pentagon", (u, v, w, x), "pentagon identity fails"))
    return out


def validate_bicategory(B: FinBicategory) -> ValidationReport:
    """Check the complete presentation; report lists every violated law.

    Stages: structure (ids resolve, tables total and well-bounded), local
    categories, horizontal functoriality, then coherence (invertibility,
    naturality, triangle, pentagon).  Later stages only run once the earlier
    ones pass, since their checks would read junk otherwise.
    """
    out = _structure_stage(B)
    if out:
        return ValidationReport(tuple(out))
    out = _local_category_stage(B)
    if out:
        return ValidationReport(tuple(out))
    out = _functoriality_stage(B)
    out.extend(_coherence_stage(B))
    return ValidationReport(tuple(out))


# ---------------------------------------------------------------------------
# pasting expressions


@dataclass(frozen=True)
class ECell:
    name: CellId


@dataclass(frozen=True)
class EId:
    one_cell: CellId


@dataclass(frozen=True)
class ELun:
    u: CellId
    inverse: bool = False


@dataclass(frozen=True)
class ERun:
    u: CellId
    inverse: bool = False


@dataclass(frozen=True)
class EAssoc:
    u: CellId
    v: CellId
    w: CellId
    inverse: bool = False


@dataclass(frozen=True)
class EV:
    """Vertical composite: `after` applied after `before`."""

    after: object
    before: object


@dataclass(frozen=True)
class EH:
    """Horizontal composite: `left * right`, left on the codomain side."""

    left: object
    right: object


PastingExpr = ECell | EId | ELun | ERun | EAssoc | EV | EH


def _invert(B: FinBicategory, c: CellId, path: tuple[int, ...]) -> CellId:
    inv = B.inv2(c)
    if inv is None:
        raise TypedExprError(f"cell {c} has no inverse", path)
    return inv


def evaluate(B: FinBicategory, expr: PastingExpr) -> CellId:
    """Fold a pasting expression through the tables; boundary-checked."""

    def go(e, path):
        if isinstance(e, ECell):
            if e.name not in B.two_cells:
                raise TypedExprError(f"unknown 2-cell {e.name}", path)
            return e.name
        if isinstance(e, EId):
            if e.one_cell not in B.one_cells:
                raise TypedExprError(f"unknown 1-cell {e.one_cell}", path)
            return B.id2[e.one_cell]
        if isinstance(e, ELun):
            if e.u not in B.one_cells:
                raise TypedExprError(f"unknown 1-cell {e.u}", path)
            c = B.lun(e.u)
            return _invert(B, c, path) if e.inverse else c
        if isinstance(e, ERun):
            if e.u not in B.one_cells:
                raise TypedExprError(f"unknown 1-cell {e.u}", path)
            c = B.run(e.u)
            return _invert(B, c, path) if e.inverse else c
        if isinstance(e, EAssoc):
            key = (e.u, e.v, e.w)
            if key not in B.associator:
                raise TypedExprError(f"no associator for {key}", path)
            c = B.assoc(*key)
            return _invert(B, c, path) if e.inverse else c
        if isinstance(e, EV):
            before = go(e.before, path + (1,))
            after = go(e.after, path + (0,))
            if B.tgt2(before) != B.src2(after):
                raise TypedExprError(
                    f"vertical mismatch: {before} ends at {B.tgt2(before)},"
                    f" {after} starts at {B.src2(after)}",
                    path,
                )
            return B.vc(after, before)
        if isinstance(e, EH):
            right = go(e.right, path + (1,))
            left = go(e.left, path + (0,))
            if B.tgt1(B.src2(right)) != B.src1(B.src2(left)):
                raise TypedExprError("horizontal mismatch: objects do not line up", path)
            return B.hc2(left, right)
        raise TypedExprError(f"not a pasting expression: {e!r}", path)

    return go(expr, ())


def vcomp_many(B: FinBicategory, cells: list[CellId]) -> CellId:
    """Compose a nonempty chain of 2-cells, first element applied first."""
    out = cells[0]
    for c in cells[1:]:
        if B.tgt2(out) != B.src2(c):
            raise TypedExprError(f"chain mismatch at {c}", ())
        out = B.vc(c, out)
    return out


# ---------------------------------------------------------------------------
# invertibility and equivalences


def is_invertible2(B: FinBicategory, a: CellId) -> CellId | None:
    """Two-sided inverse of a 2-cell under vcomp, or None."""
    return B.inv2(a)


def is_equivalence1(B: FinBicategory, f: CellId) -> tuple[CellId, CellId, CellId] | None:
    """First witness (g, unit, counit) making f an equivalence, or None.

    unit is an invertible 2-cell between id and g*f, counit between f*g and
    id; orientation of each is immaterial since both are invertible, so the
    search accepts either and stores the one it found.
    """
    a, b = B.one_cells[f]
    for g in B.hom1(b, a):
        gf = B.hc1(g, f)
        fg = B.hc1(f, g)
        unit = None
        for c in B.two_between(B.id1[a], gf) + B.two_between(gf, B.id1[a]):
            if B.inv2(c) is not None:
                unit = c
                break
        if unit is None:
            continue
        for c in B.two_between(fg, B.id1[b]) + B.two_between(B.id1[b], fg):
            if B.inv2(c) is not None:
                return (g, unit, c)
    return None


def equivalences(B: FinBicategory) -> ArrowFamily:
    return family(
        (f for f in B.iter_one_cells() if is_equivalence1(B, f) is not None),
        "equivalences",
    )


# ---------------------------------------------------------------------------
# duals, connectivity, pi0


def op_dual(B: FinBicategory) -> FinBicategory:
    """Reverse 1-cells.  Unitors swap; associators invert with reversed key."""
    assoc = {}
    for (u, v, w), c in B.associator.items():
        inv = B.inv2(c)
        if inv is None:
            raise PreconditionError(f"op_dual: associator {c} not invertible")
        assoc[(w, v, u)] = inv
    return FinBicategory(
        objects=B.objects,
        one_cells={f: (t, s) for f, (s, t) in B.one_cells.items()},
        two_cells=dict(B.two_cells),
        id1=dict(B.id1),
        id2=dict(B.id2),
        vcomp=dict(B.vcomp),
        hcomp1={(f, g): r for (g, f), r in B.hcomp1.items()},
        hcomp2={(a, b): r for (b, a), r in B.hcomp2.items()},
        lunitor=dict(B.runitor),
        runitor=dict(B.lunitor),
        associator=assoc,
        families=dict(B.families),
    )


def co_dual(B: FinBicategory) -> FinBicategory:
    """Reverse 2-cells.  Coherence cells invert in place."""

    def inv(c: CellId) -> CellId:
        r = B.inv2(c)
        if r is None:
            raise PreconditionError(f"co_dual: coherence cell {c} not invertible")
        return r

    return FinBicategory(
        objects=B.objects,
        one_cells=dict(B.one_cells),
        two_cells={a: (g, f) for a, (f, g) in B.two_cells.items()},
        id1=dict(B.id1),
        id2=dict(B.id2),
        vcomp={(a, b): r for (b, a), r in B.vcomp.items()},
        hcomp1=dict(B.hcomp1),
        hcomp2=dict(B.hcomp2),
        lunitor={u: inv(c) for u, c in B.lunitor.items()},
        runitor={u: inv(c) for u, c in B.runitor.items()},
        associator={k: inv(c) for k, c in B.associator.items()},
        families=dict(B.families),
    )


class _UnionFind:
    def __init__(self, items):
        self.parent = {x: x for x in items}

    def find(self, x):
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, x, y):
        rx, ry = self.find(x), self.find(y)
        if rx != ry:
            # keep the lexicographically smaller id as root: canonical reps
            if ry < rx:
                rx, ry = ry, rx
            self.parent[ry] = rx

    def classes(self) -> dict:
        return {x: self.find(x) for x in self.parent}


def is_connected(B: FinBicategory) -> bool:
    """Zig-zag connectivity of objects through 1-cells; empty counts as connected."""
    if not B.objects:
        return True
    uf = _UnionFind(B.objects)
    for f in B.iter_one_cells():
        uf.union(B.src1(f), B.tgt1(f))
    roots = {uf.find(x) for x in B.objects}
    return len(roots) == 1


def pi0(B: FinBicategory) -> tuple[FinCategory, dict[CellId, CellId]]:
    """Quotient hom-categories to their connected components.

    Returns the quotient category (arrows named by the least member of each
    class) and the quotient map on 1-cells.  Well-definedness of the induced
    composition is verified member by member before returning.
    """
    uf = _UnionFind(B.one_cells)
    for a in B.iter_two_cells():
        f, g = B.two_cells[a]
        uf.union(f, g)
    qmap = uf.classes()
    members: dict[CellId, list[CellId]] = {}
    for f in B.iter_one_cells():
        members.setdefault(qmap[f], []).append(f)

    comp: dict[tuple[CellId, CellId], CellId] = {}
    for g in sorted(members):
        for f in sorted(members):
            if B.tgt1(f) != B.src1(g):
                continue
            comp[(g, f)] = qmap[B.hc1(g, f)]
    for g, cg in sorted(members.items()):
        for f, cf in sorted(members.items()):
            if B.tgt1(f) != B.src1(g):
                continue
            want = comp[(g, f)]
            for g2 in cg:
                for f2 in cf:
                    if qmap[B.hc1(g2, f2)] != want:
                        raise PreconditionError(
                            f"pi0: composition not well-defined on classes ({g2}, {f2})"
                        )
    cat = FinCategory(
        objects=B.objects,
        arrows={r: B.one_cells[r] for r in members},
        identity={x: qmap[B.id1[x]] for x in B.objects},
        comp=comp,
    )
    return cat, qmap


# ---------------------------------------------------------------------------
# builders


def locally_discrete(C: FinCategory) -> FinBicategory:
    """View a category as a bicategory with only identity 2-cells."""
    rep = validate_category(C)
    if not rep.ok:
        raise PreconditionError(f"locally_discrete: input invalid: {rep}")
    id2 = {f: f"1_{f}" for f in sorted(C.arrows)}
    two = {id2[f]: (f, f) for f in C.arrows}
    hcomp2 = {}
    for (g, f), r in C.comp.items():
        hcomp2[(id2[g], id2[f])] = id2[r]
    return FinBicategory(
        objects=C.objects,
        one_cells=dict(C.arrows),
        two_cells=two,
        id1=dict(C.identity),
        id2=id2,
        vcomp={(c, c): c for c in two},
        hcomp1=dict(C.comp),
        hcomp2=hcomp2,
        lunitor={f: id2[f] for f in C.arrows},
        runitor={f: id2[f] for f in C.arrows},
        associator={
            (u, v, w): id2[C.comp[(C.comp[(u, v)], w)]]
            for u in C.arrows
            for v in C.arrows
            for w in C.arrows
            if C.tgt(v) == C.src(u) and C.tgt(w) == C.src(v)
        },
    )
