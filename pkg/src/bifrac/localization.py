"""Localization of a finite category at an arrow family by right (or left) roofs."""

from __future__ import annotations

from dataclasses import dataclass, field

from .core import (
    ArrowFamily,
    CellId,
    FinBicategory,
    FinCategory,
    PreconditionError,
    ValidationReport,
    Violation,
    family,
    op_category,
    pi0,
)
from .functors import CatFunctor


def _resolve(C: FinCategory | FinBicategory, W) -> frozenset[CellId]:
    if isinstance(W, str):
        if W not in C.families:
            raise KeyError(f"no arrow family named {W!r}")
        return C.families[W].members
    if isinstance(W, ArrowFamily):
        return W.members
    return frozenset(W)


@dataclass(frozen=True)
class Roof:
    """A span apex ->w source, apex ->f target with the w leg in the family.

    A right roof at ``A -> B`` stands for the fraction f . w^{-1}; a left
    roof is the same data read in the opposite category.
    """

    apex: str
    w: CellId
    f: CellId
    direction: str = "right"

    def key(self) -> tuple[str, CellId, CellId]:
        return (self.apex, self.w, self.f)


class FractionWitnesses:
    """First-found (cached) squares and equalizing arrows for one (C, W) pair.

    ``reverse=True`` flips the candidate scan order; anything built from the
    witnesses alone may change, anything stated about classes must not.
    """

    def __init__(self, C: FinCategory, W, reverse: bool = False):
        self.C = C
        self.members = _resolve(C, W)
        self.reverse = reverse
        self._ore: dict[tuple[CellId, CellId], tuple[CellId, CellId] | None] = {}
        self._eq: dict[tuple[CellId, CellId, CellId], CellId | None] = {}

    def _scan(self, items):
        ordered = sorted(items)
        if self.reverse:
            ordered.reverse()
        return ordered

    def ore(self, w: CellId, f: CellId) -> tuple[CellId, CellId] | None:
        """Complete the cospan (f: X -> D, w: C -> D) to f.v == w.h with v in W."""
        key = (w, f)
        if key not in self._ore:
            C = self.C
            found = None
            for v in self._scan(C.iter_arrows()):
                if v not in self.members or C.tgt(v) != C.src(f):
                    continue
                for h in self._scan(C.hom(C.src(v), C.src(w))):
                    if C.c(f, v) == C.c(w, h):
                        found = (v, h)
                        break
                if found is not None:
                    break
            self._ore[key] = found
        return self._ore[key]

    def equalizer(self, f: CellId, g: CellId, w: CellId) -> CellId | None:
        """An arrow u in W with f.u == g.u, for parallel f, g merged by w."""
        key = (f, g, w)
        if key not in self._eq:
            C = self.C
            found = None
            for u in self._scan(C.iter_arrows()):
                if u not in self.members or C.tgt(u) != C.src(f):
                    continue
                if C.c(f, u) == C.c(g, u):
                    found = u
                    break
            self._eq[key] = found
        return self._eq[key]


def check_R(
    C: FinCategory, W, witnesses: FractionWitnesses | None = None
) -> ValidationReport:
    """Check the right-fraction axioms on (C, W).

    R0: W is a wide subcategory (all identities, closed under composition).
    R1: every cospan (f, w in W) completes to a commuting square with the
        new leg in W.
    R2: parallel arrows merged by a member of W are already merged by one.

    Missing identities are reported, never silently adjoined.
    """
    wit = witnesses if witnesses is not None else FractionWitnesses(C, W)
    members = wit.members
    out: list[Violation] = []
    bad = out.append

    for m in sorted(members):
        if m not in C.arrows:
            bad(Violation("R0", (m,), "family member is not an arrow"))
    if out:
        return ValidationReport(tuple(out))

    for x in C.iter_objects():
        if C.identity[x] not in members:
            bad(Violation("R0", (x,), "identity arrow is missing from the family"))
    for g, f in C.composable():
        if f in members and g in members and C.c(g, f) not in members:
            bad(Violation("R0", (g, f), "family is not closed under composition"))

    for w in sorted(members):
        for f in C.iter_arrows():
            if C.tgt(f) != C.tgt(w):
                continue
            if wit.ore(w, f) is None:
                bad(Violation("R1", (w, f), "cospan admits no square with a leg in the family"))

    for w in sorted(members):
        b = C.src(w)
        for a in C.iter_objects():
            fs = C.hom(a, b)
            for i, f in enumerate(fs):
                for g in fs[i + 1 :]:
                    if C.c(w, f) != C.c(w, g):
                        continue
                    if wit.equalizer(f, g, w) is None:
                        bad(
                            Violation(
                                "R2",
                                (f, g, w),
                                "no equalizing arrow in the family",
                            )
                        )
    return ValidationReport(tuple(out))


@dataclass
class LocalizedCategory:
    """A category of fraction classes together with the canonical functor into it."""

    category: FinCategory
    functor: CatFunctor
    class_of: dict[Roof, CellId] = field(compare=False)
    closure_added: bool = False
    side: str = "right"

    def cls(self, apex: str, w: CellId, f: CellId) -> CellId:
        return self.class_of[Roof(apex, w, f, self.side)]


def _class_id(rep: tuple[str, CellId, CellId]) -> CellId:
    return "[(" + ",".join(rep) + ")]"


def localize_right(C: FinCategory, W, reverse_ore: bool = False) -> LocalizedCategory:
    """Invert the arrows of W by classes of right roofs.

    Two roofs over the same hom-pair are identified when a common refinement
    makes both legs agree, with the refined W-leg still in W; the relation is
    closed transitively as a safeguard, and ``closure_added`` records whether
    that step ever merged anything new (it must not once check_R passes).
    """
    wit = FractionWitnesses(C, W, reverse=reverse_ore)
    report = check_R(C, W, witnesses=wit)
    if not report.ok:
        raise PreconditionError(
            "right-fraction axioms fail: " + ", ".join(sorted(report.laws()))
        )
    members = wit.members

    blocks: dict[tuple[str, str], list[tuple[str, CellId, CellId]]] = {}
    for w in sorted(members):
        apex, a = C.arrows[w]
        for f in C.iter_arrows():
            if C.src(f) != apex:
                continue
            blocks.setdefault((a, C.tgt(f)), []).append((apex, w, f))

    def related(r1, r2) -> bool:
        a1, w1, f1 = r1
        a2, w2, f2 = r2
        for cbar in C.iter_objects():
            for s in C.hom(cbar, a1):
                for t in C.hom(cbar, a2):
                    if C.c(w1, s) != C.c(w2, t) or C.c(w1, s) not in members:
                        continue
                    if C.c(f1, s) == C.c(f2, t):
                        return True
        return False

    class_of: dict[Roof, CellId] = {}
    rep_of: dict[CellId, tuple[str, CellId, CellId]] = {}
    arrows: dict[CellId, tuple[str, str]] = {}
    closure_added = False
    for (a, b), roofs in sorted(blocks.items()):
        direct = {r: {r} for r in roofs}
        for i, r1 in enumerate(roofs):
            for r2 in roofs[i + 1 :]:
                if related(r1, r2):
                    direct[r1].add(r2)
                    direct[r2].add(r1)
        seen: set[tuple[str, CellId, CellId]] = set()
        for r in roofs:
            if r in seen:
                continue
            component = set()
            stack = [r]
            while stack:
                cur = stack.pop()
                if cur in component:
                    continue
                component.add(cur)
                stack.extend(direct[cur] - component)
            seen |= component
            for p in component:
                for q in component:
                    if q not in direct[p]:
                        closure_added = True
            rep = min(component)
            cid = _class_id(rep)
            rep_of[cid] = rep
            arrows[cid] = (a, b)
            for p in component:
                class_of[Roof(*p)] = cid

    identity = {
        x: class_of[Roof(x, C.identity[x], C.identity[x])] for x in C.iter_objects()
    }

    comp: dict[tuple[CellId, CellId], CellId] = {}
    ids = sorted(arrows)
    for q in ids:
        for p in ids:
            if arrows[p][1] != arrows[q][0]:
                continue
            _, w1, f1 = rep_of[p]
            _, w2, f2 = rep_of[q]
            v, h = wit.ore(w2, f1)
            comp[(q, p)] = class_of[Roof(C.src(v), C.c(w1, v), C.c(f2, h))]

    cat = FinCategory(
        objects=C.objects,
        arrows=arrows,
        identity=identity,
        comp=comp,
    )
    functor = CatFunctor(
        dom=C,
        cod=cat,
        on_obj={x: x for x in C.iter_objects()},
        on_arr={
            f: class_of[Roof(C.src(f), C.identity[C.src(f)], f)]
            for f in C.iter_arrows()
        },
    )
    return LocalizedCategory(cat, functor, class_of, closure_added, "right")


def localize_left(C: FinCategory, W, reverse_ore: bool = False) -> LocalizedCategory:
    """Invert W by classes of left roofs: right roofs in the opposite category."""
    members = _resolve(C, W)
    loc = localize_right(op_category(C), members, reverse_ore=reverse_ore)
    cat = op_category(loc.category)
    functor = CatFunctor(
        dom=C,
        cod=cat,
        on_obj=dict(loc.functor.on_obj),
        on_arr=dict(loc.functor.on_arr),
    )
    class_of = {
        Roof(r.apex, r.w, r.f, "left"): cid for r, cid in loc.class_of.items()
    }
    return LocalizedCategory(cat, functor, class_of, loc.closure_added, "left")


def induced_W0(B: FinBicategory, W) -> ArrowFamily:
    """The family of connected-component classes of W, over pi0 of the bicategory.

    Members are exactly the classes that meet W; nothing is adjoined, so a W
    without identities yields a family that check_R will flag under R0.
    """
    members = _resolve(B, W)
    name = W.name if isinstance(W, ArrowFamily) else (W if isinstance(W, str) else "")
    _, qmap = pi0(B)
    return family({qmap[w] for w in members}, f"[{name}]" if name else "[w0]")
