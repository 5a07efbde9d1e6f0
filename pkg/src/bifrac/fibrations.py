"""Cartesian cells and fibration predicates for a pseudo-functor.

The 1-cell test unwinds the bipullback comparison into its three elementary
conditions and searches them exhaustively with early exit, so a False always
comes with the first failing instance.  Lift searches are strict: the lift
must map exactly onto the requested cell, not merely up to an invertible
2-cell.  Where a strict lift is missing the check still looks for a lax one
and says so in the violation, since those are the cases where the weaker
notion of fibration would diverge from this one.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import (
    ArrowFamily,
    CellId,
    FinCategory,
    PreconditionError,
    ValidationReport,
    Violation,
    family,
    vcomp_many,
)
from .functors import CatFunctor, PsfBicat, local_functor, op_dual_psf


@dataclass
class CartesianFamilies:
    """The 1-cells and 2-cells of the total bicategory that pass their
    respective tests against one pseudo-functor."""

    psf: PsfBicat
    c1: ArrowFamily
    c2: frozenset


# ---------------------------------------------------------------------------
# the three conditions on a 1-cell


def check_cartesian1(P: PsfBicat, f: CellId) -> ValidationReport:
    """Factorization, 2-cell lifting, and joint faithfulness for f, in that
    order, stopping at the first failing instance."""
    E = P.dom
    B = P.cod
    x, y = E.one_cells[f]
    pf = P.m1(f)

    for z in E.iter_objects():
        pz = P.o(z)
        for g in E.hom1(z, y):
            for h in B.hom1(pz, P.o(x)):
                pfh = B.hc1(pf, h)
                for alpha in B.two_between(pfh, P.m1(g)):
                    if B.inv2(alpha) is None:
                        continue
                    if not _has_factorization(P, f, z, g, h, alpha):
                        return ValidationReport((
                            Violation(
                                "cart1-item0",
                                (f, z, g, h, alpha),
                                "no lift factors this arrow through f",
                            ),
                        ))

    for z in E.iter_objects():
        for g in E.hom1(z, x):
            for h in E.hom1(z, x):
                for alpha in E.two_between(E.hc1(f, g), E.hc1(f, h)):
                    for beta in B.two_between(P.m1(g), P.m1(h)):
                        if P.m2(alpha) != vcomp_many(
                            B,
                            [
                                B.inv2(P.f2[(f, g)]),
                                B.whisk_l(P.m1(f), beta),
                                P.f2[(f, h)],
                            ],
                        ):
                            continue
                        if not any(
                            P.m2(bh) == beta and E.whisk_l(f, bh) == alpha
                            for bh in E.two_between(g, h)
                        ):
                            return ValidationReport((
                                Violation(
                                    "cart1-item1",
                                    (f, g, h, alpha, beta),
                                    "compatible 2-cell does not lift",
                                ),
                            ))

    for z in E.iter_objects():
        for g in E.hom1(z, x):
            for h in E.hom1(z, x):
                cells = E.two_between(g, h)
                for i, a in enumerate(cells):
                    for b in cells[i + 1 :]:
                        if P.m2(a) == P.m2(b) and E.whisk_l(f, a) == E.whisk_l(f, b):
                            return ValidationReport((
                                Violation(
                                    "cart1-item2",
                                    (f, a, b),
                                    "projection and whiskering do not separate",
                                ),
                            ))

    return ValidationReport(())


def _has_factorization(P, f, z, g, h, alpha) -> bool:
    E = P.dom
    B = P.cod
    x = E.src1(f)
    pf = P.m1(f)
    for hh in E.hom1(z, x):
        for ah in E.two_between(E.hc1(f, hh), g):
            if E.inv2(ah) is None:
                continue
            for bh in B.two_between(P.m1(hh), h):
                if B.inv2(bh) is None:
                    continue
                if B.vc(alpha, B.whisk_l(pf, bh)) == B.vc(P.m2(ah), P.f2[(f, hh)]):
                    return True
    return False


def is_cartesian1(P: PsfBicat, f: CellId) -> bool:
    return check_cartesian1(P, f).ok


# ---------------------------------------------------------------------------
# the 1-categorical notion, used locally


def is_cartesian_arrow(Q: CatFunctor, phi: CellId) -> bool:
    """phi is Cartesian for Q when every arrow into its target that projects
    through Q(phi) factors through phi uniquely over the given factor."""
    C = Q.dom
    D = Q.cod
    e = C.tgt(phi)
    for psi in C.iter_arrows():
        if C.tgt(psi) != e:
            continue
        for gamma in D.hom(Q.o(C.src(psi)), Q.o(C.src(phi))):
            if D.c(Q.a(phi), gamma) != Q.a(psi):
                continue
            hits = [
                chi
                for chi in C.hom(C.src(psi), C.src(phi))
                if Q.a(chi) == gamma and C.c(phi, chi) == psi
            ]
            if len(hits) != 1:
                return False
    return True


def is_cat_fibration(Q: CatFunctor) -> bool:
    """Every arrow of the codomain into the image of an object has a strict
    Cartesian lift."""
    C = Q.dom
    D = Q.cod
    for e in C.iter_objects():
        for gamma in D.iter_arrows():
            if D.tgt(gamma) != Q.o(e):
                continue
            if not any(
                C.tgt(phi) == e
                and Q.a(phi) == gamma
                and Q.o(C.src(phi)) == D.src(gamma)
                and is_cartesian_arrow(Q, phi)
                for phi in C.iter_arrows()
            ):
                return False
    return True


def is_cartesian2(P: PsfBicat, alpha: CellId) -> bool:
    u, _ = P.dom.two_cells[alpha]
    a, b = P.dom.one_cells[u]
    return is_cartesian_arrow(local_functor(P, a, b), alpha)


# ---------------------------------------------------------------------------
# lifts and fibration predicates


def cartesian_lift(P: PsfBicat, e: str, f: CellId):
    """First (object, 1-cell) strictly over (src f, f) that is Cartesian, in
    lexicographic order, or None."""
    E = P.dom
    B = P.cod
    if B.tgt1(f) != P.o(e):
        raise PreconditionError(f"{f} does not land in the image of {e}")
    for bhat in E.iter_objects():
        if P.o(bhat) != B.src1(f):
            continue
        for fhat in E.hom1(bhat, e):
            if P.m1(fhat) == f and is_cartesian1(P, fhat):
                return bhat, fhat
    return None


def _lax_lift_exists(P: PsfBicat, e: str, f: CellId) -> bool:
    E = P.dom
    B = P.cod
    for bhat in E.iter_objects():
        if P.o(bhat) != B.src1(f):
            continue
        for fhat in E.hom1(bhat, e):
            if any(
                B.inv2(c) is not None
                for c in B.two_between(P.m1(fhat), f)
            ) and is_cartesian1(P, fhat):
                return True
    return False


def check_1fibration(P: PsfBicat) -> ValidationReport:
    """Every base arrow into the image of an object needs a strict Cartesian
    lift; violations record whether a lax lift would have worked."""
    E = P.dom
    B = P.cod
    out: list[Violation] = []
    for e in E.iter_objects():
        for f in B.iter_one_cells():
            if B.tgt1(f) != P.o(e):
                continue
            if cartesian_lift(P, e, f) is not None:
                continue
            if _lax_lift_exists(P, e, f):
                msg = "no strict Cartesian lift; one exists up to invertible 2-cell"
            else:
                msg = "no Cartesian lift, strict or lax"
            out.append(Violation("1-fibration", (e, f), msg))
    return ValidationReport(tuple(out))


def is_1fibration(P: PsfBicat) -> bool:
    return check_1fibration(P).ok


def check_fibration(P: PsfBicat) -> ValidationReport:
    """1-fibration plus local fibredness plus closure of Cartesian 2-cells
    under horizontal composition."""
    E = P.dom
    out = list(check_1fibration(P).violations)
    for a in E.iter_objects():
        for b in E.iter_objects():
            if not E.hom1(a, b):
                continue
            if not is_cat_fibration(local_functor(P, a, b)):
                out.append(Violation("local-fibration", (a, b), "hom restriction is not fibred"))
    c2 = [c for c in E.iter_two_cells() if is_cartesian2(P, c)]
    c2set = set(c2)
    for b in c2:
        for a in c2:
            fb = E.src2(b)
            fa = E.src2(a)
            if E.src1(fb) != E.tgt1(fa):
                continue
            comp = E.hc2(b, a)
            if comp not in c2set:
                out.append(
                    Violation(
                        "cartesian2-hcomp",
                        (b, a, comp),
                        "horizontal composite of Cartesian 2-cells is not Cartesian",
                    )
                )
    return ValidationReport(tuple(out))


def is_fibration(P: PsfBicat) -> bool:
    return check_fibration(P).ok


def is_cofibration(P: PsfBicat) -> bool:
    return is_fibration(op_dual_psf(P))


# ---------------------------------------------------------------------------
# the families themselves


def cartesian_families(P: PsfBicat) -> CartesianFamilies:
    E = P.dom
    c1 = family(
        (f for f in E.iter_one_cells() if is_cartesian1(P, f)),
        "cartesian",
    )
    c2 = frozenset(c for c in E.iter_two_cells() if is_cartesian2(P, c))
    return CartesianFamilies(psf=P, c1=c1, c2=c2)


def lifted_family(P: PsfBicat, W, co: bool = False) -> ArrowFamily:
    """Cartesian (co-Cartesian when co) arrows of the total bicategory lying
    strictly over members of W."""
    if isinstance(W, str):
        W = P.cod.families[W]
    elif not isinstance(W, ArrowFamily):
        W = family(W)
    Q = op_dual_psf(P) if co else P
    members = [
        f
        for f in P.dom.iter_one_cells()
        if P.m1(f) in W and is_cartesian1(Q, f)
    ]
    tag = "cocartesian-over" if co else "cartesian-over"
    return family(members, f"{tag}-{W.name or 'family'}")
