"""Pseudofunctors between table bicategories, and category-valued diagrams.

Constraint cells follow the lax orientation: f2[(u, v)] points Fu.Fv => F(uv)
and f0[A] points 1_FA => F(1_A).  A pseudofunctor additionally has all
constraint cells invertible, which validation checks as its own law.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .core import (
    CellId,
    FinBicategory,
    FinCategory,
    PreconditionError,
    ValidationReport,
    Violation,
    op_dual,
    validate_category,
)

# ---------------------------------------------------------------------------
# functors between finite categories


@dataclass
class CatFunctor:
    dom: FinCategory
    cod: FinCategory
    on_obj: dict[str, str]
    on_arr: dict[CellId, CellId]

    def o(self, x: str) -> str:
        return self.on_obj[x]

    def a(self, f: CellId) -> CellId:
        return self.on_arr[f]


def validate_functor(F: CatFunctor) -> ValidationReport:
    out: list[Violation] = []
    bad = out.append
    for x in F.dom.iter_objects():
        y = F.on_obj.get(x)
        if y is None:
            bad(Violation("structure", (x,), "object has no image"))
        elif y not in F.cod.objects:
            bad(Violation("structure", (x, y), "object image is not in the codomain"))
    for f in F.dom.iter_arrows():
        g = F.on_arr.get(f)
        if g is None:
            bad(Violation("structure", (f,), "arrow has no image"))
            continue
        if g not in F.cod.arrows:
            bad(Violation("structure", (f, g), "arrow image is not in the codomain"))
            continue
        s, t = F.dom.arrows[f]
        if F.cod.arrows[g] != (F.on_obj.get(s), F.on_obj.get(t)):
            bad(Violation("structure", (f, g), "arrow image has wrong endpoints"))
    if out:
        return ValidationReport(tuple(out))
    for x in F.dom.iter_objects():
        if F.a(F.dom.identity[x]) != F.cod.identity[F.o(x)]:
            bad(Violation("functoriality", (x,), "identity arrow not preserved"))
    for g, f in F.dom.composable():
        if F.a(F.dom.c(g, f)) != F.cod.c(F.a(g), F.a(f)):
            bad(Violation("functoriality", (g, f), "composition not preserved"))
    return ValidationReport(tuple(out))


def identity_functor(C: FinCategory) -> CatFunctor:
    return CatFunctor(C, C, {x: x for x in C.objects}, {f: f for f in C.arrows})


def compose_functors(G: CatFunctor, F: CatFunctor) -> CatFunctor:
    """G after F."""
    return CatFunctor(
        dom=F.dom,
        cod=G.cod,
        on_obj={x: G.on_obj[y] for x, y in F.on_obj.items()},
        on_arr={f: G.on_arr[g] for f, g in F.on_arr.items()},
    )


def functors_equal(F: CatFunctor, G: CatFunctor) -> bool:
    return F.on_obj == G.on_obj and F.on_arr == G.on_arr


def check_natural(F: CatFunctor, G: CatFunctor, comp: dict[str, CellId]) -> list[Violation]:
    """Violations of comp being a natural transformation F => G."""
    out: list[Violation] = []
    C = F.cod
    for x in F.dom.iter_objects():
        c = comp.get(x)
        if c is None:
            out.append(Violation("structure", (x,), "missing component"))
        elif C.arrows.get(c) != (F.o(x), G.o(x)):
            out.append(Violation("structure", (x, c), "component has wrong endpoints"))
    if out:
        return out
    for f in F.dom.iter_arrows():
        x, y = F.dom.arrows[f]
        if C.c(comp[y], F.a(f)) != C.c(G.a(f), comp[x]):
            out.append(Violation("naturality", (f,), "naturality square does not commute"))
    return out


def is_iso_of_categories(F: CatFunctor) -> bool:
    """Bijective on objects and on arrows, and a functor."""
    if not validate_functor(F).ok:
        return False
    if sorted(F.on_obj.values()) != F.cod.iter_objects():
        return False
    return sorted(F.on_arr.values()) == F.cod.iter_arrows()


def is_equivalence_of_categories(F: CatFunctor) -> bool:
    """Fully faithful and essentially surjective, checked by enumeration."""
    if not validate_functor(F).ok:
        return False
    for x in F.dom.iter_objects():
        for y in F.dom.iter_objects():
            dom_hom = F.dom.hom(x, y)
            cod_hom = F.cod.hom(F.o(x), F.o(y))
            images = [F.a(f) for f in dom_hom]
            if len(set(images)) != len(images):
                return False
            if set(images) != set(cod_hom):
                return False
    hit = set(F.on_obj.values())
    for z in F.cod.iter_objects():
        if z in hit:
            continue
        if not any(
            F.cod.is_iso(a)
            for w in hit
            for a in F.cod.hom(w, z)
        ):
            return False
    return True


# ---------------------------------------------------------------------------
# pseudofunctors between bicategories


@dataclass
class PsfBicat:
    dom: FinBicategory
    cod: FinBicategory
    on0: dict[str, str]
    on1: dict[CellId, CellId]
    on2: dict[CellId, CellId]
    f2: dict[tuple[CellId, CellId], CellId]
    f0: dict[str, CellId]

    def o(self, x: str) -> str:
        return self.on0[x]

    def m1(self, f: CellId) -> CellId:
        return self.on1[f]

    def m2(self, a: CellId) -> CellId:
        return self.on2[a]


def _psf_structure(F: PsfBicat) -> list[Violation]:
    out: list[Violation] = []
    bad = out.append
    D, C = F.dom, F.cod
    for x in D.iter_objects():
        y = F.on0.get(x)
        if y is None or y not in C.objects:
            bad(Violation("structure", (x,), "object image missing or unknown"))
    if out:
        return out
    for f in D.iter_one_cells():
        g = F.on1.get(f)
        if g is None or g not in C.one_cells:
            bad(Violation("structure", (f,), "1-cell image missing or unknown"))
        elif C.one_cells[g] != (F.o(D.src1(f)), F.o(D.tgt1(f))):
            bad(Violation("structure", (f, g), "1-cell image has wrong endpoints"))
    if out:
        return out
    for a in D.iter_two_cells():
        b = F.on2.get(a)
        if b is None or b not in C.two_cells:
            bad(Violation("structure", (a,), "2-cell image missing or unknown"))
        elif C.two_cells[b] != (F.m1(D.src2(a)), F.m1(D.tgt2(a))):
            bad(Violation("structure", (a, b), "2-cell image has wrong boundary"))
    for u in D.iter_one_cells():
        for v in D.iter_one_cells():
            if D.tgt1(v) != D.src1(u):
                continue
            c = F.f2.get((u, v))
            want = (C.hc1(F.m1(u), F.m1(v)), F.m1(D.hc1(u, v)))
            if c is None:
                bad(Violation("structure", (u, v), "missing composition constraint"))
            elif C.two_cells.get(c) != want:
                bad(Violation("structure", (u, v, c), "composition constraint has wrong boundary"))
    for x in D.iter_objects():
        c = F.f0.get(x)
        want = (C.id1[F.o(x)], F.m1(D.id1[x]))
        if c is None:
            bad(Violation("structure", (x,), "missing unit constraint"))
        elif C.two_cells.get(c) != want:
            bad(Violation("structure", (x, c), "unit constraint has wrong boundary"))
    return out


def validate_psf(F: PsfBicat) -> ValidationReport:
    """Pseudofunctor laws; assumes both endpoints already validate."""
    out = _psf_structure(F)
    if out:
        return ValidationReport(tuple(out))
    bad = out.append
    D, C = F.dom, F.cod

    for f in D.iter_one_cells():
        if F.m2(D.id2[f]) != C.id2[F.m1(f)]:
            bad(Violation("local-functoriality", (f,), "identity 2-cell not preserved"))
    for (b, a) in sorted(D.vcomp):
        if F.m2(D.vc(b, a)) != C.vc(F.m2(b), F.m2(a)):
            bad(Violation("local-functoriality", (b, a), "vertical composition not preserved"))

    for key, c in sorted(F.f2.items()):
        if C.inv2(c) is None:
            bad(Violation("constraint-invertibility", key + (c,), "composition constraint not invertible"))
    for x, c in sorted(F.f0.items()):
        if C.inv2(c) is None:
            bad(Violation("constraint-invertibility", (x, c), "unit constraint not invertible"))
    if out:
        return ValidationReport(tuple(out))

    for a in D.iter_two_cells():
        for b in D.iter_two_cells():
            if D.tgt1(D.src2(b)) != D.src1(D.src2(a)):
                continue
            u, u2 = D.two_cells[a]
            v, v2 = D.two_cells[b]
            lhs = C.vc(F.f2[(u2, v2)], C.hc2(F.m2(a), F.m2(b)))
            rhs = C.vc(F.m2(D.hc2(a, b)), F.f2[(u, v)])
            if lhs != rhs:
                bad(Violation("constraint-naturality", (a, b), "composition constraint not natural"))

    for w in D.iter_one_cells():
        for v in D.iter_one_cells():
            if D.tgt1(w) != D.src1(v):
                continue
            for u in D.iter_one_cells():
                if D.tgt1(v) != D.src1(u):
                    continue
                fu, fv, fw = F.m1(u), F.m1(v), F.m1(w)
                lhs = C.vc(
                    F.f2[(u, D.hc1(v, w))],
                    C.vc(C.hc2(C.id2[fu], F.f2[(v, w)]), C.assoc(fu, fv, fw)),
                )
                rhs = C.vc(
                    F.m2(D.assoc(u, v, w)),
                    C.vc(F.f2[(D.hc1(u, v), w)], C.hc2(F.f2[(u, v)], C.id2[fw])),
                )
                if lhs != rhs:
                    bad(Violation("lax-associativity", (u, v, w), "composition constraints incoherent"))

    for u in D.iter_one_cells():
        x, y = D.one_cells[u]
        fu = F.m1(u)
        left = C.vc(
            F.m2(D.lun(u)),
            C.vc(F.f2[(D.id1[y], u)], C.hc2(F.f0[y], C.id2[fu])),
        )
        if left != C.lun(fu):
            bad(Violation("lax-unity", (u,), "left unit constraint incoherent"))
        right = C.vc(
            F.m2(D.run(u)),
            C.vc(F.f2[(u, D.id1[x])], C.hc2(C.id2[fu], F.f0[x])),
        )
        if right != C.run(fu):
            bad(Violation("lax-unity", (u,), "right unit constraint incoherent"))
    return ValidationReport(tuple(out))


def identity_psf(B: FinBicategory) -> PsfBicat:
    return PsfBicat(
        dom=B,
        cod=B,
        on0={x: x for x in B.objects},
        on1={f: f for f in B.one_cells},
        on2={a: a for a in B.two_cells},
        f2={k: B.id2[r] for k, r in B.hcomp1.items()},
        f0={x: B.id2[B.id1[x]] for x in B.objects},
    )


def op_dual_psf(F: PsfBicat) -> PsfBicat:
    """The induced map between reversed bicategories; f2 swaps its key."""
    return PsfBicat(
        dom=op_dual(F.dom),
        cod=op_dual(F.cod),
        on0=dict(F.on0),
        on1=dict(F.on1),
        on2=dict(F.on2),
        f2={(v, u): c for (u, v), c in F.f2.items()},
        f0=dict(F.f0),
    )


def local_functor(F: PsfBicat, a: str, b: str) -> CatFunctor:
    """The restriction of F to the hom-category over (a, b)."""
    dom = F.dom.hom_category(a, b)
    return CatFunctor(
        dom=dom,
        cod=F.cod.hom_category(F.o(a), F.o(b)),
        on_obj={u: F.m1(u) for u in dom.objects},
        on_arr={c: F.m2(c) for c in dom.arrows},
    )


# ---------------------------------------------------------------------------
# category-valued diagrams


@dataclass
class CatValuedPSF:
    """A pseudofunctor from a table bicategory to finite categories.

    on2[a][x] is the component at fiber object x; f2[(u, v)][x] points
    Fu(Fv(x)) -> F(uv)(x) and f0[A][x] points x -> F(1_A)(x), both invertible
    for a pseudofunctor.
    """

    base: FinBicategory
    fiber: dict[str, FinCategory]
    on1: dict[CellId, CatFunctor]
    on2: dict[CellId, dict[str, CellId]]
    f2: dict[tuple[CellId, CellId], dict[str, CellId]]
    f0: dict[str, dict[str, CellId]]

    def ap(self, u: CellId, x: str) -> str:
        return self.on1[u].o(x)

    def ap_arr(self, u: CellId, f: CellId) -> CellId:
        return self.on1[u].a(f)

    def comp2(self, a: CellId, x: str) -> CellId:
        return self.on2[a][x]


def validate_catvalued(F: CatValuedPSF) -> ValidationReport:
    out: list[Violation] = []
    bad = out.append
    B = F.base

    for A in B.iter_objects():
        cat = F.fiber.get(A)
        if cat is None:
            bad(Violation("structure", (A,), "missing fiber"))
            continue
        rep = validate_category(cat)
        if not rep.ok:
            bad(Violation("structure", (A,), f"fiber is not a category: {rep.violations[0].message}"))
    if out:
        return ValidationReport(tuple(out))

    for u in B.iter_one_cells():
        fu = F.on1.get(u)
        s, t = B.one_cells[u]
        if fu is None:
            bad(Violation("structure", (u,), "missing fiber functor"))
            continue
        if fu.dom != F.fiber[s] or fu.cod != F.fiber[t]:
            bad(Violation("structure", (u,), "fiber functor endpoints disagree with the base"))
            continue
        frep = validate_functor(fu)
        for v in frep.violations:
            if v.law == "structure":
                bad(Violation("structure", (u,) + v.cells, v.message))
    if out:
        return ValidationReport(tuple(out))

    for a in B.iter_two_cells():
        comp = F.on2.get(a)
        u, v = B.two_cells[a]
        if comp is None:
            bad(Violation("structure", (a,), "missing 2-cell components"))
            continue
        src_obj = B.src1(u)
        for x in F.fiber[src_obj].iter_objects():
            c = comp.get(x)
            tgt_cat = F.fiber[B.tgt1(u)]
            if c is None:
                bad(Violation("structure", (a, x), "missing component"))
            elif tgt_cat.arrows.get(c) != (F.ap(u, x), F.ap(v, x)):
                bad(Violation("structure", (a, x, c), "component has wrong endpoints"))
    for u in B.iter_one_cells():
        for v in B.iter_one_cells():
            if B.tgt1(v) != B.src1(u):
                continue
            comp = F.f2.get((u, v))
            if comp is None:
                bad(Violation("structure", (u, v), "missing composition constraint"))
                continue
            uv = B.hc1(u, v)
            tgt_cat = F.fiber[B.tgt1(u)]
            for x in F.fiber[B.src1(v)].iter_objects():
                c = comp.get(x)
                if c is None:
                    bad(Violation("structure", (u, v, x), "missing constraint component"))
                elif tgt_cat.arrows.get(c) != (F.ap(u, F.ap(v, x)), F.ap(uv, x)):
                    bad(Violation("structure", (u, v, x, c), "constraint component has wrong endpoints"))
    for A in B.iter_objects():
        comp = F.f0.get(A)
        if comp is None:
            bad(Violation("structure", (A,), "missing unit constraint"))
            continue
        cat = F.fiber[A]
        for x in cat.iter_objects():
            c = comp.get(x)
            if c is None:
                bad(Violation("structure", (A, x), "missing unit constraint component"))
            elif cat.arrows.get(c) != (x, F.ap(B.id1[A], x)):
                bad(Violation("structure", (A, x, c), "unit constraint component has wrong endpoints"))
    if out:
        return ValidationReport(tuple(out))

    for u in B.iter_one_cells():
        frep = validate_functor(F.on1[u])
        for v in frep.violations:
            bad(Violation("local-functoriality", (u,) + v.cells, v.message))
    for a in B.iter_two_cells():
        u, v = B.two_cells[a]
        for viol in check_natural(F.on1[u], F.on1[v], F.on2[a]):
            bad(Violation("local-functoriality", (a,) + viol.cells, viol.message))
    for f in B.iter_one_cells():
        ident = F.on2[B.id2[f]]
        cat = F.fiber[B.tgt1(f)]
        for x in F.fiber[B.src1(f)].iter_objects():
            if ident[x] != cat.identity[F.ap(f, x)]:
                bad(Violation("local-functoriality", (B.id2[f], x), "identity 2-cell has non-identity components"))
    for (b, a) in sorted(B.vcomp):
        if B.tgt2(a) != B.src2(b):
            continue
        u = B.src2(a)
        cat = F.fiber[B.tgt1(u)]
        for x in F.fiber[B.src1(u)].iter_objects():
            if F.comp2(B.vc(b, a), x) != cat.c(F.comp2(b, x), F.comp2(a, x)):
                bad(Violation("local-functoriality", (b, a, x), "vertical composition not preserved"))
    if out:
        return ValidationReport(tuple(out))

    for (u, v), comp in sorted(F.f2.items()):
        cat = F.fiber[B.tgt1(u)]
        for x, c in sorted(comp.items()):
            if not cat.is_iso(c):
                bad(Violation("constraint-invertibility", (u, v, x, c), "composition constraint component not invertible"))
    for A, comp in sorted(F.f0.items()):
        cat = F.fiber[A]
        for x, c in sorted(comp.items()):
            if not cat.is_iso(c):
                bad(Violation("constraint-invertibility", (A, x, c), "unit constraint component not invertible"))
    if out:
        return ValidationReport(tuple(out))

    for a in B.iter_two_cells():
        for b in B.iter_two_cells():
            if B.tgt1(B.src2(b)) != B.src1(B.src2(a)):
                continue
            u, u2 = B.two_cells[a]
            v, v2 = B.two_cells[b]
            cat = F.fiber[B.tgt1(u)]
            for x in F.fiber[B.src1(v)].iter_objects():
                lhs = cat.c(
                    F.f2[(u2, v2)][x],
                    cat.c(F.comp2(a, F.ap(v2, x)), F.ap_arr(u, F.comp2(b, x))),
                )
                rhs = cat.c(F.comp2(B.hc2(a, b), x), F.f2[(u, v)][x])
                if lhs != rhs:
                    bad(Violation("constraint-naturality", (a, b, x), "composition constraint not natural"))

    for w in B.iter_one_cells():
        for v in B.iter_one_cells():
            if B.tgt1(w) != B.src1(v):
                continue
            for u in B.iter_one_cells():
                if B.tgt1(v) != B.src1(u):
                    continue
                cat = F.fiber[B.tgt1(u)]
                vw = B.hc1(v, w)
                uv = B.hc1(u, v)
                for x in F.fiber[B.src1(w)].iter_objects():
                    lhs = cat.c(F.f2[(u, vw)][x], F.ap_arr(u, F.f2[(v, w)][x]))
                    rhs = cat.c(
                        F.comp2(B.assoc(u, v, w), x),
                        cat.c(F.f2[(uv, w)][x], F.f2[(u, v)][F.ap(w, x)]),
                    )
                    if lhs != rhs:
                        bad(Violation("lax-associativity", (u, v, w, x), "composition constraints incoherent"))

    for u in B.iter_one_cells():
        A, Bb = B.one_cells[u]
        cat = F.fiber[Bb]
        for x in F.fiber[A].iter_objects():
            ux = F.ap(u, x)
            left = cat.c(
                F.comp2(B.lun(u), x),
                cat.c(F.f2[(B.id1[Bb], u)][x], F.f0[Bb][ux]),
            )
            if left != cat.identity[ux]:
                bad(Violation("lax-unity", (u, x), "left unit constraint incoherent"))
            right = cat.c(
                F.comp2(B.run(u), x),
                cat.c(F.f2[(u, B.id1[A])][x], F.ap_arr(u, F.f0[A][x])),
            )
            if right != cat.identity[ux]:
                bad(Violation("lax-unity", (u, x), "right unit constraint incoherent"))
    return ValidationReport(tuple(out))
