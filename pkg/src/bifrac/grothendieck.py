"""Bicategory of elements of a category-valued diagram.

Cells of the total bicategory are canonical string encodings of the pairs
that define them, so two builds of the same diagram are equal dict-for-dict.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .core import (
    ArrowFamily,
    CellId,
    FinBicategory,
    FinCategory,
    StructureError,
    family,
)
from .fibrations import CartesianFamilies
from .functors import CatValuedPSF, PsfBicat


def _enc(*parts: str) -> str:
    return "(" + ",".join(parts) + ")"


def _fcomp(fib: FinCategory, g: CellId, f: CellId, what: str) -> CellId:
    try:
        return fib.c(g, f)
    except KeyError:
        raise StructureError(
            f"fiber arrow missing for the composite ({g}, {f}) needed by {what}"
        ) from None


def _finv(fib: FinCategory, a: CellId, what: str) -> CellId:
    r = fib.inverse(a)
    if r is None:
        raise StructureError(f"fiber arrow {a} is not invertible ({what})")
    return r


@dataclass
class ElementsResult:
    total: FinBicategory
    proj: PsfBicat
    cocart: CartesianFamilies
    obj_of: dict[str, tuple[str, str]] = field(default_factory=dict, compare=False)
    one_of: dict[str, tuple[str, str, str]] = field(default_factory=dict, compare=False)

    @property
    def cocart1(self) -> ArrowFamily:
        return self.cocart.c1

    @property
    def cocart2(self) -> frozenset:
        return self.cocart.c2


def elements(F: CatValuedPSF) -> ElementsResult:
    """Total bicategory over pairs (object, fiber object), with the strict
    projection and the co-Cartesian families given by invertibility of the
    second coordinate."""
    B = F.base

    objects: list[str] = []
    obj_of: dict[str, tuple[str, str]] = {}
    for C in B.iter_objects():
        for x in sorted(F.fiber[C].objects):
            i = _enc(C, x)
            objects.append(i)
            obj_of[i] = (C, x)

    # 1-cells (f, m, x) with m : Ff(x) -> y, pointing (C, x) -> (D, y)
    one_cells: dict[CellId, tuple[str, str]] = {}
    one_of: dict[CellId, tuple[CellId, CellId, str]] = {}
    for f in B.iter_one_cells():
        C, D = B.one_cells[f]
        fib = F.fiber[D]
        for x in sorted(F.fiber[C].objects):
            fx = F.ap(f, x)
            for m in sorted(fib.arrows):
                if fib.src(m) != fx:
                    continue
                i = _enc(f, m, x)
                one_cells[i] = (_enc(C, x), _enc(D, fib.tgt(m)))
                one_of[i] = (f, m, x)

    # 2-cells (a, m, n, x): a between the base parts, second coordinates
    # forming a commuting triangle n . (Fa)_x = m in the target fiber
    two_cells: dict[CellId, tuple[CellId, CellId]] = {}
    two_of: dict[CellId, tuple[CellId, CellId, CellId, str]] = {}
    index: dict[tuple[CellId, CellId, CellId, str], CellId] = {}
    for s in one_cells:
        f, m, x = one_of[s]
        for t in one_cells:
            g, n, x2 = one_of[t]
            if x2 != x or one_cells[t] != one_cells[s]:
                continue
            fib = F.fiber[B.tgt1(f)]
            for a in B.two_between(f, g):
                if _fcomp(fib, n, F.comp2(a, x), f"2-cell over {a}") != m:
                    continue
                i = _enc(a, m, n, x)
                two_cells[i] = (s, t)
                two_of[i] = (a, m, n, x)
                index[(a, m, n, x)] = i

    def need(a: CellId, m: CellId, n: CellId, x: str, what: str) -> CellId:
        i = index.get((a, m, n, x))
        if i is None:
            raise StructureError(
                f"no element 2-cell over ({a}, {m}, {n}, {x}) for {what}"
            )
        return i

    id1 = {}
    for i in objects:
        C, x = obj_of[i]
        id1[i] = _enc(
            B.id1[C], _finv(F.fiber[C], F.f0[C][x], f"identity at {i}"), x
        )
    id2 = {}
    for i in one_cells:
        f, m, x = one_of[i]
        id2[i] = need(B.id2[f], m, m, x, f"identity 2-cell of {i}")

    vcomp = {}
    for b in two_cells:
        for a in two_cells:
            if two_cells[b][0] != two_cells[a][1]:
                continue
            ab, m, n, x = two_of[a]
            bb, _, o, _ = two_of[b]
            vcomp[(b, a)] = need(
                B.vcomp[(bb, ab)], m, o, x, f"vertical composite ({b}, {a})"
            )

    hcomp1 = {}
    for g_id in one_cells:
        g, n, y = one_of[g_id]
        for f_id in one_cells:
            if one_cells[f_id][1] != one_cells[g_id][0]:
                continue
            f, m, x = one_of[f_id]
            fib = F.fiber[B.tgt1(g)]
            k = _fcomp(
                fib,
                n,
                _fcomp(
                    fib,
                    F.ap_arr(g, m),
                    _finv(fib, F.f2[(g, f)][x], f"composite ({g_id}, {f_id})"),
                    f"composite ({g_id}, {f_id})",
                ),
                f"composite ({g_id}, {f_id})",
            )
            hcomp1[(g_id, f_id)] = _enc(B.hcomp1[(g, f)], k, x)

    hcomp2 = {}
    for b in two_cells:
        for a in two_cells:
            sb, tb = two_cells[b]
            sa, ta = two_cells[a]
            if one_cells[sb][0] != one_cells[sa][1]:
                continue
            s_id = hcomp1[(sb, sa)]
            t_id = hcomp1[(tb, ta)]
            bb, ab = two_of[b][0], two_of[a][0]
            hcomp2[(b, a)] = need(
                B.hcomp2[(bb, ab)],
                one_of[s_id][1],
                one_of[t_id][1],
                one_of[s_id][2],
                f"horizontal composite ({b}, {a})",
            )

    lunitor = {}
    runitor = {}
    for i in one_cells:
        f, m, x = one_of[i]
        s = hcomp1[(id1[one_cells[i][1]], i)]
        lunitor[i] = need(B.lunitor[f], one_of[s][1], m, x, f"left unitor of {i}")
        s = hcomp1[(i, id1[one_cells[i][0]])]
        runitor[i] = need(B.runitor[f], one_of[s][1], m, x, f"right unitor of {i}")

    associator = {}
    for (u, v) in list(hcomp1):
        for w in one_cells:
            if (v, w) not in hcomp1:
                continue
            s = hcomp1[(hcomp1[(u, v)], w)]
            t = hcomp1[(u, hcomp1[(v, w)])]
            a = B.associator[(one_of[u][0], one_of[v][0], one_of[w][0])]
            associator[(u, v, w)] = need(
                a, one_of[s][1], one_of[t][1], one_of[w][2],
                f"associator at ({u}, {v}, {w})",
            )

    cocart1 = family(
        (
            i
            for i in one_cells
            if F.fiber[B.tgt1(one_of[i][0])].is_iso(one_of[i][1])
        ),
        "cocartesian",
    )

    total = FinBicategory(
        objects=frozenset(objects),
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
            "cocartesian": cocart1,
        },
    )

    proj = PsfBicat(
        dom=total,
        cod=B,
        on0={i: obj_of[i][0] for i in objects},
        on1={i: one_of[i][0] for i in one_cells},
        on2={i: two_of[i][0] for i in two_cells},
        f2={
            (u, v): B.id2[B.hcomp1[(one_of[u][0], one_of[v][0])]]
            for (u, v) in hcomp1
        },
        f0={i: B.id2[B.id1[obj_of[i][0]]] for i in objects},
    )

    return ElementsResult(
        total=total,
        proj=proj,
        cocart=CartesianFamilies(psf=proj, c1=cocart1, c2=frozenset(two_cells)),
        obj_of=obj_of,
        one_of=one_of,
    )


def el_prime(F: CatValuedPSF) -> FinBicategory:
    """The same elements data oriented over the reversed base: a 1-cell
    (f, m, x) points from (D, y) back to (C, x).  Kept as a separate build
    so the two can be compared through the duality that identifies them."""
    B = F.base

    objects: list[str] = []
    obj_of: dict[str, tuple[str, str]] = {}
    for C in B.iter_objects():
        for x in sorted(F.fiber[C].objects):
            i = _enc(C, x)
            objects.append(i)
            obj_of[i] = (C, x)

    one_cells: dict[CellId, tuple[str, str]] = {}
    one_of: dict[CellId, tuple[CellId, CellId, str]] = {}
    for f in B.iter_one_cells():
        C, D = B.one_cells[f]
        fib = F.fiber[D]
        for x in sorted(F.fiber[C].objects):
            fx = F.ap(f, x)
            for m in sorted(fib.arrows):
                if fib.src(m) != fx:
                    continue
                i = _enc(f, m, x)
                one_cells[i] = (_enc(D, fib.tgt(m)), _enc(C, x))
                one_of[i] = (f, m, x)

    two_cells: dict[CellId, tuple[CellId, CellId]] = {}
    two_of: dict[CellId, tuple[CellId, CellId, CellId, str]] = {}
    index: dict[tuple[CellId, CellId, CellId, str], CellId] = {}
    for s in one_cells:
        f, m, x = one_of[s]
        for t in one_cells:
            g, n, x2 = one_of[t]
            if x2 != x or one_cells[t] != one_cells[s]:
                continue
            fib = F.fiber[B.tgt1(f)]
            for a in B.two_between(f, g):
                if _fcomp(fib, n, F.comp2(a, x), f"2-cell over {a}") != m:
                    continue
                i = _enc(a, m, n, x)
                two_cells[i] = (s, t)
                two_of[i] = (a, m, n, x)
                index[(a, m, n, x)] = i

    def need(a: CellId, m: CellId, n: CellId, x: str, what: str) -> CellId:
        i = index.get((a, m, n, x))
        if i is None:
            raise StructureError(
                f"no element 2-cell over ({a}, {m}, {n}, {x}) for {what}"
            )
        return i

    id1 = {}
    for i in objects:
        C, x = obj_of[i]
        id1[i] = _enc(
            B.id1[C], _finv(F.fiber[C], F.f0[C][x], f"identity at {i}"), x
        )
    id2 = {}
    for i in one_cells:
        f, m, x = one_of[i]
        id2[i] = need(B.id2[f], m, m, x, f"identity 2-cell of {i}")

    vcomp = {}
    for b in two_cells:
        for a in two_cells:
            if two_cells[b][0] != two_cells[a][1]:
                continue
            ab, m, n, x = two_of[a]
            bb, _, o, _ = two_of[b]
            vcomp[(b, a)] = need(
                B.vcomp[(bb, ab)], m, o, x, f"vertical composite ({b}, {a})"
            )

    # a after b: the base parts compose the other way around
    hcomp1 = {}
    for a_id in one_cells:
        pa, ma, xa = one_of[a_id]
        for b_id in one_cells:
            if one_cells[b_id][1] != one_cells[a_id][0]:
                continue
            pb, mb, xb = one_of[b_id]
            fib = F.fiber[B.tgt1(pb)]
            k = _fcomp(
                fib,
                mb,
                _fcomp(
                    fib,
                    F.ap_arr(pb, ma),
                    _finv(fib, F.f2[(pb, pa)][xa], f"composite ({a_id}, {b_id})"),
                    f"composite ({a_id}, {b_id})",
                ),
                f"composite ({a_id}, {b_id})",
            )
            hcomp1[(a_id, b_id)] = _enc(B.hcomp1[(pb, pa)], k, xa)

    hcomp2 = {}
    for b in two_cells:
        for a in two_cells:
            sb, tb = two_cells[b]
            sa, ta = two_cells[a]
            if one_cells[sb][0] != one_cells[sa][1]:
                continue
            s_id = hcomp1[(sb, sa)]
            t_id = hcomp1[(tb, ta)]
            bb, ab = two_of[b][0], two_of[a][0]
            hcomp2[(b, a)] = need(
                B.hcomp2[(ab, bb)],
                one_of[s_id][1],
                one_of[t_id][1],
                one_of[s_id][2],
                f"horizontal composite ({b}, {a})",
            )

    lunitor = {}
    runitor = {}
    for i in one_cells:
        f, m, x = one_of[i]
        s = hcomp1[(id1[one_cells[i][1]], i)]
        lunitor[i] = need(B.runitor[f], one_of[s][1], m, x, f"left unitor of {i}")
        s = hcomp1[(i, id1[one_cells[i][0]])]
        runitor[i] = need(B.lunitor[f], one_of[s][1], m, x, f"right unitor of {i}")

    associator = {}
    for (u, v) in list(hcomp1):
        for w in one_cells:
            if (v, w) not in hcomp1:
                continue
            s = hcomp1[(hcomp1[(u, v)], w)]
            t = hcomp1[(u, hcomp1[(v, w)])]
            base = B.associator[(one_of[w][0], one_of[v][0], one_of[u][0])]
            a = B.inv2(base)
            if a is None:
                raise StructureError(f"base associator {base} is not invertible")
            associator[(u, v, w)] = need(
                a, one_of[s][1], one_of[t][1], one_of[u][2],
                f"associator at ({u}, {v}, {w})",
            )

    return FinBicategory(
        objects=frozenset(objects),
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
