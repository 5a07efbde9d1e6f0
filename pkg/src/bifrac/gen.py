"""Seeded generators for small coherent instances.

Bases are chain-shaped with chaotic homs: between any two parallel 1-cells
there is exactly one 2-cell, so every required equation holds by uniqueness
and any choice of composite label is coherent.  Diagrams over such bases
are strict, with chain fibers and nondecreasing transition maps composed
exactly, so all constraint cells are identities.  The same seed always
yields the same tables.
"""

from __future__ import annotations

import random

from .core import (
    ArrowFamily,
    FinBicategory,
    FinCategory,
    PreconditionError,
    family,
)
from .functors import CatFunctor, CatValuedPSF


def _cell2(p: str, q: str) -> str:
    return f"c:{p}>{q}"


def gen_bicat(
    seed: int, n_objects: int = 4, components: int = 1, fat: bool = True
) -> FinBicategory:
    """A disjoint union of chains with chaotic homs.

    Each component is a total order; some non-identity homs carry a second
    parallel 1-cell when fat.  One component gives a filtered bicategory
    whose chain top is biterminal; several give a pseudofiltered one that
    fails the cospan axiom across components.
    """
    rng = random.Random(seed)
    if components < 1 or n_objects < components:
        raise PreconditionError("need at least one object per component")
    sizes = [n_objects // components] * components
    for i in range(n_objects % components):
        sizes[i] += 1
    chains = [
        [f"o{c}{k}" for k in range(s)] for c, s in enumerate(sizes)
    ]

    one: dict[str, tuple[str, str]] = {}
    id1: dict[str, str] = {}
    for chain in chains:
        for o in chain:
            one[f"i{o}"] = (o, o)
            id1[o] = f"i{o}"
        for ia in range(len(chain)):
            for ib in range(ia + 1, len(chain)):
                a, b = chain[ia], chain[ib]
                one[f"x{a}.{b}"] = (a, b)
                if fat and rng.random() < 0.4:
                    one[f"y{a}.{b}"] = (a, b)

    homs: dict[tuple[str, str], list[str]] = {}
    for f in sorted(one):
        homs.setdefault(one[f], []).append(f)

    two: dict[str, tuple[str, str]] = {}
    for labels in homs.values():
        for p in labels:
            for q in labels:
                two[_cell2(p, q)] = (p, q)
    id2 = {f: _cell2(f, f) for f in one}

    vcomp = {}
    for t2, (mid2, r) in two.items():
        for t1, (p, mid1) in two.items():
            if mid1 == mid2:
                vcomp[(t2, t1)] = _cell2(p, r)

    hcomp1 = {}
    for g in sorted(one):
        for f in sorted(one):
            if one[f][1] != one[g][0]:
                continue
            hcomp1[(g, f)] = rng.choice(homs[(one[f][0], one[g][1])])

    hcomp2 = {}
    for tg, (g1, g2) in two.items():
        for tf, (f1, f2) in two.items():
            if one[f1][1] != one[g1][0]:
                continue
            hcomp2[(tg, tf)] = _cell2(hcomp1[(g1, f1)], hcomp1[(g2, f2)])

    lunitor = {}
    runitor = {}
    for f, (a, b) in one.items():
        lunitor[f] = _cell2(hcomp1[(id1[b], f)], f)
        runitor[f] = _cell2(hcomp1[(f, id1[a])], f)

    associator = {}
    for u in one:
        for v in one:
            if one[v][1] != one[u][0]:
                continue
            for w in one:
                if one[w][1] != one[v][0]:
                    continue
                associator[(u, v, w)] = _cell2(
                    hcomp1[(hcomp1[(u, v)], w)], hcomp1[(u, hcomp1[(v, w)])]
                )

    return FinBicategory(
        objects=frozenset(one[f][0] for f in one),
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
        families={
            "all": family(frozenset(one), "all"),
            "identities": family(frozenset(id1.values()), "identities"),
        },
    )


def _chain_cat(prefix: str, n: int) -> FinCategory:
    objects = [f"{prefix}e{k}" for k in range(n)]
    arrows = {}
    identity = {}
    for k in range(n):
        for l in range(k, n):
            arrows[f"{prefix}a{k}.{l}"] = (objects[k], objects[l])
        identity[objects[k]] = f"{prefix}a{k}.{k}"
    comp = {}
    for k in range(n):
        for l in range(k, n):
            for m in range(l, n):
                comp[(f"{prefix}a{l}.{m}", f"{prefix}a{k}.{l}")] = f"{prefix}a{k}.{m}"
    return FinCategory(
        objects=frozenset(objects), arrows=arrows, identity=identity, comp=comp
    )


def _monotone(rng: random.Random, n: int, m: int) -> dict[int, int]:
    return dict(enumerate(sorted(rng.randrange(m) for _ in range(n))))


def gen_diagram(seed: int, B: FinBicategory, max_fiber: int = 3) -> CatValuedPSF:
    """A strict chain-fiber diagram over a chain-shaped base.

    Parallel base cells act identically and composites of steps are taken
    literally, so every constraint is an identity arrow.
    """
    rng = random.Random(seed)
    objs = sorted(B.objects)

    parent = {o: o for o in objs}

    def find(o: str) -> str:
        while parent[o] != o:
            parent[o] = parent[parent[o]]
            o = parent[o]
        return o

    for a, b in B.one_cells.values():
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb
    comps: dict[str, list[str]] = {}
    for o in objs:
        comps.setdefault(find(o), []).append(o)

    size = {o: rng.randint(1, max_fiber) for o in objs}
    fiber = {o: _chain_cat(o, size[o]) for o in objs}

    phi: dict[tuple[str, str], dict[int, int]] = {}
    for members in sorted(comps.values()):
        reach = {o: len([p for p in objs if B.hom1(o, p)]) for o in members}
        chain = sorted(members, key=lambda o: (-reach[o], o))
        if len(set(reach.values())) != len(chain):
            raise PreconditionError("base is not chain-shaped")
        for o in chain:
            phi[(o, o)] = {k: k for k in range(size[o])}
        for i in range(len(chain) - 1):
            a, b = chain[i], chain[i + 1]
            phi[(a, b)] = _monotone(rng, size[a], size[b])
        for span in range(2, len(chain)):
            for i in range(len(chain) - span):
                a, m, b = chain[i], chain[i + span - 1], chain[i + span]
                phi[(a, b)] = {
                    k: phi[(m, b)][phi[(a, m)][k]] for k in range(size[a])
                }

    def obj_map(a: str, b: str) -> dict[str, str]:
        return {f"{a}e{k}": f"{b}e{v}" for k, v in phi[(a, b)].items()}

    def arr_map(a: str, b: str) -> dict[str, str]:
        p = phi[(a, b)]
        return {
            f"{a}a{k}.{l}": f"{b}a{p[k]}.{p[l]}"
            for k in range(size[a])
            for l in range(k, size[a])
        }

    on1 = {
        f: CatFunctor(
            dom=fiber[a], cod=fiber[b], on_obj=obj_map(a, b), on_arr=arr_map(a, b)
        )
        for f, (a, b) in B.one_cells.items()
    }
    on2 = {}
    for t, (f, _g) in B.two_cells.items():
        a, b = B.one_cells[f]
        om = on1[f].on_obj
        on2[t] = {x: fiber[b].identity[om[x]] for x in fiber[a].iter_objects()}
    f2 = {}
    for (u, v), uv in B.hcomp1.items():
        a = B.one_cells[v][0]
        om = on1[uv].on_obj
        c = B.one_cells[u][1]
        f2[(u, v)] = {
            x: fiber[c].identity[om[x]] for x in fiber[a].iter_objects()
        }
    f0 = {
        o: {x: fiber[o].identity[x] for x in fiber[o].iter_objects()}
        for o in objs
    }
    return CatValuedPSF(base=B, fiber=fiber, on1=on1, on2=on2, f2=f2, f0=f0)


def gen_family(seed: int, B: FinBicategory, p: float = 0.5) -> ArrowFamily:
    """A random arrow family containing the identities."""
    rng = random.Random(seed)
    members = set(B.id1.values())
    for f in sorted(B.one_cells):
        if rng.random() < p:
            members.add(f)
    return family(frozenset(members), f"seeded{seed}")
