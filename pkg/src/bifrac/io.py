"""JSON presentations: loading, strict-part synthesis, fixture resolution.

A file's ``format`` key picks the schema: ``bicategory``, ``category``,
``pseudofunctor``, or ``catvalued``.  Omitted coherence data is synthesized
under a strictness check, so small presentations stay small: a bicategory
without ``cells2`` is locally discrete, one without ``unitors`` or
``associators`` must compose strictly, a functor without ``f2``/``f0`` must
preserve composition on the nose.
"""

from __future__ import annotations

import hashlib
import json
import os
from pathlib import Path

from .core import (
    ArrowFamily,
    CellId,
    FinBicategory,
    FinCategory,
    StructureError,
    family,
)
from .functors import CatFunctor, CatValuedPSF, PsfBicat

_PKG_FIXTURES = Path(__file__).parent / "fixtures"


def resolve_fixture(name: str) -> Path:
    """Literal path, then $BIFRAC_FIXTURES, then the packaged fixtures."""
    p = Path(name)
    if p.exists():
        return p
    env = os.environ.get("BIFRAC_FIXTURES")
    candidates = []
    base = name[len("fixtures/"):] if name.startswith("fixtures/") else name
    if not base.endswith(".json"):
        base += ".json"
    if env:
        candidates += [Path(env) / name, Path(env) / base]
    candidates.append(_PKG_FIXTURES / base)
    for c in candidates:
        if c.exists():
            return c
    raise StructureError(f"cannot resolve fixture {name!r}")


def file_sha256(path: Path | str) -> str:
    return hashlib.sha256(Path(path).read_bytes()).hexdigest()


def load_json(path: Path | str) -> dict:
    try:
        with open(path) as fh:
            data = json.load(fh)
    except (OSError, json.JSONDecodeError) as e:
        raise StructureError(f"cannot read {path}: {e}") from e
    if not isinstance(data, dict):
        raise StructureError(f"{path}: top level is not an object")
    return data


def _need(data: dict, key: str, path) -> object:
    if key not in data:
        raise StructureError(f"{path}: missing required key {key!r}")
    return data[key]


def _triples(raw, path, what) -> dict[tuple[CellId, CellId], CellId]:
    out = {}
    for entry in raw:
        if not (isinstance(entry, list) and len(entry) == 3):
            raise StructureError(f"{path}: {what} entry {entry!r} is not a triple")
        g, f, r = entry
        out[(g, f)] = r
    return out


def _families(raw, known: set[str], path) -> dict[str, ArrowFamily]:
    fams = {}
    for name, members in (raw or {}).items():
        for m in members:
            if m not in known:
                raise StructureError(f"{path}: family {name!r} names unknown cell {m!r}")
        fams[name] = family(members, name)
    return fams


def load_category(path: Path | str) -> FinCategory:
    path = Path(path)
    data = load_json(path)
    if data.get("format") != "category":
        raise StructureError(f"{path}: format is not 'category'")
    objects = frozenset(_need(data, "objects", path))
    arrows = {a: (st[0], st[1]) for a, st in _need(data, "arrows", path).items()}
    C = FinCategory(
        objects=objects,
        arrows=arrows,
        identity=dict(_need(data, "identity", path)),
        comp=_triples(data.get("comp", []), path, "comp"),
        families=_families(data.get("families"), set(arrows), path),
    )
    return C


def _synthesize_id2(one_cells: dict, taken: set[str]) -> dict[str, str]:
    id2 = {}
    for f in sorted(one_cells):
        name = f"1_{f}"
        while name in taken:
            name += "'"
        taken.add(name)
        id2[f] = name
    return id2


def _strict_unitor_check(one_cells, id1, hcomp1, path) -> None:
    for f, (s, t) in sorted(one_cells.items()):
        if hcomp1.get((id1[t], f)) != f or hcomp1.get((f, id1[s])) != f:
            raise StructureError(
                f"{path}: unitors omitted but composition with identities is not strict at {f!r}"
            )


def _strict_assoc_check(one_cells, hcomp1, path) -> None:
    for w, (ws, wt) in sorted(one_cells.items()):
        for v, (vs, vt) in sorted(one_cells.items()):
            if vs != wt:
                continue
            for u, (us, ut) in sorted(one_cells.items()):
                if us != vt:
                    continue
                if hcomp1[(hcomp1[(u, v)], w)] != hcomp1[(u, hcomp1[(v, w)])]:
                    raise StructureError(
                        f"{path}: associators omitted but composition is not associative"
                        f" at ({u!r}, {v!r}, {w!r})"
                    )


def load_bicategory(path: Path | str) -> FinBicategory:
    path = Path(path)
    data = load_json(path)
    if data.get("format") != "bicategory":
        raise StructureError(f"{path}: format is not 'bicategory'")
    objects = frozenset(_need(data, "objects", path))
    cells1 = _need(data, "cells1", path)
    one_cells = {c["id"]: (c["src"], c["tgt"]) for c in cells1}
    id1 = dict(_need(data, "identities1", path))
    hcomp1 = _triples(_need(data, "hcomp1", path), path, "hcomp1")

    if "cells2" not in data:
        # locally discrete: synthesize identity 2-cells and all their tables
        _strict_unitor_check(one_cells, id1, hcomp1, path)
        _strict_assoc_check(one_cells, hcomp1, path)
        id2 = _synthesize_id2(one_cells, set(one_cells))
        two_cells = {id2[f]: (f, f) for f in one_cells}
        vcomp = {(c, c): c for c in two_cells}
        hcomp2 = {(id2[g], id2[f]): id2[r] for (g, f), r in hcomp1.items()}
        lunitor = {f: id2[f] for f in one_cells}
        runitor = {f: id2[f] for f in one_cells}
        associator = {}
        for w, (ws, wt) in one_cells.items():
            for v, (vs, vt) in one_cells.items():
                if vs != wt:
                    continue
                for u, (us, ut) in one_cells.items():
                    if us != vt:
                        continue
                    associator[(u, v, w)] = id2[hcomp1[(hcomp1[(u, v)], w)]]
        for key in ("cells2", "identities2", "vcomp", "hcomp2", "unitors", "associators"):
            if key in data and key != "cells2":
                raise StructureError(f"{path}: {key!r} given without 'cells2'")
    else:
        two_cells = {c["id"]: (c["src"], c["tgt"]) for c in data["cells2"]}
        id2 = dict(_need(data, "identities2", path))
        vcomp = _triples(_need(data, "vcomp", path), path, "vcomp")
        hcomp2 = _triples(_need(data, "hcomp2", path), path, "hcomp2")
        if "unitors" in data:
            lunitor = {u: lr["l"] for u, lr in data["unitors"].items()}
            runitor = {u: lr["r"] for u, lr in data["unitors"].items()}
        else:
            _strict_unitor_check(one_cells, id1, hcomp1, path)
            lunitor = {f: id2[f] for f in one_cells}
            runitor = {f: id2[f] for f in one_cells}
        if "associators" in data:
            associator = {}
            for entry in data["associators"]:
                if not (isinstance(entry, list) and len(entry) == 4):
                    raise StructureError(f"{path}: associator entry {entry!r} is not a quadruple")
                u, v, w, a = entry
                associator[(u, v, w)] = a
        else:
            _strict_assoc_check(one_cells, hcomp1, path)
            associator = {}
            for w, (ws, wt) in one_cells.items():
                for v, (vs, vt) in one_cells.items():
                    if vs != wt:
                        continue
                    for u, (us, ut) in one_cells.items():
                        if us != vt:
                            continue
                        associator[(u, v, w)] = id2[hcomp1[(hcomp1[(u, v)], w)]]

    return FinBicategory(
        objects=objects,
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
        families=_families(data.get("families"), set(one_cells), path),
    )


def _resolve_ref(ref: str, basedir: Path) -> Path:
    local = basedir / ref
    if local.exists():
        return local
    return resolve_fixture(ref)


def load_psf(path: Path | str) -> PsfBicat:
    path = Path(path)
    data = load_json(path)
    if data.get("format") != "pseudofunctor":
        raise StructureError(f"{path}: format is not 'pseudofunctor'")
    dom = load_bicategory(_resolve_ref(_need(data, "dom", path), path.parent))
    cod = load_bicategory(_resolve_ref(_need(data, "cod", path), path.parent))
    on0 = dict(_need(data, "on0", path))
    on1 = dict(_need(data, "on1", path))

    if "on2" in data:
        on2 = dict(data["on2"])
    else:
        on2 = {}
    for a, (f, g) in dom.two_cells.items():
        if a in on2:
            continue
        if a == dom.id2.get(f) and f == g:
            on2[a] = cod.id2[on1[f]]
        else:
            raise StructureError(f"{path}: no image for non-identity 2-cell {a!r}")

    if "f2" in data:
        f2 = _triples(data["f2"], path, "f2")
    else:
        f2 = {}
        for (g, f), r in dom.hcomp1.items():
            if cod.hcomp1.get((on1[g], on1[f])) != on1[r]:
                raise StructureError(
                    f"{path}: 'f2' omitted but images of ({g!r}, {f!r}) do not compose strictly"
                )
            f2[(g, f)] = cod.id2[on1[r]]
    if "f0" in data:
        f0 = dict(data["f0"])
    else:
        f0 = {}
        for x in dom.objects:
            if on1[dom.id1[x]] != cod.id1[on0[x]]:
                raise StructureError(f"{path}: 'f0' omitted but identity at {x!r} is not preserved")
            f0[x] = cod.id2[cod.id1[on0[x]]]
    return PsfBicat(dom=dom, cod=cod, on0=on0, on1=on1, on2=on2, f2=f2, f0=f0)


def _category_block(block: dict, path, where: str) -> FinCategory:
    for key in ("objects", "arrows", "identity"):
        if key not in block:
            raise StructureError(f"{path}: fiber {where}: missing {key!r}")
    arrows = {a: (st[0], st[1]) for a, st in block["arrows"].items()}
    return FinCategory(
        objects=frozenset(block["objects"]),
        arrows=arrows,
        identity=dict(block["identity"]),
        comp=_triples(block.get("comp", []), path, f"fiber {where} comp"),
    )


def load_catvalued(path: Path | str) -> CatValuedPSF:
    path = Path(path)
    data = load_json(path)
    if data.get("format") != "catvalued":
        raise StructureError(f"{path}: format is not 'catvalued'")
    base = load_bicategory(_resolve_ref(_need(data, "base", path), path.parent))
    fibers_raw = _need(data, "fibers", path)
    fiber = {A: _category_block(blk, path, A) for A, blk in fibers_raw.items()}

    on1 = {}
    for u, maps in _need(data, "on1", path).items():
        if u not in base.one_cells:
            raise StructureError(f"{path}: on1 names unknown 1-cell {u!r}")
        s, t = base.one_cells[u]
        on1[u] = CatFunctor(
            dom=fiber[s],
            cod=fiber[t],
            on_obj=dict(maps.get("objects", {})),
            on_arr=dict(maps.get("arrows", {})),
        )
    # identity arrows may be left implicit in a functor table
    for u, F in on1.items():
        for x, y in list(F.on_obj.items()):
            ix = F.dom.identity.get(x)
            if ix is not None and ix not in F.on_arr and y in F.cod.identity:
                F.on_arr[ix] = F.cod.identity[y]

    on2_raw = data.get("on2", {})
    on2: dict[CellId, dict[str, CellId]] = {}
    for a, (f, g) in base.two_cells.items():
        if a in on2_raw:
            on2[a] = dict(on2_raw[a])
        elif a == base.id2.get(f) and f == g:
            src_cat = fiber[base.src1(f)]
            tgt_cat = fiber[base.tgt1(f)]
            on2[a] = {x: tgt_cat.identity[on1[f].o(x)] for x in src_cat.objects}
        else:
            raise StructureError(f"{path}: no components for non-identity 2-cell {a!r}")

    f2: dict[tuple[CellId, CellId], dict[str, CellId]] = {}
    if "f2" in data:
        for entry in data["f2"]:
            if not (isinstance(entry, list) and len(entry) == 3):
                raise StructureError(f"{path}: f2 entry {entry!r} is not a triple")
            u, v, comps = entry
            f2[(u, v)] = dict(comps)
    else:
        for (u, v), uv in base.hcomp1.items():
            comps = {}
            tgt_cat = fiber[base.tgt1(u)]
            for x in fiber[base.src1(v)].objects:
                a = on1[u].o(on1[v].o(x))
                b = on1[uv].o(x)
                if a != b:
                    raise StructureError(
                        f"{path}: 'f2' omitted but functors for ({u!r}, {v!r})"
                        f" do not compose strictly at {x!r}"
                    )
                comps[x] = tgt_cat.identity[a]
            f2[(u, v)] = comps
    f0: dict[str, dict[str, CellId]] = {}
    if "f0" in data:
        for A, comps in data["f0"].items():
            f0[A] = dict(comps)
    else:
        for A in base.objects:
            cat = fiber[A]
            comps = {}
            for x in cat.objects:
                if on1[base.id1[A]].o(x) != x:
                    raise StructureError(
                        f"{path}: 'f0' omitted but the identity functor at {A!r} moves {x!r}"
                    )
                comps[x] = cat.identity[x]
            f0[A] = comps
    return CatValuedPSF(base=base, fiber=fiber, on1=on1, on2=on2, f2=f2, f0=f0)


_LOADERS = {
    "bicategory": load_bicategory,
    "category": load_category,
    "pseudofunctor": load_psf,
    "catvalued": load_catvalued,
}


def load_any(path: Path | str):
    data = load_json(path)
    fmt = data.get("format")
    if fmt not in _LOADERS:
        raise StructureError(f"{path}: unknown format {fmt!r}")
    return _LOADERS[fmt](path)


# ---------------------------------------------------------------------------
# serialization


def category_to_dict(C: FinCategory) -> dict:
    return {
        "format": "category",
        "objects": sorted(C.objects),
        "arrows": {a: list(C.arrows[a]) for a in sorted(C.arrows)},
        "identity": {x: C.identity[x] for x in sorted(C.identity)},
        "comp": [[g, f, r] for (g, f), r in sorted(C.comp.items())],
        "families": {n: sorted(fam.members) for n, fam in sorted(C.families.items())},
    }


def bicategory_to_dict(B: FinBicategory) -> dict:
    return {
        "format": "bicategory",
        "objects": sorted(B.objects),
        "cells1": [
            {"id": f, "src": B.src1(f), "tgt": B.tgt1(f)} for f in B.iter_one_cells()
        ],
        "cells2": [
            {"id": a, "src": B.src2(a), "tgt": B.tgt2(a)} for a in B.iter_two_cells()
        ],
        "identities1": {x: B.id1[x] for x in B.iter_objects()},
        "identities2": {f: B.id2[f] for f in B.iter_one_cells()},
        "vcomp": [[b, a, r] for (b, a), r in sorted(B.vcomp.items())],
        "hcomp1": [[g, f, r] for (g, f), r in sorted(B.hcomp1.items())],
        "hcomp2": [[b, a, r] for (b, a), r in sorted(B.hcomp2.items())],
        "unitors": {
            u: {"l": B.lunitor[u], "r": B.runitor[u]} for u in B.iter_one_cells()
        },
        "associators": [[u, v, w, a] for (u, v, w), a in sorted(B.associator.items())],
        "families": {n: sorted(fam.members) for n, fam in sorted(B.families.items())},
    }


def dump_json(obj: dict, path: Path | str | None = None) -> str:
    text = json.dumps(obj, sort_keys=True, indent=2) + "\n"
    if path is not None:
        Path(path).write_text(text)
    return text
