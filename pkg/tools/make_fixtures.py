#!/usr/bin/env python3
"""Regenerate the packaged fixture presentations.

Run from the repository root:

    python3 tools/make_fixtures.py

Output is deterministic (sorted keys), so reruns are diffable.
"""

from __future__ import annotations

import json
from itertools import product
from pathlib import Path

OUT = Path(__file__).resolve().parent.parent / "src" / "bifrac" / "fixtures"


def dump(name: str, obj: dict) -> None:
    OUT.mkdir(parents=True, exist_ok=True)
    (OUT / name).write_text(json.dumps(obj, sort_keys=True, indent=2) + "\n")
    print(f"wrote {name}")


def one_object() -> dict:
    """A point: one object, only its identity 1-cell."""
    return {
        "format": "bicategory",
        "objects": ["*"],
        "cells1": [{"id": "1", "src": "*", "tgt": "*"}],
        "identities1": {"*": "1"},
        "hcomp1": [["1", "1", "1"]],
        "families": {"all": ["1"], "identities": ["1"]},
    }


def interval() -> dict:
    """Two objects joined by a single arrow; locally discrete."""
    return {
        "format": "bicategory",
        "objects": ["0", "1"],
        "cells1": [
            {"id": "i0", "src": "0", "tgt": "0"},
            {"id": "i1", "src": "1", "tgt": "1"},
            {"id": "u", "src": "0", "tgt": "1"},
        ],
        "identities1": {"0": "i0", "1": "i1"},
        "hcomp1": [
            ["i0", "i0", "i0"],
            ["i1", "i1", "i1"],
            ["u", "i0", "u"],
            ["i1", "u", "u"],
        ],
        "families": {"all": ["i0", "i1", "u"], "identities": ["i0", "i1"]},
    }


def interval_category() -> dict:
    return {
        "format": "category",
        "objects": ["0", "1"],
        "arrows": {"i0": ["0", "0"], "i1": ["1", "1"], "u": ["0", "1"]},
        "identity": {"0": "i0", "1": "i1"},
        "comp": [
            ["i0", "i0", "i0"],
            ["i1", "i1", "i1"],
            ["u", "i0", "u"],
            ["i1", "u", "u"],
        ],
        "families": {"all": ["i0", "i1", "u"], "identities": ["i0", "i1"]},
    }


def parallel_pair_iso() -> dict:
    """Two parallel arrows connected by an invertible 2-cell; strict."""
    return {
        "format": "bicategory",
        "objects": ["A", "B"],
        "cells1": [
            {"id": "iA", "src": "A", "tgt": "A"},
            {"id": "iB", "src": "B", "tgt": "B"},
            {"id": "f", "src": "A", "tgt": "B"},
            {"id": "g", "src": "A", "tgt": "B"},
        ],
        "cells2": [
            {"id": "1A", "src": "iA", "tgt": "iA"},
            {"id": "1B", "src": "iB", "tgt": "iB"},
            {"id": "1f", "src": "f", "tgt": "f"},
            {"id": "1g", "src": "g", "tgt": "g"},
            {"id": "s", "src": "f", "tgt": "g"},
            {"id": "si", "src": "g", "tgt": "f"},
        ],
        "identities1": {"A": "iA", "B": "iB"},
        "identities2": {"iA": "1A", "iB": "1B", "f": "1f", "g": "1g"},
        "vcomp": [
            ["1A", "1A", "1A"],
            ["1B", "1B", "1B"],
            ["1f", "1f", "1f"],
            ["1g", "1g", "1g"],
            ["s", "1f", "s"],
            ["1g", "s", "s"],
            ["si", "1g", "si"],
            ["1f", "si", "si"],
            ["si", "s", "1f"],
            ["s", "si", "1g"],
        ],
        "hcomp1": [
            ["iA", "iA", "iA"],
            ["iB", "iB", "iB"],
            ["f", "iA", "f"],
            ["g", "iA", "g"],
            ["iB", "f", "f"],
            ["iB", "g", "g"],
        ],
        "hcomp2": [
            ["1A", "1A", "1A"],
            ["1f", "1A", "1f"],
            ["1g", "1A", "1g"],
            ["s", "1A", "s"],
            ["si", "1A", "si"],
            ["1B", "1f", "1f"],
            ["1B", "1g", "1g"],
            ["1B", "s", "s"],
            ["1B", "si", "si"],
            ["1B", "1B", "1B"],
        ],
        "families": {"all": ["iA", "iB", "f", "g"], "identities": ["iA", "iB"]},
    }


def signed_chaos() -> dict:
    """One object, three invertible 1-cells, two parallel 2-cells everywhere.

    1-cells multiply as the cyclic group of order three; 2-cells carry a sign
    that multiplies under both compositions.  Whiskering preserves signs, so
    parallel 2-cells of opposite sign can never be equalized.
    """
    ones = ["e", "a", "b"]
    mul = {
        ("e", "e"): "e", ("e", "a"): "a", ("e", "b"): "b",
        ("a", "e"): "a", ("a", "a"): "b", ("a", "b"): "e",
        ("b", "e"): "b", ("b", "a"): "e", ("b", "b"): "a",
    }
    signs = ["p", "m"]

    def c2(u: str, v: str, s: str) -> str:
        return f"{u}{v}{s}"

    cells2 = [
        {"id": c2(u, v, s), "src": u, "tgt": v}
        for u in ones for v in ones for s in signs
    ]
    vcomp = []
    for u, v, w in product(ones, repeat=3):
        for s1, s2 in product(signs, repeat=2):
            r = "p" if s1 == s2 else "m"
            vcomp.append([c2(v, w, s2), c2(u, v, s1), c2(u, w, r)])
    hcomp2 = []
    for u2, v2, s2 in product(ones, ones, signs):
        for u, v, s1 in product(ones, ones, signs):
            r = "p" if s1 == s2 else "m"
            hcomp2.append(
                [c2(u2, v2, s2), c2(u, v, s1), c2(mul[(u2, u)], mul[(v2, v)], r)]
            )
    return {
        "format": "bicategory",
        "objects": ["*"],
        "cells1": [{"id": u, "src": "*", "tgt": "*"} for u in ones],
        "cells2": cells2,
        "identities1": {"*": "e"},
        "identities2": {u: c2(u, u, "p") for u in ones},
        "vcomp": vcomp,
        "hcomp1": [[g, f, mul[(g, f)]] for g in ones for f in ones],
        "hcomp2": hcomp2,
        "families": {"all": ones, "identities": ["e"]},
    }


def saturating_monoid() -> dict:
    """One 1-cell whose endo-2-cells add with saturation at two.

    The middle cell is not invertible, which no purely identity-2-cell
    presentation can exhibit.
    """
    levels = {"1": 0, "n": 1, "z": 2}
    names = {v: k for k, v in levels.items()}
    table = []
    for x in levels.values():
        for y in levels.values():
            table.append([names[y], names[x], names[min(x + y, 2)]])
    return {
        "format": "bicategory",
        "objects": ["*"],
        "cells1": [{"id": "f", "src": "*", "tgt": "*"}],
        "cells2": [{"id": k, "src": "f", "tgt": "f"} for k in sorted(levels)],
        "identities1": {"*": "f"},
        "identities2": {"f": "1"},
        "vcomp": table,
        "hcomp1": [["f", "f", "f"]],
        "hcomp2": table,
        "families": {"all": ["f"], "identities": ["f"]},
    }


def parallel_pair_with_top() -> dict:
    """The parallel-pair fixture extended with a strictly biterminal object."""
    base = parallel_pair_iso()
    base["objects"] = ["A", "B", "T"]
    base["cells1"] += [
        {"id": "iT", "src": "T", "tgt": "T"},
        {"id": "tA", "src": "A", "tgt": "T"},
        {"id": "tB", "src": "B", "tgt": "T"},
    ]
    base["cells2"] += [
        {"id": "1T", "src": "iT", "tgt": "iT"},
        {"id": "1tA", "src": "tA", "tgt": "tA"},
        {"id": "1tB", "src": "tB", "tgt": "tB"},
    ]
    base["identities1"]["T"] = "iT"
    base["identities2"].update({"iT": "1T", "tA": "1tA", "tB": "1tB"})
    base["vcomp"] += [
        ["1T", "1T", "1T"],
        ["1tA", "1tA", "1tA"],
        ["1tB", "1tB", "1tB"],
    ]
    base["hcomp1"] += [
        ["iT", "iT", "iT"],
        ["tA", "iA", "tA"],
        ["iT", "tA", "tA"],
        ["tB", "iB", "tB"],
        ["iT", "tB", "tB"],
        ["tB", "f", "tA"],
        ["tB", "g", "tA"],
    ]
    base["hcomp2"] += [
        ["1T", "1T", "1T"],
        ["1T", "1tA", "1tA"],
        ["1T", "1tB", "1tB"],
        ["1tA", "1A", "1tA"],
        ["1tB", "1f", "1tA"],
        ["1tB", "1g", "1tA"],
        ["1tB", "s", "1tA"],
        ["1tB", "si", "1tA"],
        ["1tB", "1B", "1tB"],
    ]
    base["families"] = {
        "all": ["iA", "iB", "iT", "f", "g", "tA", "tB"],
        "identities": ["iA", "iB", "iT"],
    }
    return base


def collapsed_idempotent() -> dict:
    """One arrow with an extra idempotent endo-cell, killed by a further leg.

    The idempotent ef and the identity uf are distinct parallel 2-cells, yet
    whiskering with t merges them, so the whole thing is still filtered.  The
    identity of f is named so that searches in id order meet ef first.
    """
    return {
        "format": "bicategory",
        "objects": ["A", "B", "T"],
        "cells1": [
            {"id": "iA", "src": "A", "tgt": "A"},
            {"id": "iB", "src": "B", "tgt": "B"},
            {"id": "iT", "src": "T", "tgt": "T"},
            {"id": "f", "src": "A", "tgt": "B"},
            {"id": "t", "src": "B", "tgt": "T"},
            {"id": "m", "src": "A", "tgt": "T"},
        ],
        "cells2": [
            {"id": "1A", "src": "iA", "tgt": "iA"},
            {"id": "1B", "src": "iB", "tgt": "iB"},
            {"id": "1T", "src": "iT", "tgt": "iT"},
            {"id": "uf", "src": "f", "tgt": "f"},
            {"id": "ef", "src": "f", "tgt": "f"},
            {"id": "1t", "src": "t", "tgt": "t"},
            {"id": "1m", "src": "m", "tgt": "m"},
        ],
        "identities1": {"A": "iA", "B": "iB", "T": "iT"},
        "identities2": {"iA": "1A", "iB": "1B", "iT": "1T", "f": "uf", "t": "1t", "m": "1m"},
        "vcomp": [
            ["1A", "1A", "1A"],
            ["1B", "1B", "1B"],
            ["1T", "1T", "1T"],
            ["1t", "1t", "1t"],
            ["1m", "1m", "1m"],
            ["uf", "uf", "uf"],
            ["uf", "ef", "ef"],
            ["ef", "uf", "ef"],
            ["ef", "ef", "ef"],
        ],
        "hcomp1": [
            ["iA", "iA", "iA"],
            ["iB", "iB", "iB"],
            ["iT", "iT", "iT"],
            ["f", "iA", "f"],
            ["iB", "f", "f"],
            ["t", "iB", "t"],
            ["iT", "t", "t"],
            ["m", "iA", "m"],
            ["iT", "m", "m"],
            ["t", "f", "m"],
        ],
        "hcomp2": [
            ["1A", "1A", "1A"],
            ["uf", "1A", "uf"],
            ["ef", "1A", "ef"],
            ["1B", "uf", "uf"],
            ["1B", "ef", "ef"],
            ["1B", "1B", "1B"],
            ["1t", "uf", "1m"],
            ["1t", "ef", "1m"],
            ["1t", "1B", "1t"],
            ["1m", "1A", "1m"],
            ["1T", "1t", "1t"],
            ["1T", "1m", "1m"],
            ["1T", "1T", "1T"],
        ],
        "families": {
            "all": ["iA", "iB", "iT", "f", "t", "m"],
            "identities": ["iA", "iB", "iT"],
        },
    }


def interval_diagram() -> dict:
    """Categories over the interval: two points flowing into a free arrow."""
    return {
        "format": "catvalued",
        "base": "fixi.json",
        "fibers": {
            "0": {
                "objects": ["x", "y"],
                "arrows": {"ix": ["x", "x"], "iy": ["y", "y"]},
                "identity": {"x": "ix", "y": "iy"},
                "comp": [["ix", "ix", "ix"], ["iy", "iy", "iy"]],
            },
            "1": {
                "objects": ["p", "q"],
                "arrows": {"ip": ["p", "p"], "iq": ["q", "q"], "e": ["p", "q"]},
                "identity": {"p": "ip", "q": "iq"},
                "comp": [
                    ["ip", "ip", "ip"],
                    ["iq", "iq", "iq"],
                    ["e", "ip", "e"],
                    ["iq", "e", "e"],
                ],
            },
        },
        "on1": {
            "i0": {"objects": {"x": "x", "y": "y"}},
            "i1": {"objects": {"p": "p", "q": "q"}, "arrows": {"e": "e"}},
            "u": {"objects": {"x": "p", "y": "q"}},
        },
    }


def pair_shape() -> dict:
    """Two parallel arrows, no relations; locally discrete."""
    return {
        "format": "bicategory",
        "objects": ["X", "Y"],
        "cells1": [
            {"id": "iX", "src": "X", "tgt": "X"},
            {"id": "iY", "src": "Y", "tgt": "Y"},
            {"id": "k", "src": "X", "tgt": "Y"},
            {"id": "l", "src": "X", "tgt": "Y"},
        ],
        "identities1": {"X": "iX", "Y": "iY"},
        "hcomp1": [
            ["iX", "iX", "iX"],
            ["iY", "iY", "iY"],
            ["k", "iX", "k"],
            ["l", "iX", "l"],
            ["iY", "k", "k"],
            ["iY", "l", "l"],
        ],
        "families": {"all": ["iX", "iY", "k", "l"], "identities": ["iX", "iY"]},
    }


def main() -> None:
    dump("fix1.json", one_object())
    dump("fixi.json", interval())
    dump("fixi_cat.json", interval_category())
    dump("fixp.json", parallel_pair_iso())
    dump("fixs.json", signed_chaos())
    dump("fixm.json", saturating_monoid())
    dump("fixw.json", parallel_pair_with_top())
    dump("fixe.json", collapsed_idempotent())
    dump("fixf.json", interval_diagram())
    dump("pairshape.json", pair_shape())
    dump(
        "psf_parallel_fixp.json",
        {
            "format": "pseudofunctor",
            "dom": "pairshape.json",
            "cod": "fixp.json",
            "on0": {"X": "A", "Y": "B"},
            "on1": {"iX": "iA", "iY": "iB", "k": "f", "l": "g"},
        },
    )
    dump(
        "psf_id_fixi.json",
        {
            "format": "pseudofunctor",
            "dom": "fixi.json",
            "cod": "fixi.json",
            "on0": {"0": "0", "1": "1"},
            "on1": {"i0": "i0", "i1": "i1", "u": "u"},
        },
    )
    dump("fixf_counts.json", {"objects": 4, "cells1": 8, "cells2": 8})


if __name__ == "__main__":
    main()
