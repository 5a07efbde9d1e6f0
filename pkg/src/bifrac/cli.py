"""Command-line front end: load tables, run the checks, print one report.

Every command writes a single JSON report to stdout (or a short human
rendering under --human).  Reports are deterministic: identical inputs and
flags produce byte-identical output.  The one deliberate exception is
--timing, which stamps wall-clock milliseconds into the report.

Exit status: 0 when every verdict passes, 1 when a checked property fails
(including precondition failures on otherwise well-formed input), 2 when
the invocation or the input itself is malformed.
"""

from __future__ import annotations

import argparse
import hashlib
import sys
import time

from .axioms import (
    NonFilteredError,
    build_pseudococone,
    check_bf4_tail,
    check_closure,
    check_flt,
    check_frc,
    check_pflt,
    find_1flt,
    find_cospan,
    find_ore_square,
    find_span_completion,
    validate_cocone,
)
from .colimit import colimit_direct, colimit_via_localization, crosscheck_iso
from .core import (
    FinBicategory,
    FinCategory,
    HighSeverityFinding,
    PreconditionError,
    StructureError,
    TypedExprError,
    op_category,
    pi0,
    validate_bicategory,
    validate_category,
)
from .functors import CatValuedPSF, PsfBicat, validate_catvalued, validate_psf
from .gen import gen_bicat, gen_diagram
from .grothendieck import elements
from .homfractions import (
    biterminal_objects,
    check_biterminal_preserved,
    crosscheck_homcat,
    homcat_pronk,
    homcat_via_colimit,
)
from .io import (
    bicategory_to_dict,
    category_to_dict,
    dump_json,
    file_sha256,
    load_any,
    resolve_fixture,
)
from .localization import check_R, localize_left, localize_right

OK, FAIL, ERROR = 0, 1, 2


class _InputError(Exception):
    """Bad invocation or unusable input; maps to exit status 2."""


# ---------------------------------------------------------------------------
# input loading


def _generate(token: str, seed: int):
    """Seeded stand-ins for files: chain-shaped bases and thin diagrams."""
    if token == "gen:bicat":
        B = gen_bicat(seed)
        return B, dump_json(bicategory_to_dict(B))
    if token == "gen:chains":
        B = gen_bicat(seed, components=2)
        return B, dump_json(bicategory_to_dict(B))
    if token in ("gen:diagram", "gen:diagram2"):
        B = gen_bicat(seed, components=1 if token == "gen:diagram" else 2)
        F = gen_diagram(seed, B)
        blob = dump_json(
            {
                "base": bicategory_to_dict(B),
                "fibers": {o: category_to_dict(F.fiber[o]) for o in sorted(F.fiber)},
            }
        )
        return F, blob
    raise _InputError(
        f"unknown generated input {token!r}; "
        "use gen:bicat, gen:chains, gen:diagram, or gen:diagram2"
    )


def _load(token: str, seed: int):
    """Resolve one input token to (object, {token: content hash})."""
    if token.startswith("gen:"):
        obj, blob = _generate(token, seed)
        return obj, {token: hashlib.sha256(blob.encode()).hexdigest()}
    path = resolve_fixture(token)
    return load_any(path), {token: file_sha256(path)}


_KINDS = {
    FinCategory: "category",
    FinBicategory: "bicategory",
    PsfBicat: "pseudofunctor",
    CatValuedPSF: "diagram of categories",
}


def _want(obj, cls, command: str):
    if not isinstance(obj, cls):
        raise _InputError(
            f"{command} needs a {_KINDS[cls]}, got a {_KINDS[type(obj)]}"
        )
    return obj


def _family(tables, name: str | None):
    if name is None:
        raise _InputError("--family is required here")
    try:
        return tables.families[name]
    except KeyError:
        raise _InputError(
            f"no family named {name!r}; declared: {sorted(tables.families)}"
        ) from None


def _object_of(B: FinBicategory, name: str | None, flag: str) -> str:
    if name is None:
        raise _InputError(f"{flag} is required here")
    if name not in B.objects:
        raise _InputError(f"no object named {name!r}; have: {sorted(B.objects)}")
    return name


# ---------------------------------------------------------------------------
# witness tables


def _flt_witnesses(B: FinBicategory) -> dict:
    cospans = {}
    for a in B.iter_objects():
        for b in B.iter_objects():
            if a > b:
                continue
            found = find_cospan(B, a, b)
            if found is not None:
                c, u, v = found
                cospans[f"({a},{b})"] = {"vertex": c, "left": u, "right": v}
    return {"cospans": cospans, "joins": _join_witnesses(B)}


def _pflt_witnesses(B: FinBicategory) -> dict:
    completions = {}
    for u in B.iter_one_cells():
        for v in B.iter_one_cells():
            if B.src1(u) != B.src1(v) or u > v:
                continue
            found = find_span_completion(B, u, v)
            if found is not None:
                r, s = found
                completions[f"({u},{v})"] = {"left": r, "right": s}
    return {"completions": completions, "joins": _join_witnesses(B)}


def _join_witnesses(B: FinBicategory) -> dict:
    joins = {}
    for f in B.iter_one_cells():
        for g in B.iter_one_cells():
            if B.one_cells[f] != B.one_cells[g] or f >= g:
                continue
            found = find_1flt(B, f, g)
            if found is not None:
                u, gamma = found
                joins[f"({f},{g})"] = {"post": u, "cell": gamma}
    return joins


def _ore_witnesses(B: FinBicategory, W) -> dict:
    squares = {}
    for w in sorted(W):
        for f in B.iter_one_cells():
            if B.tgt1(f) != B.tgt1(w):
                continue
            found = find_ore_square(B, W, w, f)
            if found is not None:
                u, h, alpha = found
                squares[f"({w},{f})"] = {
                    "member-leg": u,
                    "other-leg": h,
                    "filler": alpha,
                }
    return squares


# ---------------------------------------------------------------------------
# subcommands; each returns (inputs, verdicts, witnesses, counterexamples,
# notes, produced) where produced is the emittable dict or None


def _cmd_validate(args):
    obj, inputs = _load(args.input, args.seed)
    if isinstance(obj, FinCategory):
        rep = validate_category(obj)
    elif isinstance(obj, FinBicategory):
        rep = validate_bicategory(obj)
    elif isinstance(obj, CatValuedPSF):
        rep = validate_catvalued(obj)
    else:
        rep = validate_psf(obj)
    verdicts = {"valid": rep.ok}
    witnesses = {"kind": _KINDS[type(obj)]}
    return inputs, verdicts, witnesses, rep.to_dict()["violations"], [], None


def _cmd_axioms(args):
    obj, inputs = _load(args.input, args.seed)
    B = _want(obj, FinBicategory, "axioms")
    which = args.axiom_set
    verdicts: dict = {}
    witnesses: dict = {}
    counter: list = []
    if which == "flt":
        rep = check_flt(B)
        verdicts["filtered"] = rep.ok
        witnesses = _flt_witnesses(B)
        counter = rep.to_dict()["violations"]
    elif which == "pflt":
        rep = check_pflt(B)
        verdicts["pseudofiltered"] = rep.ok
        witnesses = _pflt_witnesses(B)
        counter = rep.to_dict()["violations"]
    elif which == "frc":
        W = _family(B, args.family)
        rep = check_frc(B, W)
        verdicts["right-fractions"] = rep.ok
        witnesses = {"squares": _ore_witnesses(B, W)}
        counter = rep.to_dict()["violations"]
    else:
        W = _family(B, args.family)
        clos = check_closure(B, W)
        frc = check_frc(B, W)
        base = [
            v
            for v in frc.violations
            if v.law in ("0-frc", "1-frc", "1-frc-invertible")
        ]
        tail = check_bf4_tail(B, W)
        verdicts["closure"] = clos.ok
        verdicts["squares-and-descents"] = not base
        verdicts["uniqueness-tail"] = tail.ok
        witnesses = {"squares": _ore_witnesses(B, W)}
        counter = (
            clos.to_dict()["violations"]
            + [{"law": v.law, "cells": list(v.cells), "message": v.message} for v in base]
            + tail.to_dict()["violations"]
        )
    return inputs, verdicts, witnesses, counter, [], None


def _cmd_groth(args):
    obj, inputs = _load(args.input, args.seed)
    F = _want(obj, CatValuedPSF, "groth")
    res = elements(F)
    total = res.total
    verdicts = {"total-coherent": validate_bicategory(total).ok}
    witnesses = {
        "counts": {
            "objects": len(total.objects),
            "cells1": len(tuple(total.iter_one_cells())),
            "cells2": len(tuple(total.iter_two_cells())),
        },
        "cocartesian": sorted(res.cocart1),
    }
    return inputs, verdicts, witnesses, [], [], bicategory_to_dict(total)


def _cmd_pi0(args):
    obj, inputs = _load(args.input, args.seed)
    B = _want(obj, FinBicategory, "pi0")
    C0, qmap = pi0(B)
    verdicts = {"category-valid": validate_category(C0).ok}
    witnesses = {"classes": {cell: qmap[cell] for cell in sorted(qmap)}}
    return inputs, verdicts, witnesses, [], [], category_to_dict(C0)


def _cmd_localize(args):
    obj, inputs = _load(args.input, args.seed)
    C = _want(obj, FinCategory, "localize")
    W = _family(C, args.family)
    base = C if args.side == "right" else op_category(C)
    chk = check_R(base, W)
    verdicts = {"fraction-axioms": chk.ok}
    witnesses: dict = {}
    produced = None
    if chk.ok:
        L = localize_right(C, W) if args.side == "right" else localize_left(C, W)
        verdicts["localized-valid"] = validate_category(L.category).ok
        verdicts["no-extra-identifications"] = not L.closure_added
        witnesses = {
            "objects": sorted(L.category.objects),
            "arrow-count": len(L.category.arrows),
        }
        produced = category_to_dict(L.category)
    return inputs, verdicts, witnesses, chk.to_dict()["violations"], [], produced


def _cmd_colimit(args):
    obj, inputs = _load(args.input, args.seed)
    F = _want(obj, CatValuedPSF, "colimit")
    verdicts: dict = {}
    witnesses: dict = {}
    produced = None
    if args.method in ("direct", "both"):
        col = colimit_direct(F)
        verdicts["direct-valid"] = validate_category(col.category).ok
        produced = category_to_dict(col.category)
    if args.method in ("localization", "both"):
        loc = colimit_via_localization(F)
        verdicts["localization-valid"] = validate_category(loc).ok
        if produced is None:
            produced = category_to_dict(loc)
    if args.method == "both":
        h, k = crosscheck_iso(F)
        verdicts["isomorphic"] = True
        witnesses["iso"] = {
            "to-direct": {"objects": h.on_obj, "arrows": h.on_arr},
            "to-localization": {"objects": k.on_obj, "arrows": k.on_arr},
        }
    return inputs, verdicts, witnesses, [], [], produced


def _cmd_homcat(args):
    obj, inputs = _load(args.input, args.seed)
    B = _want(obj, FinBicategory, "homcat")
    W = _family(B, args.family)
    src = _object_of(B, args.source, "--source")
    tgt = _object_of(B, args.target, "--target")
    verdicts: dict = {}
    witnesses: dict = {}
    produced = None
    if args.method in ("pronk", "both"):
        hom = homcat_pronk(B, W, src, tgt)
        verdicts["quintuple-valid"] = validate_category(hom.category).ok
        produced = category_to_dict(hom.category)
    if args.method in ("colimit", "both"):
        col = homcat_via_colimit(B, W, src, tgt)
        verdicts["colimit-valid"] = validate_category(col.category).ok
        if produced is None:
            produced = category_to_dict(col.category)
    if args.method == "both":
        h, k = crosscheck_homcat(B, W, src, tgt)
        verdicts["isomorphic"] = True
        witnesses["iso"] = {
            "to-quintuples": {"objects": h.on_obj, "arrows": h.on_arr},
            "to-colimit": {"objects": k.on_obj, "arrows": k.on_arr},
        }
    notes = [
        "vertical composition uses left-nested bracketing throughout; "
        "unitor placement follows that convention"
    ]
    return inputs, verdicts, witnesses, [], notes, produced


def _cmd_cocone(args):
    obj, inputs = _load(args.input, args.seed)
    F = _want(obj, PsfBicat, "cocone")
    cone = build_pseudococone(F)
    rep = validate_cocone(F, cone)
    verdicts = {"cocone-valid": rep.ok}
    return inputs, verdicts, cone.to_dict(), rep.to_dict()["violations"], [], None


def _cmd_exactness(args):
    obj, inputs = _load(args.input, args.seed)
    B = _want(obj, FinBicategory, "exactness")
    W = _family(B, args.family)
    rep = check_biterminal_preserved(B, W)
    verdicts = {"biterminal-preserved": rep.ok}
    witnesses = {"biterminal": list(biterminal_objects(B))}
    return inputs, verdicts, witnesses, rep.to_dict()["violations"], [], None


_HANDLERS = {
    "validate": _cmd_validate,
    "axioms": _cmd_axioms,
    "groth": _cmd_groth,
    "pi0": _cmd_pi0,
    "localize": _cmd_localize,
    "colimit": _cmd_colimit,
    "homcat": _cmd_homcat,
    "cocone": _cmd_cocone,
    "exactness": _cmd_exactness,
}


# ---------------------------------------------------------------------------
# parsing, rendering, dispatch


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bifrac",
        description="checks and constructions on finite bicategory tables",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "input",
        help="fixture name, JSON file path, or a seeded stand-in "
        "(gen:bicat, gen:chains, gen:diagram, gen:diagram2)",
    )
    common.add_argument(
        "--seed", type=int, default=0, help="seed for gen: inputs (default 0)"
    )
    common.add_argument(
        "--emit",
        metavar="PATH",
        help="write the produced category/bicategory as JSON",
    )
    common.add_argument(
        "--human",
        action="store_true",
        help="render the report for reading instead of printing JSON",
    )
    common.add_argument(
        "--timing",
        action="store_true",
        help="stamp wall-clock milliseconds (reports stop being byte-identical)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser(
        "validate", parents=[common], help="structural and coherence laws"
    )

    p = sub.add_parser("axioms", parents=[common], help="filteredness or fraction axioms")
    p.add_argument(
        "--set",
        dest="axiom_set",
        choices=("flt", "pflt", "frc", "bf"),
        required=True,
        help="which axiom set to check",
    )
    p.add_argument("--family", help="arrow family name (frc and bf sets)")

    sub.add_parser(
        "groth", parents=[common], help="total bicategory of a diagram of categories"
    )
    sub.add_parser(
        "pi0", parents=[common], help="component category of a bicategory"
    )

    p = sub.add_parser("localize", parents=[common], help="category of fractions")
    p.add_argument("--family", help="arrow family name to invert")
    p.add_argument(
        "--side",
        choices=("right", "left"),
        default="right",
        help="roof orientation (default right)",
    )

    p = sub.add_parser(
        "colimit", parents=[common], help="colimit category of a diagram of categories"
    )
    p.add_argument(
        "--method",
        choices=("direct", "localization", "both"),
        default="both",
        help="construction to run; both also cross-checks (default both)",
    )

    p = sub.add_parser(
        "homcat", parents=[common], help="hom-category of the localized bicategory"
    )
    p.add_argument("--family", help="arrow family name to invert")
    p.add_argument("--source", help="source object")
    p.add_argument("--target", help="target object")
    p.add_argument(
        "--method",
        choices=("pronk", "colimit", "both"),
        default="both",
        help="presentation to build; both also cross-checks (default both)",
    )

    sub.add_parser(
        "cocone", parents=[common], help="synthesize and check a pseudococone"
    )

    p = sub.add_parser(
        "exactness", parents=[common], help="biterminal objects survive localization"
    )
    p.add_argument("--family", help="arrow family name to invert")

    return parser


def _flag_dict(args) -> dict:
    skip = ("command", "input")
    return {k: v for k, v in vars(args).items() if k not in skip}


def _human(report: dict, code: int) -> str:
    lines = [f"{report['command']}:"]
    for token in sorted(report["inputs"]):
        lines.append(f"  input {token}  sha256 {report['inputs'][token][:12]}")
    for name in sorted(report["verdicts"]):
        word = "pass" if report["verdicts"][name] else "FAIL"
        lines.append(f"  {name}: {word}")
    for v in report["counterexamples"]:
        cells = ",".join(v["cells"])
        lines.append(f"  violation [{v['law']}] at ({cells}): {v['message']}")
    for note in report["notes"]:
        lines.append(f"  note: {note}")
    if "error" in report:
        lines.append(f"  error ({report['error']['kind']}): {report['error']['message']}")
    if report.get("timing_ms") is not None:
        lines.append(f"  timing {report['timing_ms']} ms")
    lines.append(f"exit {code}")
    return "\n".join(lines) + "\n"


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    t0 = time.perf_counter()
    report: dict = {
        "command": args.command,
        "inputs": {},
        "flags": _flag_dict(args),
        "verdicts": {},
        "witnesses": {},
        "counterexamples": [],
        "notes": [],
        "timing_ms": None,
    }
    produced = None
    try:
        inputs, verdicts, witnesses, counter, notes, produced = _HANDLERS[
            args.command
        ](args)
        report["inputs"] = inputs
        report["verdicts"] = verdicts
        report["witnesses"] = witnesses
        report["counterexamples"] = counter
        report["notes"] = notes
        code = OK if all(verdicts.values()) else FAIL
    except (_InputError, StructureError, TypedExprError) as e:
        report["error"] = {"kind": type(e).__name__.lstrip("_"), "message": str(e)}
        code = ERROR
    except (PreconditionError, NonFilteredError, HighSeverityFinding) as e:
        report["error"] = {"kind": type(e).__name__, "message": str(e)}
        code = FAIL

    if args.emit and code != ERROR:
        if produced is None:
            report["error"] = {
                "kind": "InputError",
                "message": f"{args.command} produces nothing to emit",
            }
            code = ERROR
        else:
            dump_json(produced, args.emit)
            report["notes"] = list(report["notes"]) + [f"wrote {args.emit}"]

    if args.timing:
        report["timing_ms"] = round((time.perf_counter() - t0) * 1000.0, 3)

    out = _human(report, code) if args.human else dump_json(report)
    sys.stdout.write(out)
    return code


if __name__ == "__main__":
    raise SystemExit(main())
