"""Command-line behavior: exit codes, report shape, determinism, emission."""

import json

import pytest

from bifrac.cli import main
from bifrac.core import validate_bicategory, validate_category
from bifrac.io import load_any


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


def run_json(capsys, *argv):
    code, out = run(capsys, *argv)
    return code, json.loads(out)


def test_validate_fixture_passes(capsys):
    code, report = run_json(capsys, "validate", "fixtures/fixp")
    assert code == 0
    assert report["verdicts"] == {"valid": True}
    assert report["command"] == "validate"
    assert list(report["inputs"]) == ["fixtures/fixp"]
    assert len(report["inputs"]["fixtures/fixp"]) == 64


def test_validate_dispatches_on_format(capsys):
    for token, kind in [
        ("fixtures/fixi_cat", "category"),
        ("fixtures/fixi", "bicategory"),
        ("fixtures/psf_id_fixi", "pseudofunctor"),
        ("fixtures/fixf", "diagram of categories"),
    ]:
        code, report = run_json(capsys, "validate", token)
        assert code == 0
        assert report["witnesses"]["kind"] == kind


def test_axioms_frc_passes_with_witness_table(capsys):
    code, report = run_json(
        capsys, "axioms", "fixtures/fixi", "--set", "frc", "--family", "all"
    )
    assert code == 0
    assert report["verdicts"] == {"right-fractions": True}
    squares = report["witnesses"]["squares"]
    assert squares["(u,u)"] == {
        "filler": "1_u",
        "member-leg": "i0",
        "other-leg": "i0",
    }
    # one row per (member, cospan arrow) pair
    assert sorted(squares) == ["(i0,i0)", "(i1,i1)", "(i1,u)", "(u,i1)", "(u,u)"]


def test_axioms_frc_failure_names_laws(capsys):
    code, report = run_json(
        capsys, "axioms", "fixtures/fixe", "--set", "frc", "--family", "all"
    )
    assert code == 1
    assert report["verdicts"] == {"right-fractions": False}
    laws = {v["law"] for v in report["counterexamples"]}
    assert laws == {"1-frc", "2-frc"}


def test_axioms_flt_and_pflt(capsys):
    code, report = run_json(capsys, "axioms", "fixtures/fixi", "--set", "flt")
    assert code == 0
    assert report["verdicts"] == {"filtered": True}
    assert report["witnesses"]["cospans"]["(0,1)"]["vertex"] == "1"

    code, report = run_json(capsys, "axioms", "gen:chains", "--set", "flt", "--seed", "3")
    assert code == 1
    assert any(v["law"] == "0-flt" for v in report["counterexamples"])

    code, report = run_json(capsys, "axioms", "gen:chains", "--set", "pflt", "--seed", "3")
    assert code == 0
    assert report["verdicts"] == {"pseudofiltered": True}


def test_axioms_bf_set(capsys):
    code, report = run_json(
        capsys, "axioms", "fixtures/fixi", "--set", "bf", "--family", "all"
    )
    assert code == 0
    assert report["verdicts"] == {
        "closure": True,
        "squares-and-descents": True,
        "uniqueness-tail": True,
    }


def test_colimit_both_reports_iso_witness(capsys):
    code, report = run_json(capsys, "colimit", "fixtures/fixf", "--method", "both")
    assert code == 0
    assert report["verdicts"] == {
        "direct-valid": True,
        "localization-valid": True,
        "isomorphic": True,
    }
    iso = report["witnesses"]["iso"]
    objs = sorted(iso["to-direct"]["objects"])
    assert objs == ["(0,x)", "(0,y)", "(1,p)", "(1,q)"]
    assert iso["to-localization"]["objects"].keys() == iso["to-direct"]["objects"].keys()


def test_homcat_both_flags_convention(capsys):
    code, report = run_json(
        capsys,
        "homcat",
        "fixtures/fixp",
        "--family",
        "all",
        "--source",
        "A",
        "--target",
        "B",
    )
    assert code == 0
    assert report["verdicts"] == {
        "quintuple-valid": True,
        "colimit-valid": True,
        "isomorphic": True,
    }
    assert any("left-nested" in note for note in report["notes"])


def test_pi0_emits_component_category(capsys, tmp_path):
    out = tmp_path / "pi0.json"
    code, report = run_json(capsys, "pi0", "fixtures/fixp", "--emit", str(out))
    assert code == 0
    assert report["witnesses"]["classes"]["f"] == report["witnesses"]["classes"]["g"]
    C = load_any(out)
    assert validate_category(C).ok
    assert sorted(C.objects) == ["A", "B"]


def test_groth_emits_total_bicategory(capsys, tmp_path):
    out = tmp_path / "total.json"
    code, report = run_json(capsys, "groth", "fixtures/fixf", "--emit", str(out))
    assert code == 0
    assert report["verdicts"] == {"total-coherent": True}
    assert report["witnesses"]["counts"] == {"objects": 4, "cells1": 8, "cells2": 8}
    B = load_any(out)
    assert validate_bicategory(B).ok


def test_localize_right_and_left(capsys):
    code, report = run_json(
        capsys, "localize", "fixtures/fixi_cat", "--family", "all"
    )
    assert code == 0
    assert report["verdicts"] == {
        "fraction-axioms": True,
        "localized-valid": True,
        "no-extra-identifications": True,
    }
    assert report["witnesses"]["arrow-count"] == 4

    code, report = run_json(
        capsys, "localize", "fixtures/fixi_cat", "--family", "all", "--side", "left"
    )
    assert code == 0
    assert report["witnesses"]["arrow-count"] == 4


def test_cocone_synthesis(capsys):
    code, report = run_json(capsys, "cocone", "fixtures/psf_id_fixi")
    assert code == 0
    assert report["verdicts"] == {"cocone-valid": True}
    assert report["witnesses"]["vertex"] == "1"


def test_exactness(capsys):
    code, report = run_json(capsys, "exactness", "fixtures/fixi", "--family", "all")
    assert code == 0
    assert report["verdicts"] == {"biterminal-preserved": True}
    assert report["witnesses"]["biterminal"] == ["1"]


def test_exactness_without_biterminal_fails(capsys):
    code, report = run_json(capsys, "exactness", "fixtures/fixm", "--family", "all")
    assert code == 1
    assert "biterminal" in report["error"]["message"]


def test_seeded_inputs_work(capsys):
    code, report = run_json(capsys, "validate", "gen:bicat", "--seed", "7")
    assert code == 0
    code, report = run_json(
        capsys, "colimit", "gen:diagram2", "--seed", "3", "--method", "both"
    )
    assert code == 0
    assert report["verdicts"]["isomorphic"] is True


def test_reports_are_byte_identical(capsys):
    _, first = run(capsys, "homcat", "fixtures/fixp", "--family", "all",
                   "--source", "A", "--target", "B")
    _, second = run(capsys, "homcat", "fixtures/fixp", "--family", "all",
                    "--source", "A", "--target", "B")
    assert first == second
    _, third = run(capsys, "validate", "gen:bicat", "--seed", "5")
    _, fourth = run(capsys, "validate", "gen:bicat", "--seed", "5")
    assert third == fourth


def test_input_errors_exit_2(capsys):
    code, report = run_json(capsys, "validate", "no-such-file")
    assert code == 2
    code, report = run_json(capsys, "localize", "fixtures/fixp", "--family", "all")
    assert code == 2
    assert "needs a category" in report["error"]["message"]
    code, report = run_json(capsys, "axioms", "fixtures/fixi", "--set", "frc")
    assert code == 2
    code, report = run_json(
        capsys, "axioms", "fixtures/fixi", "--set", "frc", "--family", "nope"
    )
    assert code == 2
    assert "declared" in report["error"]["message"]
    code, report = run_json(capsys, "validate", "fixtures/fixp", "--emit", "/tmp/no.json")
    assert code == 2
    assert "nothing to emit" in report["error"]["message"]


def test_unknown_flag_exits_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["validate", "fixtures/fixp", "--bogus"])
    assert exc.value.code == 2


def test_human_rendering(capsys):
    code, out = run(
        capsys, "axioms", "fixtures/fixe", "--set", "frc", "--family", "all", "--human"
    )
    assert code == 1
    assert "right-fractions: FAIL" in out
    assert "violation [1-frc]" in out
    assert "exit 1" in out


def test_timing_flag_stamps_milliseconds(capsys):
    code, report = run_json(capsys, "pi0", "fixtures/fixp", "--timing")
    assert code == 0
    assert isinstance(report["timing_ms"], float)
