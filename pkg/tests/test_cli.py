"""CLI contract: determinism, golden files, exit codes."""

import json
from pathlib import Path

import pytest

from fusionframes.cli import main

DATA = Path(__file__).parent / "data"
GOLDEN_INSTANCE = DATA / "golden_instance.json"
GOLDEN_REPORT = DATA / "golden_report.json"
GEN_ARGS = [
    "gen", "--dim", "3", "--blocks", "3", "--dims", "1,2,2",
    "--symbol", "random_C_holding", "--seed", "42",
]


def _strip_wall_time(text: str) -> dict:
    doc = json.loads(text)
    doc.pop("wall_time", None)
    return doc


def test_gen_is_byte_deterministic(tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    assert main(GEN_ARGS + ["-o", str(a)]) == 0
    assert main(GEN_ARGS + ["-o", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()


def test_gen_matches_golden(tmp_path):
    out = tmp_path / "inst.json"
    assert main(GEN_ARGS + ["-o", str(out)]) == 0
    assert out.read_bytes() == GOLDEN_INSTANCE.read_bytes()


def test_check_report_matches_golden(tmp_path):
    out = tmp_path / "report.json"
    code = main(["check", "--suite", "all", str(GOLDEN_INSTANCE), "--report", str(out)])
    assert code == 0
    assert _strip_wall_time(out.read_text()) == _strip_wall_time(GOLDEN_REPORT.read_text())


def test_check_random_deterministic(tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    args = ["check", "--suite", "multipliers", "--random", "3", "--seed", "9"]
    assert main(args + ["--report", str(a)]) == 0
    assert main(args + ["--report", str(b)]) == 0
    assert _strip_wall_time(a.read_text()) == _strip_wall_time(b.read_text())


def test_report_schema(tmp_path):
    out = tmp_path / "report.json"
    main(["check", "--suite", "duals", str(GOLDEN_INSTANCE), "--report", str(out)])
    doc = json.loads(out.read_text())
    assert doc["schema"] == "ffv1-report"
    assert doc["suite"] == "duals"
    assert set(doc["summary"]) == {"pass", "fail", "indeterminate"}
    for entry in doc["checks"]:
        assert {"name", "anchor", "residual", "tolerance", "verdict"} <= set(entry)
        assert entry["verdict"] in ("pass", "fail", "indeterminate")
        if entry["verdict"] == "pass":
            assert entry["residual"] <= entry["tolerance"]
        elif entry["verdict"] == "fail":
            assert entry["residual"] > entry["tolerance"]


def test_exit_code_failure_on_tight_tolerance(tmp_path):
    code = main(
        ["check", "--suite", "duals", str(GOLDEN_INSTANCE),
         "--tol-eq", "1e-30", "--report", str(tmp_path / "r.json")]
    )
    assert code == 1


def test_exit_code_missing_file():
    assert main(["check", "--suite", "duals", "no_such_file.json"]) == 2


def test_exit_code_invalid_file(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{}")
    assert main(["check", "--suite", "duals", str(bad)]) == 2


def test_exit_code_bad_suite():
    with pytest.raises(SystemExit) as info:
        main(["check", "--suite", "bogus", str(GOLDEN_INSTANCE)])
    assert info.value.code == 2


def test_exit_code_conflicting_inputs():
    assert main(["check", "--suite", "duals"]) == 2
    assert main(["check", "--suite", "duals", str(GOLDEN_INSTANCE), "--random", "2"]) == 2


def test_gen_usage_errors(tmp_path):
    out = str(tmp_path / "x.json")
    assert main(["gen", "--dim", "0", "--blocks", "1", "--dims", "0", "-o", out]) == 2
    assert main(["gen", "--dim", "3", "--blocks", "2", "--dims", "1", "-o", out]) == 2
    with pytest.raises(SystemExit) as info:
        main(["gen", "--dim", "3", "--blocks", "2", "--dims", "1,1",
              "--symbol", "bogus", "-o", out])
    assert info.value.code == 2


def test_explain_known_and_unknown(capsys):
    assert main(["explain", "dual_span"]) == 0
    out = capsys.readouterr().out
    assert "rank[T_A S_A^-1 | P_ker(T_A^*) E_rs] = N*k" in out
    assert main(["explain", "riesz_symbol_iff"]) == 0
    assert main(["explain", "inverse_multiplier_dual"]) == 0
    assert main(["explain", "definitely_not_a_check"]) == 2


def test_gen_with_local_frames(tmp_path):
    out = tmp_path / "inst.json"
    assert main(GEN_ARGS + ["--local", "2", "-o", str(out)]) == 0
    doc = json.loads(out.read_text())
    assert doc["local"]["redundancy"] == 2
    code = main(["check", "--suite", "local", str(out), "--report", str(tmp_path / "r.json")])
    assert code == 0


def test_check_writes_to_stdout_without_report(capsys):
    code = main(["check", "--suite", "schatten", str(GOLDEN_INSTANCE)])
    assert code == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["schema"] == "ffv1-report"
