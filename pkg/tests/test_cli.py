import json
import os
import subprocess
import sys

import pytest

from e2quantum.cli import RunConfig, UsageError, main, run_suite
from e2quantum.io import bundled_e2_path


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, *argv, "--format", "json")
    return code, json.loads(out)


def test_cocycle_solve_delta2(capsys):
    code, report = run_json(capsys, "cocycle", "solve", "--case", "delta2")
    assert code == 0
    (rec,) = report["records"]
    assert rec["result"]["phi"] == "(i*c)*P1^P2" and rec["status"] == "pass"


def test_hopf_verify_family_d(capsys):
    code, report = run_json(capsys, "hopf", "verify", "--family", "D")
    assert code == 0
    axioms = [r for r in report["records"] if r["check_name"] in
              ("hopf.algebra_map", "hopf.coassociativity", "hopf.counit", "hopf.antipode")]
    assert len(axioms) == 4 and all(r["status"] == "pass" for r in report["records"])


def test_delta1_non_coboundary_is_expected(capsys):
    code, report = run_json(capsys, "bialgebra", "coboundary", "--case", "delta1", "--param", "s=1")
    assert code == 0
    (rec,) = report["records"]
    assert rec["observed"] == "fail" and rec["expected"] == "fail" and "certificate" in rec["result"]


def test_star_records(capsys):
    code, report = run_json(capsys, "hopf", "star", "--family", "C")
    assert code == 0 and report["records"][0]["observed"] == "fail"


def test_report_schema(capsys):
    _, report = run_json(capsys, "bialgebra", "axioms", "--case", "delta3")
    assert set(report) == {"version", "config", "records"}
    for rec in report["records"]:
        assert {"check_name", "inputs", "status"} <= set(rec)
        assert rec["status"] in ("pass", "fail", "error")
        assert "elapsed" not in rec


def test_timing_flag(capsys):
    _, report = run_json(capsys, "bialgebra", "axioms", "--case", "delta3", "--timing")
    assert all("elapsed" in rec for rec in report["records"])


def test_text_table(capsys):
    code, out, _ = run(capsys, "poisson", "jacobi", "--case", "delta2")
    lines = out.splitlines()
    assert code == 0 and lines[0].startswith("check") and lines[-1] == "1/1 records pass"


def test_failed_check_exits_one(capsys, tmp_path):
    # delta(J) = J∧P1 is not a cocycle
    d = json.loads(bundled_e2_path().read_text())
    d["cobracket"] = [{"i": 2, "j": 0, "k": 2, "coeff": "-1"}]
    p = tmp_path / "bad.json"
    p.write_text(json.dumps(d))
    code, out, _ = run(capsys, "bialgebra", "axioms", "--input", str(p))
    assert code == 1 and "fail" in out


@pytest.mark.parametrize(
    "argv",
    [
        ["nonsense", "axioms"],
        ["bialgebra", "nonsense"],
        ["bialgebra", "axioms", "--param", "t=1"],
        ["bialgebra", "axioms", "--param", "s=1/0"],
        ["bialgebra", "axioms", "--param", "s"],
        ["bialgebra", "axioms", "--param", "s=1", "--param", "s=2"],
        ["bialgebra", "axioms", "--input", "{not json"],
        ["bialgebra", "axioms", "--input", "/nonexistent.json"],
        ["bialgebra", "axioms", "--case", "delta1", "--input", str(bundled_e2_path())],
        ["bialgebra", "coboundary", "--input", '{"dimension": 3, "basis": ["a","b","c"], "brackets": []}'],
        ["poisson", "semiclassical", "--family", "A"],
        ["hopf", "verify", "--order", "0"],
    ],
)
def test_usage_and_input_errors_exit_two(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2 and "error" in err


def test_run_suite_rejects_unknown_parameter():
    with pytest.raises(UsageError):
        run_suite(RunConfig("bialgebra", "axioms", params={"q": 1}))


def test_symbolic_binding(capsys):
    code, report = run_json(capsys, "bialgebra", "coboundary", "--case", "delta1", "--param", "s=s")
    assert code == 0 and report["config"]["params"] == {"s": "s"}


def _cli(argv, seed):
    env = dict(os.environ, PYTHONHASHSEED=str(seed))
    proc = subprocess.run([sys.executable, "-m", "e2quantum", *argv], capture_output=True, env=env, check=False)
    return proc.returncode, proc.stdout


@pytest.mark.parametrize(
    "argv",
    [["hopf", "star", "--order", "4"], ["cocycle", "solve"], ["hopf", "dual", "--format", "json"],
     ["bialgebra", "coboundary", "--format", "json"]],
)
def test_byte_identical_reports(argv):
    first, second = _cli(argv, 1), _cli(argv, 12345)
    assert first == second and first[0] == 0
