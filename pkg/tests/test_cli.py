import io
import json
import subprocess
import sys

import pytest

from factorpoly import cli
from factorpoly.roots import RootFindingError
from factorpoly.verify import TheoremCheck


def run(*argv):
    out = io.StringIO()
    code = cli.main([str(a) for a in argv], out=out)
    return code, out.getvalue()


def test_count_examples(fixtures):
    assert run("count", fixtures / "c3.g", "--f", 0, "--g", 1) == (0, "1 3\n")
    assert run("count", fixtures / "c3.g", "--f", 0, "--g", 2, "--method", "both") == (0, "1 3 3 1\n")
    assert run("count", fixtures / "k4.g", "--f", 1, "--g", 1) == (0, "0 0 3\n")


def test_count_formats(fixtures):
    code, text = run("count", fixtures / "c3.g", "--fugacity", "binrec", "--format", "json")
    assert code == 0 and json.loads(text) == ["1", "3/4", "3/4", "1"]
    code, text = run("count", fixtures / "c3.g", "--fugacity-config", fixtures / "mixed.json", "--format", "csv")
    assert code == 0 and text.splitlines()[0] == "j,N"


def test_analyze_examples(fixtures):
    code, text = run("analyze", "--coeffs", "1,3,3,1", "--sector", "pi")
    rep = json.loads(text)
    assert code == 0 and rep["verdicts"][0]["outcome"] == "Nonvanishing"
    assert {r["name"] for r in rep["inequalities"]} >= {"newton", "log_concavity", "toeplitz_minors",
                                                       "hurwitz_minors", "hurwitz_consequences"}
    code, text = run("analyze", "--coeffs", "1,2,2", "--sector", "pi")
    v = json.loads(text)["verdicts"][0]
    assert v["outcome"] == "Counterexample" and v["witness"] in ([-0.5, -0.5], [-0.5, 0.5])
    code, text = run("analyze", fixtures / "c3.g", "--fugacity", "binrec")
    rep = json.loads(text)
    assert rep["unit_modulus"] is True and rep["coeffs"] == ["1", "3/4", "3/4", "1"]


def test_analyze_csv_rounds_floats():
    code, text = run("analyze", "--coeffs", "1,1,1", "--format", "csv")
    rows = text.splitlines()[1:]
    assert rows and all(len(x.split(",")[1]) <= 20 for x in rows)
    assert "0.866025403784" in text


def test_verify_examples(fixtures, tmp_path):
    code, text = run("verify", "thm4", fixtures / "c3.g")
    rec = json.loads(text)
    assert code == 0 and rec["verdict"] == "Confirmed" and rec["margins"]["margin"] == 0
    report = tmp_path / "report.json"
    code, text = run("verify", "all", fixtures / "c3.g", "--report", report)
    lines = text.splitlines()
    assert code == 0 and len(lines) == 12
    assert all(json.loads(x)["verdict"] in ("Confirmed", "Inapplicable") for x in lines)
    assert len(json.loads(report.read_text())) == 12


def test_scan_writes_violations(tmp_path):
    code, text = run("scan", "--all-graphs", "--max-n", 3, "--max-m", 4, "--out", tmp_path)
    assert code == 0 and json.loads(text)["falsified"] == 0
    assert json.loads((tmp_path / "violations.json").read_text()) == []


@pytest.mark.parametrize(
    "argv",
    [
        ["count", "bad_vertex.g", "--f", "0", "--g", "1"],
        ["count", "bad_weight.g", "--f", "0", "--g", "1"],
        ["count", "bad_count.g", "--f", "0", "--g", "1"],
        ["count", "missing.g", "--f", "0", "--g", "1"],
        ["count", "c3.g", "--fugacity-config", "bad_fugacity.json"],
        ["count", "c3.g"],
        ["count", "c3.g", "--f", "2", "--g", "1"],
        ["verify", "thm99", "c3.g"],
        ["analyze", "--coeffs", "1,x"],
        ["analyze"],
        ["nonsense"],
    ],
)
def test_input_errors_exit_2(fixtures, argv, capsys):
    argv = [str(fixtures / a) if a.endswith((".g", ".json")) else a for a in argv]
    assert cli.main(argv, out=io.StringIO()) == 2


def test_cap_exit_3(fixtures):
    assert run("count", fixtures / "k4.g", "--f", 0, "--g", 3, "--method", "brute", "--brute-cap", 3)[0] == 3
    assert run("count", fixtures / "k4.g", "--f", 0, "--g", 3, "--state-cap", 1)[0] == 3


def test_mismatch_exit_4(fixtures, monkeypatch):
    monkeypatch.setattr(cli, "brute_counts", lambda G, u, brute_cap: [9])
    assert run("count", fixtures / "c3.g", "--f", 0, "--g", 1, "--method", "both")[0] == 4


def test_root_failure_exit_5(monkeypatch):
    def boom(p, tol):
        raise RootFindingError("no convergence", [1.0])

    monkeypatch.setattr(cli, "find_roots", boom)
    assert run("analyze", "--coeffs", "1,2,2")[0] == 5


def test_falsified_exit_1(fixtures, monkeypatch):
    bad = TheoremCheck("hl", {}, "Falsified", witness=0.5j)
    monkeypatch.setattr(cli, "run_check", lambda tid, G, params, cfg: bad)
    assert run("verify", "hl", fixtures / "c3.g")[0] == 1


def test_byte_identical_runs(fixtures):
    argv = [sys.executable, "-m", "factorpoly", "--seed", "5", "verify", "all", "--random", "5", "7", "4"]
    a = subprocess.run(argv, capture_output=True, check=True).stdout
    b = subprocess.run(argv, capture_output=True, check=True).stdout
    assert a == b and len(a.splitlines()) == 48
    c = subprocess.run(argv[:4] + ["6"] + argv[5:], capture_output=True, check=True).stdout
    assert c != a
