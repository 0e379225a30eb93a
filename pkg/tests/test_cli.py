import csv
import io
import json
import subprocess
import sys
from fractions import Fraction

import pytest

from polycert.cli import run

EXAMPLES = [
    (["check", "--coeffs", "1,1,1", "--condition", "even"], 0, "CertifiedPositive"),
    (["check", "--coeffs", "1,1,1,1", "--condition", "odd"], 0, "CertifiedOneRealZero"),
    (["check", "--coeffs", "1,2,1", "--condition", "hutchinson"], 0, "CertifiedAllRealZeros"),
    (["check", "--coeffs", "1,1,1,1", "--condition", "hutchinson"], 2, "ConditionFails"),
    (["check", "--coeffs", "1,3,1"], 2, "ConditionFails"),
    (["check", "--coeffs", "3/4,3/2,3/4"], 3, "BoundaryCase"),
    (["check", "--coeffs", "1/4,3/4,3/4,1/4"], 3, "BoundaryCase"),
    (["certify", "--coeffs", "1,1,1"], 0, "CertifiedPositive"),
    (["certify", "--coeffs", "3/4,3/2,3/4"], 3, "BoundaryCase"),
    (["certify", "--coeffs", "1,10,1,10,1"], 2, "ConditionFails"),
]


@pytest.mark.parametrize("argv,code,verdict", EXAMPLES)
def test_exit_codes(argv, code, verdict):
    got, out = run(argv)
    assert got == code
    assert json.loads(out)["verdict"] == verdict


@pytest.mark.parametrize(
    "argv",
    [
        ["check", "--coeffs", "1,1,1", "--condition", "odd"],
        ["check", "--coeffs", "1,x,1"],
        ["check", "--coeffs", "1,-1,1"],
        ["certify", "--coeffs", "1,1,1,1"],
        ["check", "--coeffs", "1/0,1"],
        ["roots", "--coeffs", ""],
    ],
)
def test_input_errors(argv):
    code, out = run(argv)
    assert code == 1
    assert "error" in json.loads(out)


def test_certify_payload():
    _, out = run(["certify", "--coeffs", "1,1,1"])
    j = json.loads(out)
    assert j["minors"] == ["1", "3/4"]
    assert j["oracle"]["distinct"] == 0
    assert j["threshold"]["exact"] == "4"
    assert j["soundness_violation"] is False


def test_certify_boundary_payload():
    j = json.loads(run(["certify", "--coeffs", "3/4,3/2,3/4"])[1])
    assert j["minors"][-1] == "0"
    assert j["oracle"]["distinct"] == 1


def test_certify_fails_without_soundness_flag():
    j = json.loads(run(["certify", "--coeffs", "1,10,1,10,1"])[1])
    assert j["oracle"]["distinct"] >= 1
    assert j["soundness_violation"] is False


def test_irrational_threshold_description():
    j = json.loads(run(["certify", "--coeffs", "1,1,1,1,1,1,1"])[1])
    thr = j["threshold"]
    assert thr["exact"] is None and thr["n"] == 3
    lo, hi = (Fraction(v) for v in thr["generator_interval"])
    assert lo < Fraction(1618034, 10**6) < hi


def test_human_threshold_labeled():
    _, out = run(["certify", "--coeffs", "1,1,1,1,1,1,1", "--format", "human"])
    line = next(l for l in out.splitlines() if "threshold" in l)
    assert "approximation 1.5278640450004206071816526625" in line


def test_roots():
    code, out = run(["roots", "--coeffs=-1,0,1"])
    j = json.loads(out)
    assert code == 0 and j["distinct"] == 2 and len(j["intervals"]) == 2


def test_extremal_examples():
    code, out = run(["extremal", "--n", "1"])
    assert code == 0 and "3/4, 3/2, 3/4" in out and "ratios equal to the boundary" in out
    _, out = run(["extremal", "--n", "1", "--odd"])
    assert "1/4, 3/4, 3/4, 1/4" in out


def test_extremal_n12_precision80():
    code, out = run(["extremal", "--n", "12", "--precision", "80", "--format", "json"])
    j = json.loads(out)
    coeffs = [float(c) for c in j["coefficients"].split(",")]
    assert code == 0 and len(coeffs) == 25 and all(c > 0 for c in coeffs)
    assert j["ratios_verified"] and j["tolerance"] == "1e-70"


def test_extremal_invalid_n():
    assert run(["extremal", "--n", "0"])[0] == 1


def test_extremal_precision_env(monkeypatch):
    monkeypatch.setenv("POLYCERT_PRECISION", "45")
    j = json.loads(run(["extremal", "--n", "3", "--mode", "numeric", "--format", "json"])[1])
    assert j["precision"] == 45 and j["tolerance"] == "1e-35"


def test_sweep_n2():
    code, out = run(["sweep", "--n", "2"])
    rows = list(csv.DictReader(io.StringIO(out)))
    assert code == 0
    assert list(rows[0]) == ["n", "epsilon", "verdict", "distinct", "with_multiplicity"]
    by_eps = {r["epsilon"]: r for r in rows}
    assert by_eps["1/10"]["verdict"] == "CertifiedPositive" and by_eps["1/10"]["distinct"] == "0"
    assert by_eps["0"]["verdict"] == "BoundaryCase" and int(by_eps["0"]["distinct"]) >= 1
    assert by_eps["-1/10"]["verdict"] == "ConditionFails"


def test_sweep_bad_epsilon():
    assert run(["sweep", "--n", "2", "--epsilons", "1"])[0] == 1


def test_sweep_deterministic():
    argv = ["sweep", "--n", "2", "--count", "5", "--seed", "7"]
    first, second = run(argv), run(argv)
    assert first == second
    assert len(first[1].splitlines()) == 1 + 5 + 5
    assert run(["sweep", "--n", "2", "--count", "5", "--seed", "8"])[1] != first[1]


def test_selftest():
    code, out = run(["selftest"])
    assert code == 0 and out.strip().endswith("8/8 batteries passed")
    assert run(["selftest"]) == (code, out)


def test_selftest_fault_injection():
    code, out = run(["selftest", "--inject-fault", "threshold"])
    lines = dict(reversed(l.split(" ", 1)) for l in out.splitlines()[:-1])
    assert code == 1
    assert lines["evaluation_identity"] == "PASS"
    assert lines["boundary_detection"] == "FAIL"


@pytest.fixture
def batch(tmp_path):
    path = tmp_path / "batch.txt"
    path.write_text("1, 1, 1\n# comment\n\n1, oops, 1\n3/4, 3/2, 3/4\n1, 3, 1\n")
    return path


def test_batch_continues_past_errors(batch):
    code, out = run(["check", "--file", str(batch)])
    payloads = json.loads(out)
    assert code == 1
    assert [p.get("verdict") for p in payloads] == ["CertifiedPositive", None, "BoundaryCase", "ConditionFails"]
    assert "error" in payloads[1] and payloads[1]["source"].endswith(":4")


def test_batch_parallel_order(batch):
    assert run(["check", "--file", str(batch), "--jobs", "3"]) == run(["check", "--file", str(batch)])


def test_csv_json_agree(batch):
    _, js = run(["certify", "--file", str(batch)])
    _, cs = run(["certify", "--file", str(batch), "--format", "csv"])
    rows = list(csv.DictReader(io.StringIO(cs)))
    payloads = json.loads(js)
    assert len(rows) == len(payloads)
    for row, p in zip(rows, payloads):
        assert row["source"] == p["source"]
        if "verdict" not in p:
            assert row["error"] == p["error"]
            continue
        assert row["verdict"] == p["verdict"]
        assert row["ratios"].split(";") == [c["ratio"] for c in p["comparisons"]]
        assert row["minors"].split(";") == p["minors"]
        assert int(row["distinct"]) == p["oracle"]["distinct"]


def test_usage_error_exit_code():
    proc = subprocess.run([sys.executable, "-m", "polycert", "check"], capture_output=True)
    assert proc.returncode == 1


def test_console_entry():
    proc = subprocess.run([sys.executable, "-m", "polycert", "check", "--coeffs", "1,3,1"], capture_output=True)
    assert proc.returncode == 2
