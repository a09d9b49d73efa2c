import json
import subprocess
import sys

import pytest

from ginirep import cli
from ginirep import kostka as kostka_mod
from ginirep.qpoly import QPolynomial


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_gini_json(capsys):
    code, out, _ = run(capsys, "gini", "--lambda", "6,4,3,1,1", "--n", "5", "--k", "3", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["gini"] == 13 and doc["b_lambda"] == 17 and doc["b_flat"] == 30


@pytest.mark.parametrize("lam,expected", [("1,1,1,1,1", 0), ("3,1,1,0,0", 7), ("3,1,1", 7)])
def test_gini_text(capsys, lam, expected):
    code, out, _ = run(capsys, "gini", "--lambda", lam, "--n", "5", "--k", "1")
    assert code == 0
    assert out.splitlines()[0] == f"gini: {expected}"


def test_gini_csv_header(capsys):
    code, out, _ = run(capsys, "gini", "--lambda", "2,0", "--format", "csv", "--header")
    assert out == "gini,b_lambda,b_flat\n1,0,1\n"


@pytest.mark.parametrize("argv", [
    ("gini", "--lambda", "1,2", "--n", "2", "--k", "1"),
    ("gini", "--lambda", "3,1", "--n", "2", "--k", "1"),
    ("gini", "--lambda", "3,a"),
    ("gini", "--lambda", "3,1,1", "--n", "2"),
])
def test_gini_input_errors(capsys, argv):
    with pytest.raises(SystemExit) as exc:
        sys.exit(cli.main(list(argv)))
    assert exc.value.code == 2
    assert capsys.readouterr().err


def test_lorenz(capsys):
    code, out, _ = run(capsys, "lorenz", "--lambda", "3,1,1,0,0", "--format", "csv")
    assert out == "0,0\n1,0\n2,0\n3,1\n4,2\n5,5\n"
    _, out, _ = run(capsys, "lorenz", "--lambda", "6,4,3,1,1", "--format", "csv")
    assert out.splitlines()[-1] == "5,15"
    _, out, _ = run(capsys, "lorenz", "--lambda", "1,1,1", "--format", "json")
    assert json.loads(out) == [[0, 0], [1, 1], [2, 2], [3, 3]]
    _, out, _ = run(capsys, "lorenz", "--lambda", "1,1,1")
    assert out == "0 0\n1 1\n2 2\n3 3\n"


def test_kf_both(capsys):
    code, out, _ = run(capsys, "kf", "--lambda", "2,1,0", "--mu", "1,1,1", "--algorithm", "both")
    assert code == 0
    assert out.splitlines() == ["q + q^2", "degree: 2", "agreement: true"]
    _, out, _ = run(capsys, "kf", "--lambda", "1,1", "--mu", "1,1")
    assert out.splitlines()[0] == "1"
    code, out, _ = run(capsys, "kf", "--lambda", "1,1,1", "--mu", "2,1,0", "--format", "json")
    doc = json.loads(out)
    assert code == 0 and doc["coefficients"] == [] and doc["degree"] is None and doc["polynomial"] == "0"


def test_kf_mismatch_exit_code(capsys, monkeypatch):
    monkeypatch.setattr(cli, "kostka_foulkes_charge", lambda lam, mu: QPolynomial([1]))
    code, out, err = run(capsys, "kf", "--lambda", "2,1,0", "--mu", "1,1,1", "--algorithm", "both")
    assert code == 3 and "agreement: false" in out and err


def test_graded_mult(capsys):
    code, out, _ = run(capsys, "graded-mult", "--alpha", "1,0,-1", "--format", "json")
    doc = json.loads(out)
    assert code == 0
    assert doc["coefficients"] == [0, 1, 1] and doc["degree"] == 2 and doc["gini"] == 2
    assert doc["theorem1_holds"] is True
    _, out, _ = run(capsys, "graded-mult", "--alpha", "0,0,0", "--format", "json")
    doc = json.loads(out)
    assert doc["coefficients"] == [1] and doc["degree"] == 0
    _, out, _ = run(capsys, "graded-mult", "--alpha", "3,1,0,-2,-2", "--k", "3", "--format", "json")
    doc = json.loads(out)
    assert doc["lambda"] == [6, 4, 3, 1, 1] and doc["degree"] == 13 and doc["gini"] == 13
    code, _, err = run(capsys, "graded-mult", "--alpha", "1,0,0")
    assert code == 2 and err


def test_graded_mult_route_mismatch(capsys, monkeypatch):
    monkeypatch.setattr(kostka_mod, "graded_multiplicity", lambda alpha: QPolynomial([5]))
    code, _, err = run(capsys, "graded-mult", "--alpha", "1,0,-1")
    assert code == 3 and err


def test_emd(capsys):
    code, out, _ = run(capsys, "emd", "--mu", "3,1,4,2", "--lambda", "2,3,4,1", "--oracle", "--format", "json")
    doc = json.loads(out)
    assert code == 0 and doc["distance"] == 3 and doc["oracle_distance"] == 3 and doc["agreement"]
    _, out, _ = run(capsys, "emd", "--mu", "1,1", "--lambda", "1,1")
    assert out == "0\n"
    _, out, _ = run(capsys, "emd", "--mu", "2,0", "--lambda", "0,2")
    assert out == "2\n"
    code, _, _ = run(capsys, "emd", "--mu", "2,0", "--lambda", "0,1")
    assert code == 2


def test_emd_oracle_limit(capsys):
    code, _, err = run(capsys, "emd", "--mu", "400,0,0,0,0", "--lambda", "0,0,0,0,400", "--oracle")
    assert code == 2 and "exceeds" in err


def test_emd_oracle_mismatch(capsys, monkeypatch):
    monkeypatch.setattr(cli, "emd_bfs_oracle", lambda mu, lam: 99)
    code, _, err = run(capsys, "emd", "--mu", "2,0", "--lambda", "0,2", "--oracle")
    assert code == 3 and err


def test_verify_json(capsys):
    code, out, _ = run(capsys, "verify", "--n", "5", "--k", "3", "--format", "json")
    doc = json.loads(out)
    assert code == 0
    assert len(doc["records"]) == 84
    assert all(r["theorem1_holds"] for r in doc["records"])
    ex = next(r for r in doc["records"] if r["lambda"] == [6, 4, 3, 1, 1])
    assert ex["degree"] == 13 and ex["gini"] == 13
    assert doc["summary"] == {"records": 84, "nonzero": 84, "holds": 84, "violations": 0}


def test_verify_text(capsys):
    code, out, _ = run(capsys, "verify", "--n", "2", "--k", "1")
    lines = out.splitlines()
    assert code == 0 and len(lines) == 3
    assert lines[-1] == "summary: 2 records, 2 hold, 0 violations"
    _, out, _ = run(capsys, "verify", "--n", "3", "--k", "1")
    assert "lambda=2,1,0 m(q)=q + q^2 degree=2 gini=2 holds=true" in out


def test_verify_csv(capsys):
    _, out, _ = run(capsys, "verify", "--n", "3", "--k", "1", "--format", "csv", "--header")
    assert out.splitlines()[0] == "lambda,alpha,coefficients,degree,gini,holds"
    assert "2 1 0,1 0 -1,0 1 1,2,2,true" in out.splitlines()


def test_verify_limits(capsys):
    code, _, err = run(capsys, "verify", "--n", "7", "--k", "1")
    assert code == 2 and "limit" in err
    code, _, _ = run(capsys, "verify", "--n", "1", "--k", "1")
    assert code == 2


def test_verify_violation_exit_code(capsys, monkeypatch):
    real = kostka_mod.verify_theorem1

    def broken(n, k, workers=None):
        reports = real(n, k)
        r = reports[0]
        reports[0] = type(r)(r.alpha, r.k, r.lam, r.polynomial, r.degree, r.gini + 1, False)
        return reports

    monkeypatch.setattr(cli, "verify_theorem1", broken)
    code, out, _ = run(capsys, "verify", "--n", "3", "--k", "1")
    assert code == 1 and "1 violations" in out


def test_verify_parallel_is_deterministic(capsys):
    _, serial, _ = run(capsys, "verify", "--n", "4", "--k", "2", "--format", "json")
    _, parallel, _ = run(capsys, "verify", "--n", "4", "--k", "2", "--format", "json", "--parallel", "2")
    assert serial == parallel


def test_module_entry_point_is_byte_identical():
    cmd = [sys.executable, "-m", "ginirep", "verify", "--n", "3", "--k", "2", "--format", "json"]
    first = subprocess.run(cmd, capture_output=True, check=True).stdout
    second = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert first == second
    json.loads(first)
