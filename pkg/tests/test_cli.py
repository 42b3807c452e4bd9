import csv
import io
import json
import math

from wrtlens.cli import run
from wrtlens.cyclo import CyclotomicNumber


def call(*argv):
    out = io.StringIO()
    code = run(list(argv), out)
    return code, out.getvalue()


def test_cf():
    assert call("cf", "5/2") == (0, "(2, 3)\n")
    assert call("cf", "1/2") == (0, "(-2, 0)\n")
    assert call("cf", "3/3")[0] == 1
    assert call("cf", "five")[0] == 64


def test_invariant_both_paths_sphere():
    code, text = call("invariant", "-p", "1", "-q", "0", "-r", "5", "--method", "both")
    assert code == 0
    values = json.loads(text)
    expected = 2 / math.sqrt(5) * math.sin(2 * math.pi / 5)
    assert len(values) == 2
    for v in values:
        assert abs(v["numeric"]["re"] - expected) < 1e-9


def test_invariant_normalizes_and_exact(capsys):
    code, text = call("invariant", "-p", "5", "-q", "2", "-r", "13", "--exact", "--method", "both")
    assert code == 0
    a, b = json.loads(text)
    assert a["q"] == -3
    assert CyclotomicNumber.from_json(a["exact"]) == CyclotomicNumber.from_json(b["exact"])
    assert "normalized" in capsys.readouterr().err


def test_domain_errors_exit_1():
    assert call("invariant", "-p", "4", "-q", "2", "-r", "5")[0] == 1
    assert call("invariant", "-p", "3", "-q", "1", "-r", "7")[0] == 1
    assert call("verify", "--pmax", "1", "--r", "5")[0] == 1


def test_bad_flags_exit_64():
    assert call("invariant", "-p", "3")[0] == 64
    assert call("frobnicate")[0] == 64
    assert call("verify", "--pmax", "x", "--r", "5")[0] == 64


def test_verify():
    code, text = call("verify", "--pmax", "10", "--r", "5")
    assert code == 0
    assert text.strip().splitlines()[-1].startswith("PASS: 31 lens spaces")
    code, text = call("verify", "--pmax", "4", "--r", "5,13", "--output", "json")
    data = json.loads(text)
    assert data["passed"] and data["lens_spaces"] == 5 and data["relations"]["13"]["S4_identity"]


def test_verify_failure_exit_2(monkeypatch):
    monkeypatch.setenv("WRT_TOLERANCE", "1e-30")
    assert call("verify", "--pmax", "5", "--r", "5")[0] == 2


def test_table_csv():
    code, text = call("table", "--pmax", "5", "--r", "13")
    assert code == 0
    rows = list(csv.reader(io.StringIO(text)))
    assert rows[0] == ["r", "p", "q", "re", "im", "phi", "deviation"]
    assert [(int(r[1]), int(r[2])) for r in rows[1:4]] == [(2, -1), (3, -1), (3, -2)]


def test_rep_matrix():
    code, text = call("rep", "-p", "5", "-q", "-2", "-r", "5", "--method", "closed")
    assert code == 0
    data = json.loads(text)
    assert len(data["matrix"]) == 2 and set(data["matrix"][0][0]) == {"re", "im"}
    code, text = call("rep", "-p", "2", "-q", "-1", "-r", "5", "--exact")
    assert "conductor" in json.loads(text)["matrix"][0][0]
