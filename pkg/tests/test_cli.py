import json
import subprocess
import sys

import pytest

from pointgb.cli import dispatch
from pointgb.exactnum import PrimeField
from pointgb.groebner import GroebnerBasis, is_groebner
from pointgb.polyring import Polynomial, evaluate


def run(capsys, *argv):
    code = dispatch(list(argv))
    out = capsys.readouterr().out
    return code, json.loads(out), out


@pytest.fixture
def points_file(tmp_path):
    path = tmp_path / "points.json"
    path.write_text(json.dumps({"n": 2, "field": "f5", "points": [[1, 4], [0, 2], [3, 3]]}))
    return path


def test_gb_points_happy_path(capsys, points_file):
    code, doc, _ = run(capsys, "gb", "points", str(points_file), "--field", "f5")
    assert code == 0 and doc["reduced"]
    B = GroebnerBasis.from_json(doc)
    F = PrimeField(5)
    assert is_groebner(B, B.order)
    for pt in [(1, 4), (0, 2), (3, 3)]:
        assert all(not evaluate(g, tuple(F(a) for a in pt)) for g in B)


def test_output_is_deterministic(capsys, points_file):
    outs = {run(capsys, "gb", "points", str(points_file))[2] for _ in range(3)}
    assert len(outs) == 1
    # point order in the input file does not matter
    data = json.loads(points_file.read_text())
    data["points"].reverse()
    points_file.write_text(json.dumps(data))
    assert run(capsys, "gb", "points", str(points_file))[2] in outs


def test_basis_json_round_trips(capsys):
    code, doc, _ = run(capsys, "gb", "roots-of-unity", "-n", "3", "-p", "3", "-j", "1")
    assert code == 0 and doc["closed_form"]["is_groebner"]
    B = GroebnerBasis.from_json(doc)
    assert B.to_json() == {k: doc[k] for k in B.to_json()}
    for entry, text in zip(doc["basis"], doc["text"]):
        assert Polynomial.parse(text, B.n, B.field) == Polynomial.from_json(entry, B.n, B.field)


def test_gb_from_gens(capsys, tmp_path):
    path = tmp_path / "gens.txt"
    path.write_text("x1^2 - 1\nx1*x2 - 1\n")
    code, doc, _ = run(capsys, "gb", "from-gens", str(path))
    assert code == 0 and sorted(doc["text"]) == ["x1 - x2", "x2^2 - 1"]


def test_certify(capsys, tmp_path):
    (tmp_path / "F.json").write_text(json.dumps({"n": 2, "field": "cyc2", "points": [["1", "-1"], ["-1", "1"]]}))
    (tmp_path / "h.json").write_text(json.dumps(["1", "1"]))
    (tmp_path / "P.txt").write_text("x1 + x2\n")
    args = ["certify", "--points", str(tmp_path / "F.json"), "--h", str(tmp_path / "h.json")]
    code, doc, _ = run(capsys, *args, "--poly", str(tmp_path / "P.txt"))
    assert code == 0 and doc["bound"] == 1 and doc["alphaYNonzero"] and doc["degP"] == 1
    (tmp_path / "P.txt").write_text("1\n")
    code, doc, _ = run(capsys, *args, "--poly", str(tmp_path / "P.txt"))
    assert code == 1 and doc["stage"] == "vanishing"


def test_search_and_checks(capsys):
    code, doc, _ = run(capsys, "search", "k", "-n", "2", "-p", "2", "--certify")
    assert code == 0 and doc["optimum"] == 2 and doc["exhaustive"]
    assert doc["certificate"]["certified"]
    code, doc, _ = run(capsys, "check", "counting", "-p", "5")
    assert (doc["lhs"], doc["rhs"]) == (5040, 15504)
    code, doc, _ = run(capsys, "check", "ortho", "-n", "3", "-p", "3")
    assert code == 0 and doc["counts"]["violated"] == 0


def test_galvin_commands(capsys, tmp_path):
    code, doc, _ = run(capsys, "galvin", "construct", "-n", "2")
    assert code == 0 and doc["size"] == 4
    fam = tmp_path / "fam.json"
    fam.write_text(json.dumps({"N": doc["N"], "sets": doc["sets"]}))
    code, doc, _ = run(capsys, "galvin", "verify", str(fam))
    assert code == 0 and doc["valid"]
    code, doc, _ = run(capsys, "galvin", "certify", str(fam), "-p", "2")
    assert code == 0 and doc["certified"]


def test_exit_codes(capsys, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"N": 20, "sets": [list(range(1, 11))]}))
    code, doc, _ = run(capsys, "galvin", "certify", str(bad), "-p", "5")
    assert code == 1 and doc["stage"] == "validity"
    code, doc, _ = run(capsys, "search", "k", "-n", "9", "-p", "3")
    assert code == 2 and doc["error"] == "guard"
    code, doc, _ = run(capsys, "frobnicate")
    assert code == 2 and doc["error"] == "usage"
    broken = tmp_path / "broken.json"
    broken.write_text("{not json")
    code, doc, _ = run(capsys, "gb", "points", str(broken))
    assert code == 2 and doc["error"] == "input"


def test_console_entry_point(tmp_path):
    out = subprocess.run(
        [sys.executable, "-m", "pointgb.cli", "check", "counting", "-p", "3"],
        capture_output=True,
        text=True,
    )
    assert out.returncode == 0
    assert json.loads(out.stdout)["holds"] is False
