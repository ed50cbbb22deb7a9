import json
import subprocess
import sys

import pytest

from cagezoo import cli, io
from cagezoo.cli import main
from cagezoo.geometry import ProjPoint, grid_cage, random_cage
from cagezoo.theorems import weierstrass
from cagezoo.theorems.cage import NinthNodeRecord, NinthNodeReport


def run(argv, capsys):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.fixture
def grid_file(tmp_path):
    path = tmp_path / "grid.json"
    path.write_text(io.dumps(io.cage_to_json(grid_cage((0, 1, 2), (0, 1, 2)))))
    return str(path)


def write_cage(tmp_path, cage, name="cage.json"):
    path = tmp_path / name
    path.write_text(io.dumps(io.cage_to_json(cage)))
    return str(path)


def test_cage_random(capsys, tmp_path):
    out_file, svg = tmp_path / "c.json", tmp_path / "c.svg"
    code, out, _ = run(["cage", "random", "--d", "3", "--e", "2", "--seed", "4", "--bound", "9",
                        "--out", str(out_file), "--svg", str(svg)], capsys)
    assert code == 0
    assert io.cage_from_json(json.loads(out)) == random_cage(3, 2, 4, 9)
    assert out_file.read_text() == out
    assert svg.read_text().startswith("<?xml")


def test_cage_grid(capsys):
    code, out, _ = run(["cage", "grid", "--ns", "0,1,2", "--ms", "0", "1", "2"], capsys)
    assert code == 0
    assert io.cage_from_json(json.loads(out)) == grid_cage((0, 1, 2), (0, 1, 2))


def test_cage_grid_repeated_intercept(capsys):
    code, _, err = run(["cage", "grid", "--ns", "0,0,1", "--ms", "0,1,2"], capsys)
    assert code == 2 and "error" in err


def test_verify_ninth_node(capsys, grid_file):
    code, out, _ = run(["verify", "ninth-node", "--in", grid_file], capsys)
    data = json.loads(out)
    assert code == 0 and data["passed"] is True
    assert data["command"] == "verify ninth-node"


@pytest.mark.parametrize("theorem, shape", [
    ("cage-theorem", (4, 3)), ("bacharach", (4, 3)), ("diagonal", (3, 3)), ("remark", (4, 4)),
])
def test_verify_passes(capsys, tmp_path, theorem, shape):
    path = write_cage(tmp_path, random_cage(*shape, seed=1))
    code, out, _ = run(["verify", theorem, "--in", path, "--trials", "2", "--seed", "3"], capsys)
    assert code == 0 and json.loads(out)["passed"] is True


def test_wrong_cage_shape_is_a_usage_error(capsys, tmp_path):
    path = write_cage(tmp_path, random_cage(4, 3, seed=0))
    code, _, _ = run(["verify", "ninth-node", "--in", path], capsys)
    assert code == 2


def test_failed_verdict_exits_one(capsys, grid_file, monkeypatch):
    # the theorems hold, so a failing verifier is simulated
    bad = NinthNodeReport((NinthNodeRecord((1, 1), 3, False, 8, 9),))
    monkeypatch.setattr(cli, "verify_ninth_node", lambda cage: bad)
    code, out, err = run(["verify", "ninth-node", "--in", grid_file], capsys)
    assert code == 1 and "FAILED" in err
    record = json.loads(out)["reports"][0]["records"][0]
    assert record["node"] == [1, 1] and record["passed"] is False


def test_verify_writes_report(capsys, grid_file, tmp_path):
    out_file = tmp_path / "report.json"
    code, out, _ = run(["verify", "diagonal", "--in", grid_file, "--out", str(out_file)], capsys)
    assert code == 0 and out_file.read_text() == out
    witness = io.poly_from_json(json.loads(out)["reports"][0]["witness"])
    assert str(witness) == "x^2 + x*y - 3*x*z + y^2 - 3*y*z + 2*z^2"


def test_hilbert_single_point(capsys, tmp_path):
    pts = tmp_path / "pts.json"
    pts.write_text(io.dumps([ProjPoint(1, 2, 3)]))
    code, out, _ = run(["hilbert", "--points", str(pts), "--k", "5"], capsys)
    assert code == 0 and out.strip() == "1"


def test_malformed_json(capsys, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{nope")
    assert run(["hilbert", "--points", str(bad), "--k", "1"], capsys)[0] == 2
    assert run(["verify", "ninth-node", "--in", str(bad)], capsys)[0] == 2


def test_missing_file_and_bad_flags(capsys, tmp_path):
    assert run(["verify", "ninth-node", "--in", str(tmp_path / "none.json")], capsys)[0] == 2
    assert run(["cage", "random", "--d", "x", "--e", "1"], capsys)[0] == 2
    assert run([], capsys)[0] == 2


def test_gram(capsys, tmp_path):
    svg = tmp_path / "hex.svg"
    code, out, _ = run(["gram", "--d", "3", "--conic", "unit-circle", "--params=0,1,-1,2,-2,3",
                        "--svg", str(svg)], capsys)
    data = json.loads(out)
    assert code == 0 and data["passed"] is True
    assert data["reports"][0]["qstar"]["degree"] == 1
    assert svg.read_text().count("<line") == 7


def test_gram_bad_params(capsys):
    assert run(["gram", "--d", "3", "--params=0,1,2"], capsys)[0] == 2
    assert run(["gram", "--d", "3", "--conic", "parabola", "--params=0,1,-1,2,-2,3"], capsys)[0] == 2


def test_gram_accepts_infinite_slope(capsys):
    code, _, _ = run(["gram", "--d", "3", "--params=inf,1,-1,2,-2,3"], capsys)
    assert code == 0


@pytest.fixture
def cubic_file(tmp_path):
    path = tmp_path / "cubic.json"
    path.write_text(io.dumps(weierstrass(0, 17)))
    return str(path)


def test_ec_add(capsys, cubic_file):
    code, out, _ = run(["ec", "add", "--cubic", cubic_file, "--e", "0,1,0", "--p", "-2,3", "--q", "2,5"], capsys)
    data = json.loads(out)
    assert code == 0
    assert io.point_from_json(data["reports"][0]["sum"]) == ProjPoint.affine("1/4", "-33/8")


def test_ec_assoc(capsys, cubic_file):
    code, out, _ = run(["ec", "assoc", "--cubic", cubic_file, "--e", "[\"0/1\",\"1/1\",\"0/1\"]",
                        "--p=-2,3", "--q", "2,5", "--r", "-2,-3"], capsys)
    assert code == 0 and json.loads(out)["reports"][0]["associative"] is True


def test_ec_errors(capsys, cubic_file):
    args = ["ec", "assoc", "--cubic", cubic_file, "--e", "0,1,0", "--p", "-2,3", "--q", "2,5"]
    assert run(args, capsys)[0] == 2
    assert run(["ec", "add", "--cubic", cubic_file, "--e", "0,1,0", "--p", "1,1", "--q", "2,5"], capsys)[0] == 2
    assert run(["ec", "add", "--cubic", cubic_file, "--e", "0,1,0", "--p", "1", "--q", "2,5"], capsys)[0] == 2


def test_module_entry_point(grid_file):
    proc = subprocess.run([sys.executable, "-m", "cagezoo", "verify", "ninth-node", "--in", grid_file],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and json.loads(proc.stdout)["passed"]
