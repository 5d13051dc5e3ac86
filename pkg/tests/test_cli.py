import csv
import io
import json

import pytest

from pzero.cli import EXIT_FAIL, EXIT_OK, EXIT_USAGE, main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_group_build_and_analyze_roundtrip(tmp_path, capsys):
    path = tmp_path / "psl8.json"
    code, _, _ = run(capsys, "group", "build", "--family", "psl2", "--n", "8", "--out", str(path))
    assert code == EXIT_OK
    data = json.loads(path.read_text())
    assert data["metadata"]["expected_order"] == 504
    assert len(data["metadata"]["sylow2"]) == 3
    code, out, _ = run(capsys, "group", "analyze", str(path), "--samples", "200")
    assert code == EXIT_OK
    rep = json.loads(out)
    assert rep["case"] == "linear_family"
    assert rep["family_guess"] == {"name": "PSL2", "n": 8}


def test_group_build_su3_as_permutations(tmp_path, capsys):
    path = tmp_path / "su3.json"
    code, _, _ = run(capsys, "group", "build", "--family", "su3", "--n", "4", "--out", str(path))
    assert code == EXIT_OK
    meta = json.loads(path.read_text())["metadata"]
    assert meta["order"] == 4**3 * 65 * 15 and meta["center_order"] == 1


def test_condition_violation_exit_code(tmp_path, capsys):
    # S4 on four points: a transposition fixes two points
    g = {"degree": 4, "generators": [[1, 0, 2, 3], [1, 2, 3, 0]]}
    path = tmp_path / "s4.json"
    path.write_text(json.dumps(g))
    code, out, err = run(capsys, "group", "analyze", str(path))
    assert code == EXIT_FAIL
    assert json.loads(out)["error"] == "condition_violation"
    assert "condition violated" in err


def test_spectrum_csv(capsys):
    code, out, _ = run(capsys, "spectrum", "--family", "sz", "--n", "8", "--format", "csv")
    assert code == EXIT_OK
    rows = list(csv.DictReader(io.StringIO(out)))
    assert sorted(int(r["genus"]) for r in rows) == [14, 196, 196]
    assert list(rows[0]) == ["family", "n", "case", "t", "genus", "s_order", "sq_order", "witness", "flags"]


def test_spectrum_json_psu3(capsys):
    code, out, _ = run(capsys, "spectrum", "--family", "psu3", "--n", "4")
    assert code == EXIT_OK
    data = json.loads(out)
    assert len(data["entries"]) == 4 and data["crosscheck"]
    assert [e["t"] for e in data["entries"] if e["witness"] == "Hermitian(II)"] == [1]


def test_curve_info(capsys):
    code, out, _ = run(capsys, "curve", "info", "--family", "III", "--n", "8")
    assert code == EXIT_OK
    data = json.loads(out)
    assert data["genus"] == 14 and data["automorphisms"]["order"] == 29120 and data["two_rank"] == 0


def test_curve_points_and_verify(capsys):
    code, out, _ = run(capsys, "curve", "points", "--family", "II", "--n", "4")
    assert code == EXIT_OK and json.loads(out)["total"] == 65
    code, out, _ = run(capsys, "curve", "verify-aut", "--family", "II", "--n", "4")
    assert code == EXIT_OK and json.loads(out)["generated_order"] == 62400


def test_bounds(capsys):
    code, out, _ = run(capsys, "bounds", "--g", "6", "--order", "62400")
    assert code == EXIT_OK
    assert json.loads(out)["checks"]["trigger_gt_24g2"] is True
    code, out, _ = run(capsys, "bounds", "--g", "14", "--order", "29120", "--solvable", "false")
    assert json.loads(out)["route"] == "classification"


def test_verify_quick_spectrum_suite(capsys):
    code, out, err = run(capsys, "verify", "--suite", "spectrum", "--quick")
    assert code == EXIT_OK
    assert json.loads(out)["passed"]
    assert "[PASS]" in err


@pytest.mark.parametrize("argv", [
    ["group", "build", "--family", "psl2", "--n", "6"],
    ["curve", "points", "--family", "II", "--n", "4", "--field-exp", "30"],
    ["--max-degree", "10", "group", "build", "--family", "su3", "--n", "4"],
    ["spectrum", "--family", "gl", "--n", "4"],
    ["bounds", "--g", "6"],
    ["curve", "info", "--family", "IV", "--n", "5"],
])
def test_usage_and_budget_errors(argv, capsys):
    code, _, _ = run(capsys, *argv)
    assert code == EXIT_USAGE


def test_group_analyze_missing_file(capsys, tmp_path):
    code, _, _ = run(capsys, "group", "analyze", str(tmp_path / "nope.json"))
    assert code == EXIT_USAGE
