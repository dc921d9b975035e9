"""Command-line interface: JSON schema, exit codes, argument validation."""

import json

import pytest

from drglab.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    payload = json.loads(captured.out) if captured.out.strip() else None
    return code, payload, captured.err


def test_build_inline(capsys):
    code, out, _ = run_cli(capsys, "build", "petersen")
    assert code == 0
    assert out["schema"] == "drg-lab-v1"
    assert out["n"] == 10 and out["edges"] == 15
    assert "graph" in out


def test_build_to_file_then_analyze(capsys, tmp_path):
    path = str(tmp_path / "g.json")
    code, out, _ = run_cli(capsys, "build", "johnson:7,3", "--out", path)
    assert code == 0 and out["path"] == path
    code, out, _ = run_cli(capsys, "analyze", path)
    assert code == 0
    assert out["distance_regular"] and out["ia"] == "12,6,2;1,4,9"
    assert out["v"] == 35 and out["diameter"] == 3
    assert out["eigenvalues"] == ["12", "5", "0", "-3"]


def test_analyze_non_drg_exits_one(capsys, tmp_path):
    from drglab.graph import Graph
    path = str(tmp_path / "p4.json")
    Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)]).dump(path)
    code, out, _ = run_cli(capsys, "analyze", path)
    assert code == 1
    assert not out["distance_regular"] and "witness" in out


def test_homog_exit_codes(capsys, tmp_path):
    path = str(tmp_path / "g.json")
    run_cli(capsys, "build", "petersen", "--out", path)
    code, out, _ = run_cli(capsys, "homog", path, "--i", "1")
    assert code == 0 and out["holds"]
    code, _, err = run_cli(capsys, "homog", path, "--i", "1", "--sample", "5")
    assert code == 2 and "seed" in err


def test_cab_command(capsys, tmp_path):
    path = str(tmp_path / "g.json")
    run_cli(capsys, "build", "icosahedron", "--out", path)
    code, out, _ = run_cli(capsys, "cab", path)
    assert code == 0 and out["holds"]
    assert len(out["levels"]) >= 2


def test_classify_by_array(capsys):
    code, out, _ = run_cli(capsys, "classify", "--ia",
                           "25,16,9,4,1;1,4,9,16,25")
    assert code == 0
    assert "Johnson J(10,5)" in out["named_families"]
    assert out["fundamental_bound"]["tight"]
    assert out["fundamental_bound"]["lhs"] == "-3200/81"
    branches = {c["theorem"]: c["branch"] for c in out["classifications"]}
    assert branches["main"] == "ii"
    assert branches["tight"] == "i"


def test_classify_requires_exactly_one_input(capsys):
    code, _, err = run_cli(capsys, "classify")
    assert code == 2 and err


def test_srg_params(capsys):
    code, out, _ = run_cli(capsys, "srg", "--params", "45,16,8,4")
    assert code == 0
    assert out["sims"]["branch"] == "Steiner"
    assert "SteinerGraph(m=2,n=8)" in out["tags"]
    code, out, _ = run_cli(capsys, "srg", "--params", "5,2,0,1")
    assert code == 0
    assert "Conference(5)" in out["tags"]
    assert "sqrt(5)" in out["r"]


def test_srg_rejects_bad_params(capsys):
    code, _, err = run_cli(capsys, "srg", "--params", "10,3,1,1")
    assert code == 2 and err


def test_bounds_command(capsys):
    code, out, _ = run_cli(capsys, "bounds", "--b", "1", "--m", "2",
                           "--mu", "2")
    assert code == 0
    assert out["F"] == 861 and out["G"] == 169
    assert out["mu_bound"] == 8 and out["claw_f"] == 4 and out["phi"] == 66


def test_stdout_is_sorted_json(capsys):
    code = main(["bounds", "--b", "1"])
    captured = capsys.readouterr()
    keys = list(json.loads(captured.out))
    assert keys == sorted(keys)
