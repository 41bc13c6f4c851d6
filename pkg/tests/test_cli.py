import json
import subprocess
import sys

import pytest

from albertson.cli import RunConfig, run
from albertson.graph import lexicographic_product, make_complete, make_cycle, make_kr2_minus_c5, write_graph6_file


def call(capsys, *argv):
    code = run(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_verify_albertson(capsys):
    code, out, err = call(capsys, "verify-albertson", "--r", "12")
    assert code == 0
    assert json.loads(out)["certified_min"] == 153
    assert "PASS" in err


def test_lemma1(capsys):
    code, out, _ = call(capsys, "lemma1", "--r", "4")
    rep = json.loads(out)
    assert code == 0 and rep["verdict"] == "PASS"
    assert sorted(rep["found"]) == ["4", "6"]


def test_bounds(capsys):
    code, out, _ = call(capsys, "bounds", "--n", "17", "--m", "71")
    rep = json.loads(out)
    assert code == 0 and rep["cr_lower"] == 41 and rep["terms"]["PRTT_7_3"] == "122/3"


def test_edge_bound(capsys):
    code, out, _ = call(capsys, "edge-bound", "--r", "12", "--n", "15")
    rep = json.loads(out)
    assert code == 0 and rep["best"]["value"] == "95/1" and rep["best"]["rule"] == "GALLAI"


def test_verify_large_n(capsys):
    code, out, _ = call(capsys, "verify-large-n", "--r", "20")
    assert code == 0 and json.loads(out)["verdict"] == "PASS"


def test_chromatic_and_critical(tmp_path, capsys):
    path = tmp_path / "g.g6"
    write_graph6_file(path, [make_kr2_minus_c5(5), lexicographic_product(make_cycle(5), make_complete(3))])
    code, out, _ = call(capsys, "chromatic", str(path))
    assert code == 0 and [g["chi"] for g in json.loads(out)["graphs"]] == [5, 8]
    code, out, _ = call(capsys, "critical", str(path), "--r", "5")
    assert code == 1 and [g["critical"] for g in json.loads(out)["graphs"]] == [True, False]


def test_audit(tmp_path, capsys):
    path = tmp_path / "g.g6"
    write_graph6_file(path, [make_complete(9), make_kr2_minus_c5(7)])
    code, out, _ = call(capsys, "audit", str(path))
    assert code == 0
    assert [g["status"] for g in json.loads(out)["graphs"]] == ["certified", "certified"]


def test_census_and_draw(tmp_path, capsys):
    code, out, _ = call(capsys, "census", "--n", "7", "--r", "5", "--out-dir", str(tmp_path))
    assert code == 0 and json.loads(out)["count"] == 1
    assert (tmp_path / "critical_n7_r5.g6").exists()
    svg = tmp_path / "k8.svg"
    code, out, _ = call(capsys, "draw-kn", "--n", "8", "--svg", str(svg))
    rep = json.loads(out)
    assert code == 0 and rep["geometric_count"] == rep["guy_f"] == 18
    assert svg.read_text().startswith("<svg")


def test_excess_audit(capsys):
    code, out, _ = call(capsys, "excess-audit", "--r", "4")
    assert code == 0 and json.loads(out)["verdict"] == "PASS"


def test_out_file(tmp_path, capsys):
    target = tmp_path / "r.json"
    code, out, _ = call(capsys, "verify-albertson", "--r", "9", "--out", str(target))
    assert code == 0 and out == ""
    assert json.loads(target.read_text())["certified_min"] == 41


@pytest.mark.parametrize("argv", [
    [],
    ["frobnicate"],
    ["bounds", "--n", "17"],
    ["bounds", "--n", "17", "--m", "71", "--bogus"],
    ["bounds", "--n", "5", "--m", "11"],
    ["verify-albertson", "--r", "13"],
    ["verify-large-n", "--r", "5"],
    ["census", "--n", "9", "--r", "5"],
    ["draw-kn", "--n", "40"],
    ["chromatic", "/nonexistent/file.g6"],
    ["verify-albertson", "--r", "9", "--window", "3"],
    ["bounds", "--n", "10", "--m", "20", "--node-budget", "0"],
])
def test_usage_errors(argv, capsys):
    assert run(argv) == 2


def test_bad_graph6_input(tmp_path, capsys):
    path = tmp_path / "bad.g6"
    path.write_text("D~\n")
    assert run(["chromatic", str(path)]) == 2
    assert "error" in capsys.readouterr().err


def test_budget_exhaustion(tmp_path, capsys):
    path = tmp_path / "g.g6"
    write_graph6_file(path, [lexicographic_product(make_cycle(5), make_complete(3))])
    assert run(["chromatic", str(path), "--node-budget", "5"]) == 3


def test_run_config_validation():
    with pytest.raises(ValueError):
        RunConfig("bounds", node_budget=0)
    with pytest.raises(ValueError):
        RunConfig("census", enumeration_cap=-1)


def test_deterministic_output_subprocess(tmp_path):
    cmd = [sys.executable, "-m", "albertson", "verify-albertson", "--r", "11"]
    first = subprocess.run(cmd, capture_output=True, check=True).stdout
    second = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert first == second and json.loads(first)["certified_min"] == 104
