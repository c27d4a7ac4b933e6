import json
import subprocess
import sys
from pathlib import Path

import pytest

from leavitt.cli import main

DATA = Path(__file__).resolve().parents[1] / "data"


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


def test_lpa_dim(capsys):
    code, out, _ = run(capsys, "lpa-dim", "--graph", DATA / "E.json", "--field", "F3")
    assert code == 0 and out.strip() == "dim = 4"


def test_verify_iso_line_graph(capsys):
    code, out, _ = run(capsys, "verify-iso", "--left", DATA / "E.json", "--right", DATA / "E.json", "--field", "Q")
    assert code == 0
    assert "6 vs 6" in out and "proven-exactly" in out


def test_verify_iso_naive_is_refuted(capsys):
    code, out, _ = run(capsys, "verify-iso", "--left", DATA / "E.json", "--right", DATA / "E.json", "--naive-tensor")
    assert code == 1 and "6 vs 16" in out


def test_paper_suite(capsys):
    code, out, _ = run(capsys, "paper-suite", "--field", "F2")
    assert code == 0 and "10/10 pass" in out


def test_paper_suite_naive(capsys):
    code, out, _ = run(capsys, "paper-suite", "--naive-tensor", "--json")
    report = json.loads(out)
    assert code == 1
    step = next(s for s in report["steps"] if s["name"] == "cross-dim")
    assert not step["passed"] and step["details"]["dim"] == 16


def test_paper_suite_only(capsys):
    code, out, _ = run(capsys, "paper-suite", "--only", "classical-f2", "--json")
    report = json.loads(out)
    assert code == 0 and [s["name"] for s in report["steps"]] == ["classical-f2"]
    code, _, err = run(capsys, "paper-suite", "--only", "nope")
    assert code == 2 and "unknown step" in err


@pytest.mark.parametrize("argv", [
    ["paper-suite", "--json"],
    ["verify-iso", "--left", "@loop", "--right", "@loop", "--bound", "3", "--json"],
    ["lpa-dim", "--graph", DATA / "E.json", "--json"],
    ["cross-dim", "--left", DATA / "rose2.json", "--right", "@loop", "--bound", "2", "--json"],
])
def test_json_is_deterministic(capsys, argv):
    first = run(capsys, *argv)
    second = run(capsys, *argv)
    assert first == second
    json.loads(first[1])


def test_element_verbs(capsys):
    g = DATA / "E.json"
    code, out, _ = run(capsys, "lpa-mul", DATA / "E_edge.json", DATA / "E_ghost.json", "--graph", g)
    assert code == 0 and out.strip() == "u1"
    code, out, _ = run(capsys, "grade", DATA / "E_sample.json", "--graph", g, "--json")
    assert sorted(json.loads(out)) == ["-1", "0", "1"]
    code, out, _ = run(capsys, "coarsen", DATA / "E_sample.json", "--graph", g, "--n", "2")
    assert "1 mod 2: f* + f" in out


def test_gauge_demo(capsys):
    code, out, _ = run(capsys, "gauge-demo", "--field", "F2", "--json")
    report = json.loads(out)
    assert code == 0 and report["schematic_recovers"]
    assert not any(row["classical_exact"] for row in report["degrees"])


def test_ideal_check(capsys):
    code, out, _ = run(capsys, "ideal-check", DATA / "loop_1_plus_x.json", "--graph", DATA / "loop.json",
                       "--field", "F2", "--json")
    report = json.loads(out)
    assert code == 1
    assert report["classically_invariant"] and not report["graded"] and not report["schematically_invariant"]
    code, out, _ = run(capsys, "ideal-check", DATA / "E_edge.json", "--graph", DATA / "E.json", "--field", "Q")
    assert code == 0 and "dimension 4" in out


def test_vandermonde(capsys):
    args = [DATA / "E_sample.json", "--graph", DATA / "E.json"]
    code, _, _ = run(capsys, "vandermonde", *args, "--field", "F3", "--units", "1,2")
    assert code == 1
    code, out, _ = run(capsys, "vandermonde", *args, "--field", "Q", "--units", "1,2,3")
    assert code == 0 and "1: f" in out


def test_comodule(capsys, tmp_path):
    code, out, _ = run(capsys, "comodule", DATA / "grading_comodule.json")
    assert code == 0 and "p_2: rank 1" in out
    bad = {"group": "Z", "field": "Q", "matrix": [[{"0": "2"}]]}
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(bad))
    code, out, _ = run(capsys, "comodule", path, "--json")
    assert code == 1 and not json.loads(out)["representation"]


def test_graph_verbs(capsys):
    code, out, _ = run(capsys, "graph-check", "--graph", DATA / "E.json", "--json")
    assert code == 0 and json.loads(out)["sinks"] == ["u2"]
    code, out, _ = run(capsys, "product-graph", "--left", DATA / "E.json", "--right", DATA / "E.json", "--json")
    assert len(json.loads(out)["vertices"]) == 4
    code, out, _ = run(capsys, "cross-dim", "--left", DATA / "E.json", "--right", DATA / "E.json")
    assert out.strip() == "dim = 6"
    code, out, _ = run(capsys, "cross-dim", "--left", DATA / "E.json", "--right", DATA / "E.json", "--naive-tensor")
    assert "16" in out


def test_input_errors(capsys, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text('{"vertices": ["a"],\n "edges": [}')
    code, _, err = run(capsys, "graph-check", "--graph", bad)
    assert code == 2 and "line 2, column 12" in err
    code, _, err = run(capsys, "graph-check", "--graph", tmp_path / "missing.json")
    assert code == 2
    code, _, _ = run(capsys, "lpa-dim")
    assert code == 2
    code, _, _ = run(capsys, "lpa-dim", "--graph", DATA / "E.json", "--field", "F4")
    assert code == 2
    code, _, _ = run(capsys, "no-such-verb")
    assert code == 2
    dangling = tmp_path / "dangling.json"
    dangling.write_text(json.dumps({"vertices": ["a"], "edges": [{"id": "e", "src": "a", "rng": "b"}]}))
    code, out, _ = run(capsys, "graph-check", "--graph", dangling, "--json")
    assert code == 2 and "error" in json.loads(out)


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "leavitt.cli", "lpa-dim", "--graph", "@line"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.strip() == "dim = 4"
