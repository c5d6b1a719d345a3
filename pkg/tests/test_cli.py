import json

import pytest

from cyclecert.cli import main
from cyclecert.formats import dump_json, emit_graph_text
from cyclecert.graphs import cycle


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, json.loads(out) if out.strip().startswith("{") else out


def test_certify_sum_found(capsys):
    code, doc = run(capsys, "certify", "sum", "--list", "0,0,4,0", "--h", "5")
    assert code == 0 and doc["found"]
    assert doc["certificate"]["direction"] == "below"
    assert doc["certificate"]["h"] == {"num": 5, "den": 1}


def test_certify_sum_refuted(capsys):
    code, doc = run(capsys, "certify", "sum", "--list", "0,0,4,0", "--h", "4")
    assert code == 1 and not doc["found"]


def test_certify_sum_above(capsys):
    code, doc = run(capsys, "certify", "sum", "--list", "1,2", "--h", "5/2",
                    "--direction", "above")
    assert code == 0 and doc["certificate"]["direction"] == "above"


def test_certify_sum_equality(capsys):
    code, doc = run(capsys, "certify", "sum", "--list", "0,0,4,0", "--h", "4",
                    "--direction", "equality", "--epsilon", "1/4")
    assert code == 0
    assert doc["equality"]["epsilon"] == {"num": 1, "den": 4}


def test_certify_sum_bad_rational_is_input_error(capsys):
    code, doc = run(capsys, "certify", "sum", "--list", "1,2", "--h", "x")
    assert code == 2 and doc["error"] == "invalid input"


def test_certify_verify_accepts_unedited_sum_output(capsys, tmp_path):
    # the whole stdout of `certify sum` must pipe back into `certify verify`
    code, doc = run(capsys, "certify", "sum", "--list", "0,0,4,0", "--h", "5")
    path = tmp_path / "found.json"
    path.write_text(dump_json(doc), encoding="utf-8")
    code, doc = run(capsys, "certify", "verify", "--list", "0,0,4,0",
                    "--certificate", str(path))
    assert code == 0 and doc["verified"]
    code, doc = run(capsys, "certify", "sum", "--list", "0,0,4,0", "--h", "4",
                    "--direction", "equality")
    path.write_text(dump_json(doc), encoding="utf-8")
    code, doc = run(capsys, "certify", "verify", "--list", "0,0,4,0",
                    "--certificate", str(path))
    assert code == 0 and doc["verified"]


def test_certify_verify_roundtrip(capsys, tmp_path):
    code, doc = run(capsys, "certify", "sum", "--list", "0,0,4,0", "--h", "5")
    path = tmp_path / "cert.json"
    path.write_text(dump_json(doc["certificate"]), encoding="utf-8")
    code, doc = run(capsys, "certify", "verify", "--list", "0,0,4,0",
                    "--certificate", str(path))
    assert code == 0 and doc["verified"]
    # tampering flips the verdict
    bad = json.loads(path.read_text())
    bad["k"] = bad["k"] % 4 + 1
    path.write_text(dump_json(bad), encoding="utf-8")
    code, doc = run(capsys, "certify", "verify", "--list", "0,0,4,0",
                    "--certificate", str(path))
    assert code == 1


def test_certify_verify_equality_doc(capsys, tmp_path):
    code, doc = run(capsys, "certify", "sum", "--list", "0,0,4,0", "--h", "4",
                    "--direction", "equality")
    path = tmp_path / "eq.json"
    path.write_text(dump_json(doc["equality"]), encoding="utf-8")
    code, doc = run(capsys, "certify", "verify", "--list", "0,0,4,0",
                    "--certificate", str(path))
    assert code == 0 and doc["verified"] and doc["total_equals_h"]


def test_domination_solve(capsys):
    code, doc = run(capsys, "domination", "solve", "--graph", "torus:5:3",
                    "--variant", "paired")
    assert code == 0 and doc["value"] == 4
    assert len(doc["witness"]) == 4


def test_domination_solve_max_minimal(capsys):
    code, doc = run(capsys, "domination", "solve", "--graph", "torus:4:3",
                    "--variant", "total", "--mode", "max-minimal")
    assert code == 0 and doc["value"] == 6


def test_domination_solve_budget_exceeded(capsys):
    code, doc = run(capsys, "domination", "solve", "--graph", "torus:4:4",
                    "--variant", "total", "--budget-nodes", "1")
    assert code == 3 and doc["error"] == "budget exceeded"


def test_budget_env_override(capsys, monkeypatch):
    monkeypatch.setenv("CYCLECERT_BUDGET_NODES", "1")
    code, doc = run(capsys, "domination", "solve", "--graph", "torus:4:4",
                    "--variant", "total")
    assert code == 3
    # explicit flag wins over the environment
    code, doc = run(capsys, "domination", "solve", "--graph", "torus:4:4",
                    "--variant", "total", "--budget-nodes", "1000000")
    assert code == 0 and doc["value"] == 4


def test_domination_verify_pair(capsys):
    code, doc = run(capsys, "domination", "verify-pair", "--n", "3")
    assert code == 0 and doc["match"] and doc["solved"] == 4 and doc["expected"] == 4


def test_domination_verify_upper_total(capsys):
    code, doc = run(capsys, "domination", "verify-upper-total", "--n", "3")
    assert code == 0 and doc["match"] and doc["solved"] == 6


def test_domination_corollary_decide(capsys):
    code, doc = run(capsys, "domination", "corollary", "--graph", "torus:3:3",
                    "--partition", "columns:3:3", "--shift", "columns:3:3",
                    "--h", "3")
    assert code == 0 and doc["equals"]
    code, doc = run(capsys, "domination", "corollary", "--graph", "torus:3:3",
                    "--partition", "columns:3:3", "--shift", "columns:3:3",
                    "--h", "4")
    assert code == 1 and not doc["equals"]


def test_domination_corollary_search_witness(capsys):
    code, doc = run(capsys, "domination", "corollary", "--graph", "torus:3:3",
                    "--partition", "columns:3:3", "--shift", "columns:3:3",
                    "--h", "3", "--mode", "search")
    assert code == 0 and doc["found"] and len(doc["witness"]) <= 3


def test_domination_corollary_rd(capsys):
    code, doc = run(capsys, "domination", "corollary", "--graph", "torus:3:3",
                    "--partition", "columns:3:3", "--shift", "columns:3:3",
                    "--h", "3", "--rd")
    assert code == 0 and doc["equals"]


def test_domination_corollary_bad_shift_is_input_error(capsys):
    code, doc = run(capsys, "domination", "corollary", "--graph", "torus:3:3",
                    "--partition", "columns:3:3", "--shift", "0,1,2,3,4,5,6,7,8",
                    "--h", "3")
    assert code == 2 and doc["error"] == "invalid input"


def test_partition_check_and_transitive(capsys):
    code, doc = run(capsys, "partition", "check", "--graph", "torus:3:3",
                    "--partition", "columns:3:3", "--transitive")
    assert code == 0 and doc["valid"] and doc["transitive"]


def test_partition_find(capsys):
    code, doc = run(capsys, "partition", "find", "--graph", "cycle:6", "--t", "3")
    assert code == 0 and doc["found"] and len(doc["parts"]) == 3
    code, doc = run(capsys, "partition", "find", "--graph", "kmn:2:3", "--t", "5")
    assert code == 1 and not doc["found"]


def test_decomposition_check(capsys, tmp_path):
    doc_in = {
        "pieces": [
            {"vertices": [0, 2, 3, 4], "edges": [[0, 2], [0, 3], [0, 4]]},
            {"vertices": [1, 2, 3, 4], "edges": [[1, 2], [1, 3], [1, 4]]},
        ]
    }
    path = tmp_path / "stars.json"
    path.write_text(dump_json(doc_in), encoding="utf-8")
    code, doc = run(capsys, "decomposition", "check", "--graph", "kmn:2:3",
                    "--decomposition", str(path), "--transitive")
    assert code == 0 and doc["valid"] and doc["transitive"]


def test_drawing_check_valid_and_invalid(capsys, tmp_path):
    good = {"surface": "plane", "graph": "circulant:8:1,4",
            "crossings": [[[0, 4], [1, 5]]]}
    path = tmp_path / "d.json"
    path.write_text(dump_json(good), encoding="utf-8")
    code, doc = run(capsys, "drawing", "check", "--drawing", str(path))
    assert code == 0 and doc["valid"] and doc["cr_total"] == 1

    bad = {"surface": "plane", "graph": "cycle:4", "crossings": [[[0, 1], [1, 2]]]}
    path.write_text(dump_json(bad), encoding="utf-8")
    code, doc = run(capsys, "drawing", "check", "--drawing", str(path))
    assert code == 1 and not doc["valid"]
    assert doc["violations"][0]["kind"] == "adjacent-pair"


def test_drawing_convex(capsys):
    code, doc = run(capsys, "drawing", "convex", "--graph", "complete:5")
    assert code == 0 and doc["cr_total"] == 5
    assert len(doc["crossings"]) == 5


def test_drawing_parity(capsys, tmp_path):
    graph = {"n": 6, "edges": [[0, 2], [2, 4], [0, 4], [1, 3], [3, 5], [1, 5]]}
    even = {"surface": "plane", "graph": graph,
            "crossings": [[[0, 2], [1, 3]], [[2, 4], [3, 5]]]}
    path = tmp_path / "d.json"
    path.write_text(dump_json(even), encoding="utf-8")
    code, doc = run(capsys, "drawing", "parity", "--drawing", str(path),
                    "--cycle-a", "0-2,2-4,0-4", "--cycle-b", "1-3,3-5,1-5")
    assert code == 0 and doc["parity"] == "even"

    odd = dict(even, crossings=[[[0, 2], [1, 3]]])
    path.write_text(dump_json(odd), encoding="utf-8")
    code, doc = run(capsys, "drawing", "parity", "--drawing", str(path),
                    "--cycle-a", "0-2,2-4,0-4", "--cycle-b", "1-3,3-5,1-5")
    assert code == 1 and doc["parity"] == "odd"


def test_drawing_certify(capsys, tmp_path):
    drawing = tmp_path / "d.json"
    pieces = tmp_path / "p.json"
    # C_4 drawn without crossings, split into two paths
    drawing.write_text(dump_json({"graph": "cycle:4", "crossings": []}), encoding="utf-8")
    pieces.write_text(dump_json({
        "pieces": [
            {"vertices": [0, 1, 2], "edges": [[0, 1], [1, 2]]},
            {"vertices": [0, 2, 3], "edges": [[2, 3], [0, 3]]},
        ]
    }), encoding="utf-8")
    code, doc = run(capsys, "drawing", "certify", "--drawing", str(drawing),
                    "--pieces", str(pieces), "--h", "0")
    assert code == 0 and doc["found"]


def test_generate_text_matches_library(capsys):
    code, out = run(capsys, "generate", "--graph", "cycle:4")
    assert code == 0 and out == emit_graph_text(cycle(4))


def test_generate_json(capsys):
    code, doc = run(capsys, "generate", "--graph", "cycle:4", "--format", "json")
    assert code == 0 and doc["n"] == 4 and len(doc["edges"]) == 4


def test_generate_bad_spec_is_input_error(capsys):
    code, doc = run(capsys, "generate", "--graph", "blob:9")
    assert code == 2 and doc["error"] == "invalid input"


def test_reproduce_structures_quick(capsys):
    code, doc = run(capsys, "reproduce", "--suite", "structures", "--quick")
    assert code == 0 and doc["ok"]
    assert all(r["ok"] for r in doc["results"])
