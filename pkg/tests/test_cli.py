"""CLI behavior: formats, exit codes, determinism."""

import json
import subprocess
import sys

import pytest

from idealgraph.cli import main

RIGHT_ZERO_3 = "3\n0 1 2\n0 1 2\n0 1 2\n"
NULL_3 = "3\n0 0 0\n0 0 0\n0 0 0\n"
NOT_ASSOC = "2\n1 1\n0 0\n"
Z3 = "3\n0 1 2\n1 2 0\n2 0 1\n"


@pytest.fixture
def table_file(tmp_path):
    def write(text, name="table.txt"):
        p = tmp_path / name
        p.write_text(text, encoding="utf-8")
        return str(p)
    return write


def test_validate_ok(table_file, capsys):
    assert main(["validate", table_file(RIGHT_ZERO_3)]) == 0
    out = capsys.readouterr().out
    assert "valid semigroup of order 3" in out


def test_validate_not_associative(table_file, capsys):
    assert main(["validate", table_file(NOT_ASSOC)]) == 2
    err = capsys.readouterr().err
    assert "(0, 0, 0)" in err


def test_validate_malformed(table_file, capsys):
    assert main(["validate", table_file("2\n0 1\n")]) == 2
    assert "error" in capsys.readouterr().err


def test_validate_missing_file(capsys):
    assert main(["validate", "/nonexistent/x.txt"]) == 2


def test_ideals_json(table_file, capsys):
    assert main(["ideals", table_file(NULL_3)]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["count"] == 3
    assert doc["minimal"] == [1]
    assert not doc["truncated"]


def test_ideals_truncation_reported(table_file, capsys):
    assert main(["ideals", table_file(RIGHT_ZERO_3), "--max-ideals", "4"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["truncated"] is True
    assert doc["count"] <= 4


def test_graph_dot_n3(capsys):
    assert main(["graph", "--n", "3", "--format", "dot"]) == 0
    dot = capsys.readouterr().out
    assert dot.startswith("graph In {")
    assert dot.count(";") == 6 + 6  # six vertices, six edges
    assert "I_1 -- I_12;" in dot


def test_graph_json_from_file(table_file, capsys):
    assert main(["graph", table_file(NULL_3), "--format", "json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["mode"] == "generic"
    assert len(doc["vertices"]) == 3
    assert len(doc["edges"]) == 2


def test_graph_output_file(tmp_path, capsys):
    out = tmp_path / "g.json"
    assert main(["graph", "--n", "2", "-o", str(out)]) == 0
    doc = json.loads(out.read_text())
    assert doc["edges"] == []
    assert capsys.readouterr().out == ""


def test_graph_requires_one_source(capsys):
    with pytest.raises(SystemExit) as e:
        main(["graph"])
    assert e.value.code == 2
    with pytest.raises(SystemExit) as e:
        main(["graph", "somefile", "--n", "3"])
    assert e.value.code == 2


def test_graph_out_of_range(capsys):
    assert main(["graph", "--n", "1"]) == 2


def test_invariants_all_n4(capsys):
    assert main(["invariants", "--n", "4", "--all"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["diameter"] == 3
    assert doc["girth"] == 3
    assert doc["clique_number"] == 3
    assert doc["chromatic_number"] == 3
    assert doc["independence_number"] == 6
    assert doc["domination_number"] == 2
    assert doc["eulerian"] is True
    assert doc["planar"] is True
    assert doc["perfect"] is True


def test_invariants_selected_flags(capsys):
    assert main(["invariants", "--n", "3", "--girth", "--matching"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc == {"girth": 6, "matching_number": 3, "perfect_matching": True}


def test_invariants_inf_encoding(capsys):
    assert main(["invariants", "--n", "2", "--diameter", "--girth"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc == {"components": 2, "diameter": "inf", "girth": "inf"}


def test_aut_n3(capsys):
    assert main(["aut", "--n", "3"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["order"] == 12
    assert doc["structure"] == "S3 x Z2"
    assert doc["vertex_transitive"] is True and doc["edge_transitive"] is True
    for gen in doc["generators"]:
        assert gen["complemented"] in (True, False)
        assert sorted(gen["relabeling"]) == [0, 1, 2]


def test_construct_outputs(capsys):
    assert main(["construct", "--n", "4", "--perfect-matching"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert len(doc["perfect_matching"]) == 7

    assert main(["construct", "--n", "4", "--dominating-set"]) == 0
    assert json.loads(capsys.readouterr().out) == {"dominating_set": [1, 14]}

    assert main(["construct", "--n", "4", "--max-chain"]) == 0
    assert json.loads(capsys.readouterr().out) == {"maximum_chain": [1, 3, 7]}

    assert main(["construct", "--n", "4", "--layer-matching", "1"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["covers"] == "lower" and len(doc["pairs"]) == 4


def test_verify_boolean_range(capsys):
    assert main(["verify", "--boolean", "2..4"]) == 0
    out = capsys.readouterr().out
    assert "passed:" in out and "failed: 0" in out


def test_verify_json_deterministic(capsys):
    assert main(["verify", "--boolean", "2..3", "--format", "json"]) == 0
    first = capsys.readouterr().out
    assert main(["verify", "--boolean", "2..3", "--format", "json"]) == 0
    second = capsys.readouterr().out
    assert first == second
    doc = json.loads(first)
    assert set(doc) == {"checks", "passed", "failed", "vacuous"}
    assert doc["failed"] == 0


def test_verify_corpus_dir(tmp_path, capsys):
    (tmp_path / "z3.txt").write_text(Z3, encoding="utf-8")
    assert main(["verify", "--corpus", str(tmp_path)]) == 0
    out = capsys.readouterr().out
    assert "vacuous" in out


def test_verify_corpus_bad_file(tmp_path, capsys):
    (tmp_path / "bad.txt").write_text("junk\n", encoding="utf-8")
    assert main(["verify", "--corpus", str(tmp_path)]) == 2


def test_verify_writes_json_report(tmp_path, capsys):
    out = tmp_path / "report.json"
    assert main(["verify", "--boolean", "3..3", "-o", str(out)]) == 0
    doc = json.loads(out.read_text())
    assert doc["failed"] == 0


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "idealgraph.cli", "invariants", "--n", "3", "--girth"],
        capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout) == {"girth": 6}


def test_max_vertices_cap(capsys):
    # A tiny cap makes materialization refuse; subprocess keeps the
    # environment override out of this process.
    proc = subprocess.run(
        [sys.executable, "-m", "idealgraph.cli", "--max-vertices", "5",
         "graph", "--n", "4"],
        capture_output=True, text=True)
    assert proc.returncode == 2
    assert "exceed" in proc.stderr
