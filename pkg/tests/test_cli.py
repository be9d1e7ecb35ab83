import io
import json

import pytest

from graphic_pd.cli import main
from graphic_pd.groebner import BettiTable


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_classify_json(capsys):
    code, out, _ = run(capsys, "classify", "cycle:4")
    obj = json.loads(out)
    assert code == 0
    assert obj["schema"].startswith("graphic-pd/")
    assert (obj["chordal"], obj["weakly_chordal"], obj["predicted_pd"]) == (False, True, "1")


@pytest.mark.parametrize("graph, pd", [("cycle:5", 2), ("complete:5", 0), ("cycle:4", 1)])
def test_pd_command(capsys, graph, pd):
    code, out, _ = run(capsys, "pd", graph)
    obj = json.loads(out)
    assert code == 0 and obj["pd"] == pd and obj["consistent"]


def test_pd_with_betti_round_trips(capsys):
    code, out, _ = run(capsys, "pd", "cycle:5", "--betti")
    obj = json.loads(out)
    table = BettiTable.from_dict(obj)
    assert code == 0 and table.projective_dimension == 2
    assert table.ranks() == [8, 4, 1]


def test_text_output(capsys):
    code, out, _ = run(capsys, "pd", "cycle:4", "--out", "text")
    assert code == 0 and "CONSISTENT" in out


def test_stdin_input(capsys, monkeypatch):
    monkeypatch.setattr("sys.stdin", io.StringIO("Cl\n"))
    code, out, _ = run(capsys, "pd", "-")
    assert code == 0 and json.loads(out)["pd"] == 1


def test_edge_list_file(capsys, tmp_path):
    p = tmp_path / "g.txt"
    p.write_text("# a 4-cycle\n1 2\n2 3\n3 4\n4 1\n")
    code, out, _ = run(capsys, "classify", str(p), "--format", "edgelist")
    assert code == 0 and json.loads(out)["predicted_pd"] == "1"


def test_parse_error_reports_position(capsys, tmp_path):
    p = tmp_path / "bad.txt"
    p.write_text("1 2\n2 x\n")
    code, out, err = run(capsys, "pd", str(p))
    obj = json.loads(err)
    assert code == 2 and out == ""
    assert (obj["error"], obj["line"], obj["column"]) == ("parse", 2, 3)


def test_bad_graph6(capsys):
    code, _, err = run(capsys, "classify", "C~~", "--format", "graph6")
    assert code == 2 and json.loads(err)["error"] == "parse"


@pytest.mark.parametrize("argv", [("pd", "complete:10"), ("search", "9"), ("verify", "antihole", "--ell", "10")])
def test_resource_limits(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 3 and json.loads(err)["error"] == "limit"


def test_sequence_precondition(capsys):
    code, _, err = run(capsys, "sequence", "antihole:6")
    obj = json.loads(err)
    assert code == 4 and obj["error"] == "precondition"
    assert sorted(obj["witness_cycle"]) == list(range(1, 7)) and obj["witness_in_complement"]


def test_sequence_outputs(capsys):
    code, out, _ = run(capsys, "sequence", "cycle:4", "--check-b")
    assert code == 0
    obj = json.loads(out)
    assert len(obj["sequence"]) == 1 and obj["ok"] and not obj["problems"]
    assert all(step["surjective"] for step in obj["steps"])
    code, out, _ = run(capsys, "sequence", "complete:4")
    assert code == 0 and json.loads(out)["sequence"] == []


def test_dot_marks_the_witness_cycle(capsys):
    code, out, _ = run(capsys, "classify", "cycle:5", "--out", "dot")
    assert code == 0 and out.startswith("graph G {")
    assert out.count("color=red") == 5


def test_verify_suites(capsys):
    code, out, _ = run(capsys, "verify", "antihole", "--ell", "6")
    obj = json.loads(out)
    assert code == 0 and obj["ok"] and obj["suite"] == "antihole" and not obj["failures"]
    code, out, _ = run(capsys, "verify", "main-theorem", "--max-n", "4")
    assert code == 0 and json.loads(out)["passed"] == json.loads(out)["checks"]


def test_search_small(capsys):
    code, out, _ = run(capsys, "search", "5")
    assert code == 0 and json.loads(out)["hits"] == []


def test_output_is_deterministic(capsys):
    first = run(capsys, "verify", "terao", "--count", "5", "--max-n", "5", "--seed", "4")
    second = run(capsys, "verify", "terao", "--count", "5", "--max-n", "5", "--seed", "4")
    assert first == second and first[0] == 0
