import json

import pytest

from mlscover.cli import main
from mlscover.families import bipartite_minus_matching, cycle, fig2_counterexample
from mlscover.io import parse_graph, to_graph6, write_edge_list


@pytest.fixture
def write(tmp_path):
    def _write(text, name="g.txt"):
        p = tmp_path / name
        p.write_text(text)
        return str(p)
    return _write


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_cover_c4(capsys, write):
    f = write(write_edge_list(cycle(4)))
    code, out, _ = run(capsys, "cover", f, "--json")
    assert code == 0
    rep = json.loads(out)
    assert rep["cover"] == [[0, 2], [1, 3]] and rep["verified"]
    assert [s["generators"] for s in rep["sets"]] == [1, 1]
    code, out2, _ = run(capsys, "cover", f, "--json")
    assert out == out2


def test_cover_text_and_variants(capsys, write):
    code, out, _ = run(capsys, "cover", write("n 3\n"))
    assert code == 0 and out.splitlines()[1:4] == ["0  (generators: 1)", "1  (generators: 1)",
                                                   "2  (generators: 1)"]
    code, out, _ = run(capsys, "cover", write(write_edge_list(fig2_counterexample())), "--trace",
                       "--timing")
    assert code == 0 and "verified" in out and "elapsed" in out and "target 0" in out
    code, out, _ = run(capsys, "cover", write(to_graph6(cycle(4)) + "\n"), "--dot")
    assert code == 0 and out.startswith("graph cover {")
    code, out, _ = run(capsys, "cover", write("n 3 q 3\n0 1 2\n1 2 1\n"), "--json", "--trace")
    rep = json.loads(out)
    assert code == 0 and rep["field"] == 3 and "trace" in rep
    assert all(s["generators"] is None for s in rep["sets"])
    code, out, _ = run(capsys, "cover", write("n 4\n0 1\n"), "--json", "--timing")
    assert "elapsed_seconds" in json.loads(out)


def test_cover_bad_input(capsys, write, tmp_path):
    assert run(capsys, "cover", write("n 2\n0 0\n"))[0] == 1
    code, _, err = run(capsys, "cover", write("n 2\n0 1\nxx\n"))
    assert code == 1 and "line 3" in err
    assert run(capsys, "cover", str(tmp_path / "missing"))[0] == 1
    assert run(capsys, "cover")[0] == 1
    assert run(capsys, "nosuch")[0] == 1


def test_cutrank(capsys, write):
    f = write(write_edge_list(cycle(4)))
    code, out, _ = run(capsys, "cutrank", f, "--set", "1,3")
    assert code == 0 and out.split() == ["cutrank", "1", "size", "2", "full", "no"]
    code, out, _ = run(capsys, "cutrank", f, "--set", "", "--json")
    assert json.loads(out) == {"set": [], "cutrank": 0, "size": 0, "full": True}
    code, out, _ = run(capsys, "cutrank", write("C~\n"), "--set", "0,1,2")
    assert out.startswith("cutrank 1")
    assert run(capsys, "cutrank", f, "--set", "4")[0] == 1
    assert run(capsys, "cutrank", f, "--set", "a")[0] == 1


def test_enumerate(capsys, write):
    code, out, _ = run(capsys, "enumerate", write(write_edge_list(cycle(4))))
    assert code == 0 and out.splitlines() == ["0 2  [generators: 0 2]", "1 3  [generators: 1 3]"]
    code, out, _ = run(capsys, "enumerate", write("n 2\n0 1\n"), "--json")
    assert json.loads(out)["mls"] == [{"vertices": [0, 1], "size": 2,
                                       "generators": [[0], [1], [0, 1]]}]
    code, out, _ = run(capsys, "enumerate", write(write_edge_list(bipartite_minus_matching(4))),
                       "--stats", "--json")
    doc = json.loads(out)
    assert code == 0 and doc["stats"]["count"] >= 8 and doc["violations"] == []
    code, out, _ = run(capsys, "enumerate", write(write_edge_list(cycle(5))), "--stats")
    assert code == 0 and "count" in out
    assert run(capsys, "enumerate", write("n 21\n"))[0] == 1
    assert run(capsys, "enumerate", write(write_edge_list(cycle(5))), "--max-n", "4")[0] == 1
    assert run(capsys, "enumerate", write("n 2 q 3\n0 1 1\n"))[0] == 1
    assert run(capsys, "enumerate", write("n 2 q 2\n0 1 1\n"))[0] == 0


def test_gen(capsys, write, tmp_path):
    code, out, _ = run(capsys, "gen", "cycle", "4")
    assert code == 0 and parse_graph(out) == cycle(4)
    code, out, _ = run(capsys, "gen", "fig2")
    assert parse_graph(out) == fig2_counterexample()
    code, out, _ = run(capsys, "gen", "bound-tight", "8")
    assert "# witness 0 1 2 3" in out and parse_graph(out).n == 8
    dest = tmp_path / "bt.g6"
    code, out, _ = run(capsys, "gen", "bound-tight", "8", "-o", str(dest), "--format", "graph6")
    assert code == 0 and parse_graph(dest.read_text()).n == 8 and "witness" in out
    code, out, err = run(capsys, "gen", "bound-tight", "7", "--format", "graph6")
    assert "witness" in err
    a = run(capsys, "gen", "random", "10", "0.5", "--seed", "3")[1]
    assert a == run(capsys, "gen", "random", "10", "0.5", "--seed", "3")[1]
    assert run(capsys, "gen", "random-multigraph", "5", "3")[0] == 0
    assert run(capsys, "gen", "nosuch")[0] == 1
    assert run(capsys, "gen", "cycle", "x")[0] == 1
    assert run(capsys, "gen", "cycle", "2")[0] == 1


def test_bounds(capsys):
    code, out, _ = run(capsys, "bounds", "8")
    assert code == 0 and out == "max_mls_size 4\n"
    code, out, _ = run(capsys, "bounds", "100", "19")
    lines = dict(l.split() for l in out.splitlines())
    assert float(lines["count_lower_bound"]) > 0
    assert lines["exponent_base"].startswith("1.16")
    code, out, _ = run(capsys, "bounds", "10", "5")
    assert code == 1 and out == ""
    assert run(capsys, "bounds", "10", "0")[0] == 1
    assert run(capsys, "bounds", "0")[0] == 1
