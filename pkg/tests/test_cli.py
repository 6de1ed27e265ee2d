import json

import pytest

from signed_arboricity.cli import main
from signed_arboricity.color import WAGNER_EDGES
from signed_arboricity.core import is_signed_tree_coloring
from signed_arboricity.formats import coloring_from_dict, graph_from_dict

from conftest import OCTAHEDRON_FACES, edges_of


def write(tmp_path, name, obj):
    path = tmp_path / name
    path.write_text(json.dumps(obj))
    return str(path)


def graph_file(tmp_path, n, edges, name="g.json", **extra):
    return write(tmp_path, name, {"vertex_count": n, "edges": [list(e) for e in edges], **extra})


TRIANGLE = [(0, 1, 1), (1, 2, 1), (0, 2, 1)]
OCTAHEDRON = [(u, v, 1) for u, v in edges_of(OCTAHEDRON_FACES)]
K5 = [(u, v, 1) for u in range(5) for v in range(u + 1, 5)]


def run(capsys, argv):
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


class TestCheck:
    def test_valid(self, tmp_path, capsys):
        g = graph_file(tmp_path, 3, TRIANGLE)
        c = write(tmp_path, "c.json", {"n": 2, "colors": [1, 1, -1]})
        code, out, _ = run(capsys, ["check", g, c])
        assert code == 0 and "valid" in out

    def test_monochromatic(self, tmp_path, capsys):
        g = graph_file(tmp_path, 3, TRIANGLE)
        c = write(tmp_path, "c.json", {"n": 2, "colors": [1, 1, 1]})
        code, out, _ = run(capsys, ["check", g, c, "--json"])
        report = json.loads(out)
        assert code == 1 and not report["valid"]
        assert sorted(report["classes"][0]["cycle"]) == [0, 1, 2]

    def test_malformed(self, tmp_path, capsys):
        bad = tmp_path / "g.json"
        bad.write_text("{")
        c = write(tmp_path, "c.json", {"n": 2, "colors": [1, 1, 1]})
        assert run(capsys, ["check", str(bad), c])[0] == 2


class TestColor:
    def test_octahedron(self, tmp_path, capsys):
        g = graph_file(tmp_path, 6, OCTAHEDRON)
        out_path = tmp_path / "c.json"
        code, _, _ = run(capsys, ["color", g, "--mode", "triangulation", "--n", "3", "-o", str(out_path)])
        assert code == 0
        c = coloring_from_dict(json.loads(out_path.read_text()))
        graph, _ = graph_from_dict(json.loads((tmp_path / "g.json").read_text()))
        assert c.n == 3 and is_signed_tree_coloring(graph, c)

    def test_outer_face_flag(self, tmp_path, capsys):
        g = graph_file(tmp_path, 6, OCTAHEDRON)
        code, out, _ = run(capsys, ["color", g, "--outer", "5,2,1"])
        assert code == 0 and json.loads(out)["n"] == 3

    def test_unbalanced(self, tmp_path, capsys):
        g = graph_file(tmp_path, 3, [(0, 1, -1), (1, 2, 1), (0, 2, 1)])
        code, _, err = run(capsys, ["color", g])
        assert code == 3 and "not balanced" in err

    def test_k5_not_decomposable(self, tmp_path, capsys):
        g = graph_file(tmp_path, 5, K5)
        assert run(capsys, ["color", g, "--mode", "k5"])[0] == 4

    def test_k5_mode(self, tmp_path, capsys):
        edges = [(u, v, 1) for u, v in WAGNER_EDGES] + [(0, 8, 1), (1, 8, 1)]
        g = graph_file(tmp_path, 9, edges)
        code, out, _ = run(capsys, ["color", g, "--mode", "k5"])
        assert code == 0 and json.loads(out)["n"] == 3

    def test_wagner_mode(self, tmp_path, capsys):
        g = graph_file(tmp_path, 8, [(u, v, -1 if u == 0 else 1) for u, v in WAGNER_EDGES])
        assert run(capsys, ["color", g, "--mode", "wagner", "--pin", "0,4"])[0] == 0
        assert run(capsys, ["color", g, "--mode", "wagner", "--pin", "0,2"])[0] == 7

    def test_not_a_triangulation(self, tmp_path, capsys):
        g = graph_file(tmp_path, 4, [(0, 1, 1), (1, 2, 1), (2, 3, 1), (0, 3, 1)])
        assert run(capsys, ["color", g])[0] == 6

    def test_lists_file(self, tmp_path, capsys):
        g = graph_file(tmp_path, 3, TRIANGLE)
        lists = write(tmp_path, "l.json", {"0": [1], "1": [2], "2": [1, 3]})
        code, out, _ = run(capsys, ["color", g, "--lists", lists])
        assert code == 0 and json.loads(out)["colors"][2] in (1, 3)


class TestOracle:
    def test_triangle(self, tmp_path, capsys):
        code, out, _ = run(capsys, ["oracle", graph_file(tmp_path, 3, TRIANGLE)])
        assert code == 0 and "va = 2" in out

    def test_single_vertex(self, tmp_path, capsys):
        code, out, _ = run(capsys, ["oracle", graph_file(tmp_path, 1, []), "--json"])
        assert code == 0 and json.loads(out)["va"] == 1

    def test_cap(self, tmp_path, capsys):
        assert run(capsys, ["oracle", graph_file(tmp_path, 13, [])])[0] == 5

    def test_exhausted(self, tmp_path, capsys):
        assert run(capsys, ["oracle", graph_file(tmp_path, 5, K5), "--n-max", "2"])[0] == 1

    def test_no_prune(self, tmp_path, capsys):
        code, out, _ = run(capsys, ["oracle", graph_file(tmp_path, 5, K5), "--no-prune", "--json"])
        assert code == 0 and json.loads(out)["va"] == 3


class TestProperty:
    def test_switching(self, tmp_path, capsys):
        code, out, _ = run(capsys, ["property", "--suite", "switching", "--count", "50", "--seed", "7", "--json"])
        report = json.loads(out)
        assert code == 0 and report["passed"] == 50 and report["seed"] == 7

    def test_triangulation(self, capsys):
        code, out, _ = run(capsys, ["property", "--suite", "triangulation", "--count", "200", "--seed", "1", "--json"])
        assert code == 0 and json.loads(out)["failed"] == 0

    @pytest.mark.parametrize("suite", ["allpositive", "k5", "wagner"])
    def test_other_suites(self, suite, capsys):
        assert run(capsys, ["property", "--suite", suite, "--count", "10", "--seed", "3"])[0] == 0

    def test_empty(self, capsys):
        code, out, _ = run(capsys, ["property", "--suite", "k5", "--count", "0", "--json"])
        report = json.loads(out)
        assert code == 0 and report["instances"] == [] and report["passed"] == 0

    def test_reproducible(self, capsys):
        argv = ["property", "--suite", "wagner", "--count", "5", "--seed", "9", "--json"]
        first = json.loads(run(capsys, argv)[1])
        second = json.loads(run(capsys, argv)[1])
        assert first["instances"] == second["instances"]


class TestGraphCommands:
    def test_switch_round_trip(self, tmp_path, capsys):
        g = graph_file(tmp_path, 3, TRIANGLE)
        out_path = tmp_path / "s.json"
        assert run(capsys, ["switch", g, "--vertices", "0", "-o", str(out_path)])[0] == 0
        h, _ = graph_from_dict(json.loads(out_path.read_text()))
        assert h.sign(0, 1) == -1 and h.sign(1, 2) == 1

    def test_balance(self, tmp_path, capsys):
        code, out, _ = run(capsys, ["balance", graph_file(tmp_path, 3, TRIANGLE), "--json"])
        assert code == 0 and json.loads(out)["potential"] == [1, 1, 1]
        g = graph_file(tmp_path, 3, [(0, 1, -1), (1, 2, 1), (0, 2, 1)], name="u.json")
        code, out, _ = run(capsys, ["balance", g, "--json"])
        assert code == 1 and sorted(json.loads(out)["witness"]) == [0, 1, 2]

    def test_decompose(self, tmp_path, capsys):
        edges = [(u, v, 1) for u, v in WAGNER_EDGES] + [(0, 8, 1), (1, 8, 1)]
        code, out, _ = run(capsys, ["decompose", graph_file(tmp_path, 9, edges)])
        data = json.loads(out)
        assert code == 0 and sorted(leaf["kind"] for leaf in data["leaves"]) == ["triangulation", "wagner"]
        assert sorted(data["joins"][0]["shared"]) == [0, 1]

    @pytest.mark.parametrize(
        "argv",
        [
            ["generate", "triangulation", "--vertices", "9", "--flips", "5"],
            ["generate", "k5", "--pieces", "3", "--signature", "random"],
            ["generate", "signed", "--vertices", "6", "--edges", "8", "--signature", "positive"],
        ],
    )
    def test_generate_round_trips(self, argv, tmp_path, capsys):
        out_path = tmp_path / "g.json"
        assert run(capsys, argv + ["--seed", "4", "-o", str(out_path)])[0] == 0
        first = out_path.read_text()
        g, _ = graph_from_dict(json.loads(first))
        assert g.vertex_count > 0
        run(capsys, argv + ["--seed", "4", "-o", str(out_path)])
        assert out_path.read_text() == first
