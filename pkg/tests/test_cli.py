import json

import pytest

from evencircuits.cli import main

from conftest import BRIDGED_TRIANGLES, FIVE_VERTEX_DIGRAPH, TWO_SQUARES, TWO_TRIANGLES


@pytest.fixture
def files(tmp_path):
    paths = {}
    for name, text in (
        ("two_triangles", TWO_TRIANGLES),
        ("bridged", BRIDGED_TRIANGLES),
        ("two_squares", TWO_SQUARES),
        ("digraph", FIVE_VERTEX_DIGRAPH),
        ("empty", ""),
    ):
        p = tmp_path / f"{name}.txt"
        p.write_text(text)
        paths[name] = str(p)
    return paths


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestCircuitsCommand:
    def test_two_triangles_json(self, capsys, files):
        code, out, _ = run(capsys, "circuits", files["two_triangles"], "--json")
        assert code == 0
        certs = json.loads(out)
        assert len(certs) == 1
        cert = certs[0]
        assert cert["kind"] == "indecomposable_even_circuit"
        assert cert["circuit"]["vertices"] == ["x1", "x2", "x3", "x4", "x5", "x3"]
        assert {frozenset(cert["binomial"]["plus"]), frozenset(cert["binomial"]["minus"])} == {
            frozenset({"T1", "T4", "T6"}),
            frozenset({"T2", "T3", "T5"}),
        }

    def test_empty_graph_yields_empty_array(self, capsys, files):
        code, out, _ = run(capsys, "circuits", files["empty"], "--json")
        assert code == 0
        assert json.loads(out) == []

    def test_human_output(self, capsys, files):
        code, out, _ = run(capsys, "circuits", files["two_triangles"])
        assert code == 0
        assert "x1, x2, x3, x4, x5, x3" in out


class TestWalksCommand:
    def test_bridged_walk_flagged_not_square_free(self, capsys, files):
        code, out, _ = run(capsys, "walks", files["bridged"], "--max-len", "8", "--json")
        assert code == 0
        walks = json.loads(out)
        target = [
            w
            for w in walks
            if sorted(w["binomial"]["plus"] + w["binomial"]["minus"])
            == ["T1", "T2", "T3", "T4", "T4", "T5", "T6", "T7"]
        ]
        assert len(target) == 1
        assert target[0]["square_free"] is False

    def test_missing_bound_is_usage_error(self, capsys, files):
        code, _, err = run(capsys, "walks", files["bridged"])
        assert code == 1
        assert "--max-len" in err

    def test_odd_bound_is_usage_error(self, capsys, files):
        code, _, _ = run(capsys, "walks", files["bridged"], "--max-len", "7")
        assert code == 1


class TestDigraphCommands:
    def test_digraph_cycles(self, capsys, files):
        code, out, _ = run(capsys, "digraph-cycles", files["digraph"])
        assert code == 0
        assert out.strip() == "z2 -> z3 -> z5 -> z4 -> z2"

    def test_digraph_cycles_json(self, capsys, files):
        code, out, _ = run(capsys, "digraph-cycles", files["digraph"], "--json")
        assert code == 0
        cycles = json.loads(out)
        assert cycles[0]["vertices"] == ["z2", "z3", "z5", "z4"]
        assert cycles[0]["length"] == 4

    def test_ch_probe_json(self, capsys, files):
        code, out, _ = run(capsys, "ch-probe", files["digraph"], "--ell", "4", "--json")
        assert code == 0
        report = json.loads(out)
        assert report["premise_holds"] is False
        assert report["witness"] == ["z2", "z3", "z5", "z4"]
        assert report["conjecture_consistent"] is True

    def test_ch_sweep(self, capsys):
        code, out, _ = run(
            capsys, "ch-sweep", "--n", "3", "--ell", "2", "--exhaustive", "--json"
        )
        assert code == 0
        report = json.loads(out)
        assert report["total"] == 64
        assert report["consistent"] is True
        assert report["inconsistent"] == []


class TestReesCommand:
    def test_two_squares_json(self, capsys, files):
        code, out, _ = run(
            capsys, "rees", files["two_squares"], "--max-degree", "3", "--json"
        )
        assert code == 0
        gens = json.loads(out)
        assert sorted(g["degree"] for g in gens) == [2, 2, 3]

    def test_with_linear(self, capsys, files):
        code, out, _ = run(
            capsys,
            "rees",
            files["two_squares"],
            "--max-degree",
            "2",
            "--with-linear",
            "--json",
        )
        assert code == 0
        obj = json.loads(out)
        assert set(obj) == {"generators", "linear"}
        assert len(obj["linear"]) == 10


class TestJacobianCommand:
    def test_json_schema(self, capsys, files):
        code, out, _ = run(capsys, "jacobian", files["two_triangles"], "--json")
        assert code == 0
        dump = json.loads(out)
        assert dump["n_rows"] == 5
        assert len(dump["columns"]) == 10
        first = dump["columns"][0]
        assert set(first) == {
            "index", "row_a", "row_b", "midpoint", "t_a", "sign_a", "t_b", "sign_b",
        }
        assert first["midpoint"] == "x2"

    def test_text_dump_lists_midpoints(self, capsys, files):
        code, out, _ = run(capsys, "jacobian", files["two_triangles"])
        assert code == 0
        lines = out.splitlines()
        assert lines[-2].startswith("midpoints:")
        assert "linear syzygy columns only" in lines[-1]


class TestOracleCommand:
    def test_circuits(self, capsys, files):
        code, out, _ = run(capsys, "oracle", "circuits", files["two_triangles"])
        assert code == 0
        assert out.strip() == "x1, x2, x3, x4, x5, x3"

    def test_sweep_json(self, capsys, files):
        code, out, _ = run(capsys, "oracle", "sweep", files["two_triangles"], "--json")
        assert code == 0
        assert len(json.loads(out)) == 1

    def test_dicycles(self, capsys, files):
        code, out, _ = run(capsys, "oracle", "dicycles", files["digraph"])
        assert code == 0
        assert out.strip() == "z2 -> z3 -> z5 -> z4"


class TestExitCodes:
    def test_unknown_subcommand(self, capsys):
        code, _, _ = run(capsys, "frobnicate")
        assert code == 1

    def test_missing_file(self, capsys):
        code, _, err = run(capsys, "circuits", "/nonexistent/graph.txt")
        assert code == 2
        assert "input error" in err

    def test_malformed_input(self, capsys, tmp_path):
        bad = tmp_path / "bad.txt"
        bad.write_text("a b c\n")
        code, _, err = run(capsys, "circuits", str(bad))
        assert code == 2
        assert "line 1" in err

    def test_duplicate_edge_input(self, capsys, tmp_path):
        bad = tmp_path / "dup.txt"
        bad.write_text("a b\na b\n")
        code, _, _ = run(capsys, "cycles", str(bad))
        assert code == 2


class TestDeterminism:
    def test_byte_identical_across_runs_and_workers(self, capsys, files):
        outputs = set()
        for workers in ("1", "3", "1"):
            code, out, _ = run(
                capsys,
                "cycles",
                files["two_squares"],
                "--json",
                "--workers",
                workers,
            )
            assert code == 0
            outputs.add(out)
        assert len(outputs) == 1
