import json

import duckdb
import pytest
from typer.testing import CliRunner

import orchestrator
from src.graph.core import IndependentSet
from src.solvers.exact import verified_result
from src.solvers.greedy import SelectorKind, solve_greedy
from src.utils.graph_io import read_graph, write_graph
from src.utils.logging_config import detach_handlers
from tests.graphs import cycle_graph, star_graph

runner = CliRunner()


@pytest.fixture(autouse=True)
def _detach_cli_loggers():
    yield
    for name in ("src", "pipelines"):
        detach_handlers(name)


@pytest.fixture
def witness_file(tmp_path):
    return write_graph(star_graph(3, [1, 1, 1, 1]), tmp_path / "witness.txt")


def test_solve_writes_a_json_record(tmp_path, witness_file):
    out = tmp_path / "out" / "a1.json"
    result = runner.invoke(orchestrator.app, ["solve", "--alg", "a1", "--input", str(witness_file),
                                              "--output", str(out), "--verify"])
    assert result.exit_code == 0
    record = json.loads(out.read_text())
    assert record["algorithm"] == "A1"
    assert record["members"] == [1, 2, 3, 4]
    assert record["total_weight"] == "4"
    assert record["verified_independent"] and record["verified_maximal"]


def test_solve_greedy_variant(tmp_path, witness_file):
    out = tmp_path / "a3.json"
    result = runner.invoke(orchestrator.app, ["solve", "--alg", "A3", "--input", str(witness_file),
                                              "--output", str(out), "--verify"])
    assert result.exit_code == 0
    assert json.loads(out.read_text())["members"] == [0]


def test_malformed_input_exits_with_code_2(tmp_path):
    bad = tmp_path / "bad.txt"
    bad.write_text("p 2 0\nn 0 1\n")
    result = runner.invoke(orchestrator.app, ["solve", "--alg", "a1", "--input", str(bad)])
    assert result.exit_code == 2
    missing = runner.invoke(orchestrator.app, ["solve", "--alg", "a1", "--input", str(tmp_path / "none.txt")])
    assert missing.exit_code == 2


def test_unknown_algorithm_exits_with_code_2(witness_file):
    result = runner.invoke(orchestrator.app, ["solve", "--alg", "a9", "--input", str(witness_file)])
    assert result.exit_code == 2


def _greedy_posing_as_exact(alg, registry=None):
    return (lambda g, **_: solve_greedy(g, SelectorKind.GWMIN)), {"exact": True, "deadline": False}


def test_verify_mismatch_exits_with_code_1(monkeypatch, witness_file):
    monkeypatch.setattr(orchestrator, "get_solver", _greedy_posing_as_exact)
    result = runner.invoke(orchestrator.app, ["solve", "--alg", "a1", "--input", str(witness_file), "--verify"])
    assert result.exit_code == 1
    result = runner.invoke(orchestrator.app, ["verify", "--input", str(witness_file), "--algs", "a1"])
    assert result.exit_code == 1


def test_verify_passes_for_every_algorithm(witness_file):
    result = runner.invoke(orchestrator.app, ["verify", "--input", str(witness_file)])
    assert result.exit_code == 0
    assert "Verification complete." in result.output


def test_verify_refuses_large_graphs(tmp_path):
    path = write_graph(cycle_graph([1] * 25), tmp_path / "c25.txt")
    result = runner.invoke(orchestrator.app, ["verify", "--input", str(path)])
    assert result.exit_code == 2


@pytest.fixture
def small_settings(tmp_path, monkeypatch):
    custom = tmp_path / "settings.yml"
    custom.write_text("oracle:\n  max_nodes: 4\nbench:\n  algorithms: [a1, a3]\n")
    monkeypatch.setenv("MWIS_SETTINGS", str(custom))
    return custom


def test_verify_takes_the_oracle_limit_from_the_settings(small_settings, witness_file):
    result = runner.invoke(orchestrator.app, ["verify", "--input", str(witness_file)])
    assert result.exit_code == 2
    result = runner.invoke(orchestrator.app, ["verify", "--input", str(witness_file), "--max-nodes", "5"])
    assert result.exit_code == 0


def _single_leaf_as_composed(alg, registry=None):
    return (lambda g, **_: verified_result(alg, g, IndependentSet.of(g, [1]), 0.0)), {"exact": False}


@pytest.mark.parametrize("alg", ["a4", "a5", "a7", "a8"])
def test_verify_checks_composed_answers_against_their_greedy_bound(monkeypatch, witness_file, alg):
    monkeypatch.setattr(orchestrator, "get_solver", _single_leaf_as_composed)
    result = runner.invoke(orchestrator.app, ["verify", "--input", str(witness_file), "--algs", alg])
    assert result.exit_code == 1
    assert "below the greedy bound" in result.output


def test_timeout_exits_with_code_1(tmp_path):
    path = write_graph(cycle_graph([1] * 9), tmp_path / "c9.txt")
    result = runner.invoke(orchestrator.app, ["solve", "--alg", "a1", "--input", str(path), "--budget=-1"])
    assert result.exit_code == 1


def test_enumerate(tmp_path):
    path = write_graph(cycle_graph([1, 1, 1, 1]), tmp_path / "c4.txt")
    out = tmp_path / "sets.json"
    result = runner.invoke(orchestrator.app, ["enumerate", "--input", str(path), "--output", str(out)])
    assert result.exit_code == 0
    record = json.loads(out.read_text())
    assert record["count"] == 2
    assert record["sets"] == [[0, 2], [1, 3]]


def test_gen_writes_a_readable_graph(tmp_path):
    out = tmp_path / "g.txt"
    result = runner.invoke(orchestrator.app, ["gen", "--nodes", "30", "--density", "0.2", "--seed", "4",
                                              "--output", str(out)])
    assert result.exit_code == 0
    g = read_graph(out)
    assert g.number_of_nodes == 30
    assert g.number_of_edges == 87
    bad = runner.invoke(orchestrator.app, ["gen", "--nodes", "5", "--density", "2", "--output", str(out)])
    assert bad.exit_code == 2


def test_bench_report_round_trip(tmp_path):
    graphs = tmp_path / "graphs"
    for seed in (1, 2):
        runner.invoke(orchestrator.app, ["gen", "--nodes", "10", "--density", "0.3", "--seed", str(seed),
                                         "--output", str(graphs / f"g{seed}.txt")])
    csv_path = tmp_path / "bench.csv"
    db = tmp_path / "bench.duckdb"
    result = runner.invoke(orchestrator.app, ["bench", "--inputs", str(graphs), "--algs", "a1,a3",
                                              "--output", str(csv_path), "--db", str(db)])
    assert result.exit_code == 0
    assert csv_path.read_text().startswith("Test-ID,# of Edges,# of Nodes,Graph Density,A1 Weight Sum")
    con = duckdb.connect(str(db))
    assert con.execute("select count(*) from bench_runs").fetchone()[0] == 4
    con.close()

    report = runner.invoke(orchestrator.app, ["report", "--db", str(db)])
    assert report.exit_code == 0
    assert "Report complete." in report.output
    missing = runner.invoke(orchestrator.app, ["report", "--db", str(tmp_path / "none.duckdb")])
    assert missing.exit_code == 2


def test_explain_shows_the_rebuild(tmp_path):
    path = write_graph(cycle_graph([1, 10, 1, 10]), tmp_path / "c4.txt")
    result = runner.invoke(orchestrator.app, ["explain", "--input", str(path)])
    assert result.exit_code == 0
    assert "remove 0 -> components [1, 2, 3]" in result.output
    assert "-> preliminary" in result.output
    assert "MWIS: [1, 3] total weight 20" in result.output


def test_bench_defaults_to_the_configured_algorithms(tmp_path, small_settings):
    graphs = tmp_path / "graphs"
    runner.invoke(orchestrator.app, ["gen", "--nodes", "8", "--density", "0.3", "--seed", "3",
                                     "--output", str(graphs / "g3.txt")])
    db = tmp_path / "bench.duckdb"
    result = runner.invoke(orchestrator.app, ["bench", "--inputs", str(graphs), "--output",
                                              str(tmp_path / "bench.csv"), "--db", str(db)])
    assert result.exit_code == 0
    con = duckdb.connect(str(db))
    assert con.execute("select count(*) from bench_runs").fetchone()[0] == 2
    con.close()
