"""Full-size property suites; run with --runslow."""
import random
import time

import pytest

from pipelines.bench import run_benchmark, summarize_records
from src.graph.core import (
    connected_components,
    induced_subgraph,
    is_independent,
    is_maximal_independent,
    relabel,
    scale_weights,
    weights_close,
)
from src.graph.decomposition import cycle_basis, decompose, is_cus, replay
from src.solvers.exact import solve_amisl, solve_mwis
from src.solvers.greedy import (
    ScopeKind,
    SelectorKind,
    greedy_mis,
    gwmin2_bound,
    gwmin_bound,
    solve_composed,
)
from src.solvers.oracle import OracleConfig, oracle_amis, oracle_mwis
from src.utils.env import project_root
from src.utils.generator import benchmark_suite_specs, generate_graph
from src.utils.suite_config import load_suite_config
from tests.graphs import disjoint_triangles, random_graphs

pytestmark = pytest.mark.slow

BOUNDS = {SelectorKind.GWMIN: gwmin_bound, SelectorKind.GWMIN2: gwmin2_bound}


def at_least(value, bound) -> bool:
    return value >= bound or weights_close(value, bound)


def test_exact_solvers_agree_with_the_oracle():
    for g in random_graphs(seed=1001, count=300, min_nodes=4, max_nodes=18):
        optimum = oracle_mwis(g).total_weight
        a1 = solve_mwis(g)
        assert a1.total_weight == optimum
        assert a1.verified_independent and a1.verified_maximal
        best = solve_amisl(g).best
        assert best.total_weight == optimum
        assert is_maximal_independent(g, best.members)


def test_relabeling_and_scaling_invariance():
    shuffle = random.Random(1009)
    for g in random_graphs(seed=1009, count=100, min_nodes=3, max_nodes=14):
        base = solve_mwis(g)
        ids = list(range(500, 500 + g.number_of_nodes))
        shuffle.shuffle(ids)
        mapping = dict(zip(sorted(g.nodes), ids))
        moved = relabel(g, mapping)
        assert solve_mwis(moved).total_weight == base.total_weight
        moved_best = solve_amisl(moved).best
        assert moved_best.total_weight == base.total_weight
        assert is_maximal_independent(moved, moved_best.members)

        scaled = solve_mwis(scale_weights(g, 7))
        assert scaled.total_weight == 7 * base.total_weight
        assert scaled.solution.members == base.solution.members
        assert solve_amisl(scale_weights(g, 7)).best.total_weight == 7 * base.total_weight


def test_maximal_set_families_match_the_oracle():
    for g in random_graphs(seed=1003, count=200, min_nodes=1, max_nodes=14):
        result = solve_amisl(g)
        assert result.collection == oracle_amis(g, OracleConfig(max_nodes=14))
        assert result.best.total_weight == solve_mwis(g).total_weight
        if g.number_of_nodes % 3 == 0:
            assert len(result.collection) <= 3 ** (g.number_of_nodes // 3)
    for k in (1, 2, 3, 4):
        assert len(solve_amisl(disjoint_triangles(k)).collection) == 3 ** k


def test_greedy_bounds_on_larger_graphs():
    for g in random_graphs(seed=1005, count=1000, min_nodes=1, max_nodes=60):
        for selector, bound in BOUNDS.items():
            result = greedy_mis(g, selector)
            assert at_least(result.total_weight, bound(g))
            assert is_maximal_independent(g, result.members)


def test_composed_sandwich_on_the_oracle_suite():
    for g in random_graphs(seed=1001, count=300, min_nodes=4, max_nodes=18):
        optimum = oracle_mwis(g).total_weight
        for selector in SelectorKind:
            greedy = greedy_mis(g, selector).total_weight
            for scope in ScopeKind:
                result = solve_composed(g, selector, scope)
                assert result.verified_independent and result.verified_maximal
                assert result.total_weight <= optimum
                assert at_least(result.total_weight, BOUNDS[selector](g))
                if scope is ScopeKind.WHOLE:
                    assert result.total_weight >= greedy


def test_structural_invariants():
    for g in random_graphs(seed=1007, count=500, min_nodes=1, max_nodes=30):
        components = len(connected_components(g))
        assert len(cycle_basis(g)) == g.number_of_edges - g.number_of_nodes + components
        sd = decompose(g)
        residual = sd.residual(g)
        assert all(is_cus(induced_subgraph(residual, c)) for c in connected_components(residual))
        rebuilt = replay(g, sd)
        assert not rebuilt or rebuilt[-1] == g


@pytest.fixture(scope="module")
def suite_graphs():
    suite = load_suite_config(project_root() / "configs" / "benchmark_suite.yaml")
    return [(test_id, generate_graph(spec)) for test_id, spec in benchmark_suite_specs(suite)]


def test_fast_algorithms_on_the_largest_suite_graph(suite_graphs):
    _, g = suite_graphs[-1]
    assert (g.number_of_nodes, g.number_of_edges) == (161, 4718)
    for selector in SelectorKind:
        start = time.perf_counter()
        assert is_independent(g, greedy_mis(g, selector).members)
        assert time.perf_counter() - start < 1.0
        for scope in ScopeKind:
            assert solve_composed(g, selector, scope).runtime < 60.0


def test_suite_accuracy_ordering(suite_graphs):
    test_ids = [test_id for test_id, _ in suite_graphs]
    graphs = [g for _, g in suite_graphs]
    records = run_benchmark(graphs, ["A1", "A3", "A4", "A5", "A6", "A7", "A8"],
                            per_instance_budget=1800, test_ids=test_ids)
    summary = summarize_records([r for r in records if r.optimum is not None]).set_index("algorithm")
    assert summary.loc["A1", "max_abs_error"] == 0.0
    for alg in ("A4", "A5", "A8"):
        assert summary.loc[alg, "mean_abs_error"] < 2.0
    for alg in ("A5", "A8"):
        assert summary.loc[alg, "max_abs_error"] < 9.0
    assert summary.loc["A4", "max_abs_error"] < 13.0
    assert summary.loc["A4", "mean_abs_error"] <= summary.loc["A3", "mean_abs_error"]
    assert summary.loc["A7", "mean_abs_error"] <= summary.loc["A6", "mean_abs_error"]
