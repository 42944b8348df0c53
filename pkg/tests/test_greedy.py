import logging
from decimal import Decimal

import pytest

from src.graph.core import (
    build_graph,
    complement_nonneighbors,
    is_independent,
    is_maximal_independent,
    weights_close,
)
from src.solvers.exact import solve_mwis
from src.solvers.greedy import (
    ComposedPipeline,
    ScopeKind,
    SelectorKind,
    greedy_mis,
    gwmin2_bound,
    gwmin_bound,
    solve_composed,
    solve_greedy,
)
from src.solvers.oracle import oracle_mwis
from tests.graphs import complete_graph, path_graph, random_graphs, star_graph

EMPTY = build_graph([], [])

VARIANTS = [
    (SelectorKind.GWMIN, ScopeKind.WHOLE, "A4"),
    (SelectorKind.GWMIN, ScopeKind.NON_NEIGHBOR, "A5"),
    (SelectorKind.GWMIN2, ScopeKind.WHOLE, "A7"),
    (SelectorKind.GWMIN2, ScopeKind.NON_NEIGHBOR, "A8"),
]

BOUNDS = {SelectorKind.GWMIN: gwmin_bound, SelectorKind.GWMIN2: gwmin2_bound}


def at_least(value, bound) -> bool:
    return value >= bound or weights_close(value, bound)


def test_greedy_on_the_empty_graph():
    for selector in SelectorKind:
        assert greedy_mis(EMPTY, selector).total_weight == 0


def test_gwmin_takes_a_heavy_center():
    result = greedy_mis(star_graph(10, [1, 1, 1]), SelectorKind.GWMIN)
    assert result.members == {0}
    assert result.total_weight == 10


def test_gwmin_suboptimality_witness(star_witness):
    result = greedy_mis(star_witness, SelectorKind.GWMIN)
    assert result.members == {0}
    assert result.total_weight == 3
    assert oracle_mwis(star_witness).total_weight == 4


def test_score_ties_go_to_the_smallest_id():
    assert greedy_mis(path_graph([1, 1]), SelectorKind.GWMIN2).members == {0}
    assert greedy_mis(complete_graph([2, 2, 2]), SelectorKind.GWMIN).members == {0}


def test_gwmin2_uses_neighbourhood_weight():
    # 0 (w=4) - 1 (w=5) - 2 (w=4): GWMIN2 scores 4/9, 5/13, 4/9
    result = greedy_mis(path_graph([4, 5, 4]), SelectorKind.GWMIN2)
    assert result.members == {0, 2}


def test_bound_examples():
    lone = build_graph([(0, 7)], [])
    assert gwmin_bound(lone) == 7
    assert gwmin2_bound(lone) == 7
    triangle = complete_graph([1, 1, 1])
    assert gwmin_bound(triangle) == 1
    assert gwmin2_bound(triangle) == 1
    assert gwmin2_bound(path_graph([1, 1])) == 1
    assert gwmin_bound(star_graph(10, [1, 1, 1])) == Decimal("4.0")


def test_greedy_meets_its_bound_and_is_maximal():
    for g in random_graphs(seed=201, count=200, min_nodes=1, max_nodes=40):
        for selector, bound in BOUNDS.items():
            result = greedy_mis(g, selector)
            assert is_maximal_independent(g, result.members)
            assert at_least(result.total_weight, bound(g))


def test_solve_greedy_ids(star_witness):
    assert solve_greedy(star_witness, SelectorKind.GWMIN).algorithm == "A3"
    assert solve_greedy(star_witness, "Gwmin2").algorithm == "A6"


@pytest.mark.parametrize("selector, scope, alg_id", VARIANTS)
def test_composed_is_exact_on_base_graphs(star_witness, selector, scope, alg_id):
    pipeline = ComposedPipeline(selector, scope)
    assert pipeline.solve(star_witness).total_weight == 4
    assert pipeline.greedy_calls == 0
    result = solve_composed(star_witness, selector, scope)
    assert result.algorithm == alg_id
    assert result.solution == solve_mwis(star_witness).solution
    assert result.total_weight > greedy_mis(star_witness, selector).total_weight


@pytest.mark.parametrize("selector, scope, alg_id", VARIANTS)
def test_composed_sandwich(selector, scope, alg_id):
    for g in random_graphs(seed=211, count=80, min_nodes=4, max_nodes=14):
        result = solve_composed(g, selector, scope)
        assert result.verified_independent and result.verified_maximal
        assert result.total_weight <= oracle_mwis(g).total_weight
        assert at_least(result.total_weight, BOUNDS[selector](g))
        if scope is ScopeKind.WHOLE:
            assert result.total_weight >= greedy_mis(g, selector).total_weight


@pytest.mark.parametrize("selector, scope, alg_id", VARIANTS)
def test_composed_is_deterministic(selector, scope, alg_id):
    for g in random_graphs(seed=223, count=10, min_nodes=8, max_nodes=20):
        assert solve_composed(g, selector, scope).solution == solve_composed(g, selector, scope).solution


@pytest.mark.parametrize("selector, scope, alg_id", VARIANTS)
def test_composed_without_greedy_calls_returns_the_a1_set(selector, scope, alg_id):
    checked = 0
    for g in random_graphs(seed=227, count=200, min_nodes=3, max_nodes=9):
        pipeline = ComposedPipeline(selector, scope)
        solution = pipeline.solve(g)
        if pipeline.greedy_calls:
            continue
        checked += 1
        assert solution == solve_mwis(g).solution
    assert checked > 0


@pytest.mark.parametrize("selector", list(SelectorKind))
def test_non_neighbor_compare_is_no_worse_than_plain_greedy(selector):
    for g in random_graphs(seed=229, count=40, min_nodes=6, max_nodes=16):
        pipeline = ComposedPipeline(selector, ScopeKind.NON_NEIGHBOR)
        pipeline.solve(g)
        for v in sorted(g.nodes):
            rest = complement_nonneighbors(g, v)
            if rest.is_empty():
                continue
            inner = pipeline._approximate(rest)
            assert is_independent(rest, inner.members)
            assert inner.total_weight >= greedy_mis(rest, selector).total_weight


def test_non_neighbor_compare_solves_cus_components_exactly(star_witness):
    # two copies of the witness star: greedy takes both centers (6), the leaves weigh 8
    doubled = build_graph(
        [(v, w) for v, w in star_witness.weights.items()] + [(v + 5, w) for v, w in star_witness.weights.items()],
        sorted(star_witness.edges) + [(u + 5, v + 5) for u, v in sorted(star_witness.edges)],
    )
    pipeline = ComposedPipeline(SelectorKind.GWMIN, ScopeKind.NON_NEIGHBOR)
    assert greedy_mis(doubled, SelectorKind.GWMIN).total_weight == 6
    assert pipeline._approximate(doubled).total_weight == 8
    assert pipeline.greedy_calls == 0


def test_composed_solve_logs_memo_hits(caplog):
    caplog.set_level(logging.DEBUG, logger="src.solvers")
    g = next(random_graphs(seed=233, count=1, min_nodes=12, max_nodes=12))
    solve_composed(g, SelectorKind.GWMIN, ScopeKind.NON_NEIGHBOR)
    assert any("memo hits" in record.getMessage() for record in caplog.records)
