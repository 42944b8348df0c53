"""
GWMIN / GWMIN2 greedy selection (A3, A6) and the composed algorithms A4, A5,
A7 and A8, which keep A1's exact Preliminary Sets but approximate every
Compare Set whose subgraph is not already a union of CUSs.
"""
from __future__ import annotations

import logging
import time
from decimal import Decimal
from enum import Enum
from fractions import Fraction
from typing import Dict, Optional

from src.graph.core import (
    IndependentSet,
    NodeId,
    WeightedGraph,
    complement_nonneighbors,
    connected_components,
    induced_subgraph,
)
from src.graph.decomposition import is_cus, meets_base_conditions
from src.solvers.exact import MwisPipeline, compare_set, verified_result
from src.solvers.results import Deadline, SolveResult

logger = logging.getLogger(__name__)


class SelectorKind(str, Enum):
    GWMIN = "Gwmin"      # w / (d + 1)
    GWMIN2 = "Gwmin2"    # w / (sum of closed-neighbourhood weights)


class ScopeKind(str, Enum):
    WHOLE = "WholeSubgraph"
    NON_NEIGHBOR = "NonNeighborSubgraph"


GREEDY_IDS: Dict[SelectorKind, str] = {SelectorKind.GWMIN: "A3", SelectorKind.GWMIN2: "A6"}

COMPOSED_IDS: Dict[tuple, str] = {
    (SelectorKind.GWMIN, ScopeKind.WHOLE): "A4",
    (SelectorKind.GWMIN, ScopeKind.NON_NEIGHBOR): "A5",
    (SelectorKind.GWMIN2, ScopeKind.WHOLE): "A7",
    (SelectorKind.GWMIN2, ScopeKind.NON_NEIGHBOR): "A8",
}


def _to_decimal(value: Fraction) -> Decimal:
    return Decimal(value.numerator) / Decimal(value.denominator)


def greedy_mis(g: WeightedGraph, selector: SelectorKind) -> IndependentSet:
    """Repeatedly take the best-scoring node and delete its closed neighbourhood.

    Scores are exact fractions; ties go to the smallest id. Degrees and
    neighbourhood weight sums are updated as nodes disappear.
    """
    selector = SelectorKind(selector)
    weight = {v: Fraction(w) for v, w in g.weights.items()}
    alive = set(g.nodes)
    degree = {v: len(g.adjacency[v]) for v in alive}
    closed_sum = {v: weight[v] + sum((weight[u] for u in g.adjacency[v]), Fraction(0)) for v in alive}

    if selector is SelectorKind.GWMIN:
        def score(v: NodeId) -> Fraction:
            return weight[v] / (degree[v] + 1)
    else:
        def score(v: NodeId) -> Fraction:
            return weight[v] / closed_sum[v]

    chosen = []
    while alive:
        pick = min(alive, key=lambda v: (-score(v), v))
        chosen.append(pick)
        removed = (g.adjacency[pick] & alive) | {pick}
        alive -= removed
        for x in removed:
            for y in g.adjacency[x] & alive:
                degree[y] -= 1
                closed_sum[y] -= weight[x]
    return IndependentSet.of(g, chosen)


def gwmin_bound(g: WeightedGraph) -> Decimal:
    """Sum of w(v) / (d(v) + 1): the weight GWMIN is guaranteed to reach."""
    total = sum((Fraction(w) / (len(g.adjacency[v]) + 1) for v, w in g.weights.items()), Fraction(0))
    return _to_decimal(total)


def gwmin2_bound(g: WeightedGraph) -> Decimal:
    """Sum of w(v)^2 / (weight of v's closed neighbourhood)."""
    total = Fraction(0)
    for v, w in g.weights.items():
        closed = Fraction(w) + sum((Fraction(g.weights[u]) for u in g.adjacency[v]), Fraction(0))
        total += Fraction(w) ** 2 / closed
    return _to_decimal(total)


def solve_greedy(g: WeightedGraph, selector: SelectorKind) -> SolveResult:
    selector = SelectorKind(selector)
    start = time.perf_counter()
    solution = greedy_mis(g, selector)
    runtime = time.perf_counter() - start
    return verified_result(GREEDY_IDS[selector], g, solution, runtime)


class ComposedPipeline(MwisPipeline):
    """A1 with greedy Compare Sets wherever A1 would have recursed."""

    def __init__(self, selector: SelectorKind, scope: ScopeKind, deadline: Optional[Deadline] = None):
        super().__init__(deadline)
        self.selector = SelectorKind(selector)
        self.scope = ScopeKind(scope)
        self.algorithm = COMPOSED_IDS[(self.selector, self.scope)]
        self.greedy_calls = 0

    def _greedy(self, g: WeightedGraph) -> IndependentSet:
        self.greedy_calls += 1
        return greedy_mis(g, self.selector)

    def _approximate(self, rest: WeightedGraph) -> IndependentSet:
        """Answer ``rest`` per component.

        CUS components use the exact formula; others take the heavier of
        greedy and any memoized answer for the same nodes.
        """
        parts = []
        for comp in connected_components(rest):
            sub = induced_subgraph(rest, comp)
            if is_cus(sub):
                parts.append(self.solve_cus(sub))
                continue
            guess = self._greedy(sub)
            known = self.memo.get(comp)
            parts.append(known if known is not None and known.total_weight > guess.total_weight else guess)
        return self.combine(parts)

    def improve_compare(
        self, level_graph: WeightedGraph, removed: NodeId, preliminary: IndependentSet, compare: IndependentSet
    ) -> IndependentSet:
        # approximate component answers can leave the removed node free
        if level_graph.adjacency[removed] & preliminary.members:
            return compare
        extended = preliminary.with_node(removed, level_graph.weight(removed))
        return extended if extended.total_weight > compare.total_weight else compare

    def compare(self, level_graph: WeightedGraph, removed: NodeId) -> IndependentSet:
        if self.scope is ScopeKind.WHOLE:
            if meets_base_conditions(complement_nonneighbors(level_graph, removed)):
                return compare_set(level_graph, removed, self._greedy)
            return self._greedy(level_graph)
        return compare_set(level_graph, removed, self._approximate)


def solve_composed(
    g: WeightedGraph,
    selector: SelectorKind,
    scope: ScopeKind,
    deadline: Optional[float] = None,
) -> SolveResult:
    """Algorithms A4/A5/A7/A8.

    Whole-subgraph variants also weigh the greedy answer on the full input
    and keep it when strictly heavier, so they never fall below A3/A6.
    """
    pipeline = ComposedPipeline(selector, scope, Deadline(deadline))
    start = time.perf_counter()
    solution = pipeline.solve(g)
    if pipeline.scope is ScopeKind.WHOLE and not meets_base_conditions(g):
        whole = pipeline._greedy(g)
        if whole.total_weight > solution.total_weight:
            solution = whole
    runtime = time.perf_counter() - start
    logger.debug(
        "%s solved %r: weight %s after %d greedy calls, %d memo hits",
        pipeline.algorithm, g, solution.total_weight, pipeline.greedy_calls, pipeline.memo.hits,
    )
    return verified_result(pipeline.algorithm, g, solution, runtime, pipeline.trace)
