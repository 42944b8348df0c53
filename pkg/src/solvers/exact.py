"""
Exact solvers: Algorithm A1 (MWIS) and Algorithm A2 (all maximal independent sets).

Both run the same two phases. Phase I (``decompose``) removes nodes until the
residual graph is a disjoint union of CUSs. Phase II re-inserts the removed
nodes in reverse order. At each level the subgraph being rebuilt is the
removed node plus the components it touches; its answer is the better of

  * the Preliminary Set: the answer without the removed node, assembled from
    component answers (memo, then base case, then recursion), and
  * the Compare Set: the removed node plus the answer on its non-neighbours
    inside that subgraph.

Answers are memoized by node set. Every graph a single call touches is an
induced subgraph of the input, so one table serves the whole call, including
the recursive solves made for Compare Sets.
"""
from __future__ import annotations

import itertools
import logging
import time
from typing import Callable, Generic, List, Optional, Sequence, Tuple, TypeVar

from src.errors import DisconnectedGraphError, NotCusError, OverlappingComponentsError
from src.graph.core import (
    IndependentSet,
    NodeId,
    NodeSet,
    WeightedGraph,
    complement_nonneighbors,
    complement_remove,
    connected_components,
    induced_subgraph,
    is_independent,
    is_maximal_independent,
)
from src.graph.decomposition import component_is_cus, cus_kind, decompose, meets_base_conditions
from src.solvers.results import (
    AMISLResult,
    Deadline,
    LevelRecord,
    MemoTable,
    MISCollection,
    SolveResult,
)

logger = logging.getLogger(__name__)

T = TypeVar("T")

PRELIMINARY = "preliminary"
COMPARE = "compare"


# --- base cases ---

def _cus_sides(g: WeightedGraph) -> List[NodeSet]:
    """The maximal independent sets of a graph known to be a connected CUS."""
    nodes = g.nodes
    if len(nodes) == 1:
        return [nodes]
    if len(nodes) == 2:
        return [frozenset({v}) for v in sorted(nodes)]
    center = next(v for v in sorted(nodes) if len(g.adjacency[v]) == len(nodes) - 1)
    return [frozenset({center}), nodes - {center}]


def _require_cus(g: WeightedGraph) -> None:
    try:
        kind = cus_kind(g)
    except DisconnectedGraphError as exc:
        raise NotCusError(f"{g!r} has more than one component") from exc
    if kind is None:
        raise NotCusError(f"{g!r} is not an isolated node, an edge or a star")


def _heavier_side(g: WeightedGraph) -> IndependentSet:
    sides = [IndependentSet.of(g, s) for s in _cus_sides(g)]
    return min(sides, key=lambda s: (-s.total_weight, min(s.members)))


def cus_mwis(g: WeightedGraph) -> IndependentSet:
    """MWIS of a single CUS by one comparison.

    Ties go to the side holding the smaller minimum id.
    """
    _require_cus(g)
    return _heavier_side(g)


def cus_amis(g: WeightedGraph) -> MISCollection:
    _require_cus(g)
    return MISCollection(frozenset(_cus_sides(g)))


# --- combining disjoint components ---

def combine_components(per_component: Sequence[IndependentSet]) -> IndependentSet:
    """Union of answers on pairwise disjoint components."""
    if len(per_component) == 1:
        return per_component[0]
    members: set = set()
    total = IndependentSet.empty().total_weight
    for part in per_component:
        if members & part.members:
            raise OverlappingComponentsError(
                f"Components share nodes {sorted(members & part.members)}"
            )
        members |= part.members
        total += part.total_weight
    return IndependentSet(frozenset(members), total)


def combine_amis(per_component: Sequence[MISCollection]) -> MISCollection:
    """Cross product: one member set chosen from each component's family."""
    if len(per_component) == 1:
        return per_component[0]
    seen: set = set()
    for family in per_component:
        support = family.support()
        if seen & support:
            raise OverlappingComponentsError(f"Components share nodes {sorted(seen & support)}")
        seen |= support
    if not per_component:
        return MISCollection.empty_graph()
    product = itertools.product(*(family.sets for family in per_component))
    return MISCollection(frozenset(frozenset().union(*choice) for choice in product))


def special_union(a: MISCollection, b: MISCollection) -> MISCollection:
    """Union of two families with every set nested inside another removed."""
    merged = sorted(a.sets | b.sets, key=len, reverse=True)
    kept: List[NodeSet] = []
    for candidate in merged:
        if not any(candidate < other for other in kept):
            kept.append(candidate)
    return MISCollection(frozenset(kept))


# --- compare sets ---

def compare_set(
    g_l: WeightedGraph,
    l: NodeId,
    sub_solver: Callable[[WeightedGraph], IndependentSet],
) -> IndependentSet:
    """{l} plus the MWIS of l's non-neighbours in g_l.

    A non-neighbourhood that is already a union of CUSs is solved directly;
    anything else goes to ``sub_solver``.
    """
    weight = g_l.weight(l)
    rest = complement_nonneighbors(g_l, l)
    if meets_base_conditions(rest):
        inner = combine_components(
            [_heavier_side(induced_subgraph(rest, comp)) for comp in connected_components(rest)]
        )
    else:
        inner = sub_solver(rest)
    return inner.with_node(l, weight)


def compare_family(
    g_l: WeightedGraph,
    l: NodeId,
    sub_solver: Callable[[WeightedGraph], MISCollection],
) -> MISCollection:
    """Every maximal independent set of g_l that contains l."""
    g_l._require(l)
    rest = complement_nonneighbors(g_l, l)
    if meets_base_conditions(rest):
        inner = combine_amis(
            [MISCollection(frozenset(_cus_sides(induced_subgraph(rest, comp))))
             for comp in connected_components(rest)]
        )
    else:
        inner = sub_solver(rest)
    return MISCollection(frozenset(s | {l} for s in inner.sets))


# --- the two-phase pipeline ---

class NodeAddingPipeline(Generic[T]):
    """Decompose, then rebuild level by level with memoized component answers.

    Subclasses supply the answer type through the hooks below. One instance
    serves one top-level call.
    """

    algorithm = ""

    def __init__(self, deadline: Optional[Deadline] = None):
        self.deadline = deadline or Deadline()
        self.memo: MemoTable[T] = MemoTable()
        self.trace: List[LevelRecord] = []
        self._depth = 0

    # hooks
    def empty(self) -> T:
        raise NotImplementedError

    def solve_cus(self, g: WeightedGraph) -> T:
        raise NotImplementedError

    def combine(self, parts: Sequence[T]) -> T:
        raise NotImplementedError

    def compare(self, level_graph: WeightedGraph, removed: NodeId) -> T:
        raise NotImplementedError

    def merge(self, preliminary: T, compare: T) -> Tuple[T, str]:
        raise NotImplementedError

    def improve_compare(
        self, level_graph: WeightedGraph, removed: NodeId, preliminary: T, compare: T
    ) -> T:
        return compare

    def record_level(self, removed, level_nodes, preliminary: T, compare: T, chosen: str) -> None:
        pass

    # driver
    def solve(self, g: WeightedGraph) -> T:
        if g.is_empty():
            return self.empty()
        cached = self.memo.get(g.key)
        if cached is not None:
            return cached

        self._depth += 1
        try:
            answer = self._solve_fresh(g)
        finally:
            self._depth -= 1
        return self.memo.put(g.key, answer)

    def _solve_fresh(self, g: WeightedGraph) -> T:
        sd = decompose(g)
        logger.debug(
            "%s depth %d: |V|=%d |E|=%d, %d removals",
            self.algorithm, self._depth, g.number_of_nodes, g.number_of_edges, len(sd),
        )
        graphs = sd.level_graphs(g)
        for k in reversed(range(len(sd))):
            self.deadline.check()
            entry = sd.entries[k]
            removed = entry.removed
            touching = graphs[k].adjacency[removed]
            adjacent = [comp for comp in entry.components if comp & touching]
            level_nodes = frozenset({removed}).union(*adjacent)
            if self.memo.get(level_nodes) is not None:
                continue

            preliminary = self.combine([self._component(g, comp) for comp in adjacent])
            level_graph = induced_subgraph(g, level_nodes)
            compare = self.compare(level_graph, removed)
            compare = self.improve_compare(level_graph, removed, preliminary, compare)
            chosen, label = self.merge(preliminary, compare)
            self.memo.put(level_nodes, chosen)
            self.record_level(removed, level_nodes, preliminary, compare, label)

        return self.combine([self._component(g, comp) for comp in connected_components(g)])

    def _component(self, g: WeightedGraph, comp: NodeSet) -> T:
        cached = self.memo.get(comp)
        if cached is not None:
            return cached
        sub = induced_subgraph(g, comp)
        if component_is_cus(g, comp):
            return self.memo.put(comp, self.solve_cus(sub))
        return self.solve(sub)


class MwisPipeline(NodeAddingPipeline[IndependentSet]):
    algorithm = "A1"

    def empty(self) -> IndependentSet:
        return IndependentSet.empty()

    def solve_cus(self, g: WeightedGraph) -> IndependentSet:
        return _heavier_side(g)

    def combine(self, parts: Sequence[IndependentSet]) -> IndependentSet:
        return combine_components(parts)

    def compare(self, level_graph: WeightedGraph, removed: NodeId) -> IndependentSet:
        return compare_set(level_graph, removed, self.solve)

    def merge(self, preliminary: IndependentSet, compare: IndependentSet) -> Tuple[IndependentSet, str]:
        if compare.total_weight > preliminary.total_weight:
            return compare, COMPARE
        return preliminary, PRELIMINARY

    def record_level(self, removed, level_nodes, preliminary, compare, chosen) -> None:
        logger.debug(
            "level %s: preliminary %s vs compare %s -> %s",
            removed, preliminary.total_weight, compare.total_weight, chosen,
        )
        if self._depth == 1:
            self.trace.append(LevelRecord(removed, level_nodes, preliminary, compare, chosen))


class AmisPipeline(NodeAddingPipeline[MISCollection]):
    algorithm = "A2"

    def empty(self) -> MISCollection:
        return MISCollection.empty_graph()

    def solve_cus(self, g: WeightedGraph) -> MISCollection:
        return MISCollection(frozenset(_cus_sides(g)))

    def combine(self, parts: Sequence[MISCollection]) -> MISCollection:
        return combine_amis(parts)

    def compare(self, level_graph: WeightedGraph, removed: NodeId) -> MISCollection:
        return compare_family(level_graph, removed, self.solve)

    def merge(self, preliminary: MISCollection, compare: MISCollection) -> Tuple[MISCollection, str]:
        return special_union(preliminary, compare), "union"


# --- public entry points ---

def verified_result(
    algorithm: str,
    g: WeightedGraph,
    solution: IndependentSet,
    runtime: float,
    trace: Sequence[LevelRecord] = (),
) -> SolveResult:
    return SolveResult(
        algorithm=algorithm,
        solution=solution,
        runtime=runtime,
        verified_independent=is_independent(g, solution.members),
        verified_maximal=is_maximal_independent(g, solution.members),
        trace=tuple(trace),
    )


def solve_mwis(g: WeightedGraph, deadline: Optional[float] = None) -> SolveResult:
    """Algorithm A1: exact maximum weight independent set."""
    pipeline = MwisPipeline(Deadline(deadline))
    start = time.perf_counter()
    solution = pipeline.solve(g)
    runtime = time.perf_counter() - start
    logger.debug(
        "A1 solved %r: weight %s, memo size %d, %d memo hits",
        g, solution.total_weight, len(pipeline.memo), pipeline.memo.hits,
    )
    return verified_result("A1", g, solution, runtime, pipeline.trace)


def solve_amisl(g: WeightedGraph, deadline: Optional[float] = None) -> AMISLResult:
    """Algorithm A2: every maximal independent set, plus the heaviest one."""
    pipeline = AmisPipeline(Deadline(deadline))
    start = time.perf_counter()
    collection = pipeline.solve(g)
    best = collection.best(g)
    runtime = time.perf_counter() - start
    logger.debug("A2 listed %d maximal sets of %r, %d memo hits", len(collection), g, pipeline.memo.hits)
    return AMISLResult(collection=collection, best=best, runtime=runtime)


def solve_amisl_mwis(g: WeightedGraph, deadline: Optional[float] = None) -> SolveResult:
    result = solve_amisl(g, deadline)
    return verified_result("A2", g, result.best, result.runtime)


# --- decomposition-free reference recursions ---

def _pivot(g: WeightedGraph) -> NodeId:
    return min(g.nodes, key=lambda v: (-len(g.adjacency[v]), v))


def mwis_structure(g: WeightedGraph) -> IndependentSet:
    """MWIS(G) = max(MWIS(G - v), {v} + MWIS(non-neighbours of v)) on a max-degree pivot."""
    memo: MemoTable[IndependentSet] = MemoTable()

    def go(h: WeightedGraph) -> IndependentSet:
        cached = memo.get(h.key)
        if cached is not None:
            return cached
        if h.number_of_edges == 0:
            return memo.put(h.key, IndependentSet.of(h, h.nodes))
        v = _pivot(h)
        without = go(complement_remove(h, v))
        with_v = go(complement_nonneighbors(h, v)).with_node(v, h.weight(v))
        return memo.put(h.key, with_v if with_v.total_weight > without.total_weight else without)

    return go(g)


def amisl_structure(g: WeightedGraph) -> MISCollection:
    memo: MemoTable[MISCollection] = MemoTable()

    def go(h: WeightedGraph) -> MISCollection:
        cached = memo.get(h.key)
        if cached is not None:
            return cached
        if h.number_of_edges == 0:
            return memo.put(h.key, MISCollection(frozenset({h.nodes})))
        v = _pivot(h)
        without = go(complement_remove(h, v))
        with_v = MISCollection(frozenset(s | {v} for s in go(complement_nonneighbors(h, v)).sets))
        return memo.put(h.key, special_union(without, with_v))

    return go(g)
