"""Brute-force references for small graphs.

Two unrelated code paths: a vectorised scan over every node subset for the
optimum, and an include/exclude branch for the maximal sets.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, List, Optional

import numpy as np

from src.errors import TooLargeError
from src.graph.core import IndependentSet, WeightedGraph
from src.solvers.results import MISCollection


@dataclass(frozen=True)
class OracleConfig:
    max_nodes: int = 20

    def __post_init__(self):
        if self.max_nodes <= 0:
            raise ValueError(f"max_nodes must be positive, got {self.max_nodes}")


def _guard(g: WeightedGraph, cfg: OracleConfig) -> None:
    if g.number_of_nodes > cfg.max_nodes:
        raise TooLargeError(
            f"Oracle refuses {g.number_of_nodes} nodes (max_nodes={cfg.max_nodes})"
        )


def _neighbor_masks(g: WeightedGraph, order: List[int]) -> List[int]:
    index = {v: i for i, v in enumerate(order)}
    return [sum(1 << index[u] for u in g.adjacency[v]) for v in order]


def oracle_mwis(g: WeightedGraph, cfg: Optional[OracleConfig] = None) -> IndependentSet:
    """Heaviest independent set by scanning all 2^n subsets.

    Float sums shortlist the candidates, which are then compared exactly.
    Ties go to the lexicographically smallest sorted member list.
    """
    cfg = cfg or OracleConfig()
    _guard(g, cfg)
    if g.is_empty():
        return IndependentSet.empty()

    order = sorted(g.nodes)
    n = len(order)
    nbr = _neighbor_masks(g, order)
    size = 1 << n
    masks = np.arange(size, dtype=np.int64)
    independent = np.zeros(size, dtype=bool)
    independent[0] = True
    totals = np.zeros(size, dtype=np.float64)
    for bit, v in enumerate(order):
        lo, hi = 1 << bit, 1 << (bit + 1)
        independent[lo:hi] = independent[:lo] & ((masks[:lo] & nbr[bit]) == 0)
        totals[lo:hi] = totals[:lo] + float(g.weights[v])

    totals[~independent] = -np.inf
    top = totals.max()
    shortlist = np.flatnonzero(totals >= top - 1e-6 * max(1.0, abs(top)))

    candidates = []
    for mask in shortlist.tolist():
        members = [order[i] for i in range(n) if mask >> i & 1]
        candidates.append(IndependentSet.of(g, members))
    return min(candidates, key=lambda s: (-s.total_weight, s.sorted_members()))


def oracle_amis(g: WeightedGraph, cfg: Optional[OracleConfig] = None) -> MISCollection:
    """Every maximal independent set, by deciding each node in id order."""
    cfg = cfg or OracleConfig()
    _guard(g, cfg)
    order = sorted(g.nodes)
    n = len(order)
    nbr = _neighbor_masks(g, order)

    def is_maximal(chosen: int) -> bool:
        return all(chosen >> j & 1 or nbr[j] & chosen for j in range(n))

    def branch(i: int, chosen: int) -> Iterator[int]:
        if i == n:
            if is_maximal(chosen):
                yield chosen
            return
        free = not nbr[i] & chosen
        if free:
            yield from branch(i + 1, chosen | 1 << i)
        # leaving node i out needs a chosen neighbour, now or later
        if not free or nbr[i] >> (i + 1):
            yield from branch(i + 1, chosen)

    found = [frozenset(order[j] for j in range(n) if mask >> j & 1) for mask in branch(0, 0)]
    return MISCollection(frozenset(found))
