"""Seeded random conflict graphs: uniform weights, uniformly shuffled edges."""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from decimal import Decimal
from typing import List, Tuple

import numpy as np

from src.errors import GeneratorSpecError, InvalidDensityError, InvalidWeightRangeError
from src.graph.core import WeightedGraph, build_graph
from src.utils.suite_config import SuiteConfig

WEIGHT_FLOOR = Decimal("0.000001")


@dataclass(frozen=True)
class GeneratorSpec:
    node_count: int
    density: float
    weight_low: float = 0.1
    weight_high: float = 100.0
    seed: int = 0

    def __post_init__(self):
        if isinstance(self.node_count, bool) or not isinstance(self.node_count, int) or self.node_count <= 0:
            raise GeneratorSpecError(f"node_count must be a positive integer, got {self.node_count!r}")
        if not 0.0 <= float(self.density) <= 1.0:
            raise InvalidDensityError(f"density must lie in [0, 1], got {self.density}")
        if float(self.weight_low) <= 0 or float(self.weight_low) > float(self.weight_high):
            raise InvalidWeightRangeError(
                f"need 0 < weight_low <= weight_high, got [{self.weight_low}, {self.weight_high}]"
            )
        if not 0 <= int(self.seed) < 2**64:
            raise GeneratorSpecError(f"seed must be a 64-bit unsigned integer, got {self.seed}")

    @property
    def edge_count(self) -> int:
        return target_edge_count(self.node_count, self.density)


def pair_count(n: int) -> int:
    return n * (n - 1) // 2


def target_edge_count(n: int, density: float) -> int:
    """density * C(n, 2) rounded half up."""
    return math.floor(float(density) * pair_count(n) + 0.5)


def generate_graph(spec: GeneratorSpec) -> WeightedGraph:
    """Nodes 0..n-1; the same spec always yields the same graph."""
    rng = np.random.default_rng(int(spec.seed))
    n = spec.node_count
    raw = rng.uniform(float(spec.weight_low), float(spec.weight_high), size=n)
    weights = [max(Decimal(f"{x:.6f}"), WEIGHT_FLOOR) for x in raw]

    pairs = list(itertools.combinations(range(n), 2))
    picked = rng.permutation(len(pairs))[: spec.edge_count] if pairs else []
    edges = [pairs[int(i)] for i in picked]
    return build_graph([(v, weights[v]) for v in range(n)], edges)


def benchmark_suite_specs(config: SuiteConfig) -> List[Tuple[int, GeneratorSpec]]:
    """One spec per suite entry with density = edges / C(n, 2) and seed = base_seed + test id."""
    specs = []
    for entry in config.entries:
        pairs = pair_count(entry.nodes)
        specs.append((
            entry.test_id,
            GeneratorSpec(
                node_count=entry.nodes,
                density=entry.edges / pairs if pairs else 0.0,
                weight_low=config.weight_low,
                weight_high=config.weight_high,
                seed=config.base_seed + entry.test_id,
            ),
        ))
    return specs
