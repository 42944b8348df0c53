"""Result types shared by the exact, greedy and oracle solvers."""
from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Generic, Iterable, Iterator, List, Optional, Tuple, TypeVar

from src.errors import SolveTimeout
from src.graph.core import IndependentSet, NodeId, NodeSet, WeightedGraph

T = TypeVar("T")


def _canonical_key(members: NodeSet) -> Tuple[NodeId, ...]:
    return tuple(sorted(members))


@dataclass(frozen=True)
class MISCollection:
    """A family of node sets, none contained in another."""

    sets: FrozenSet[NodeSet]

    @classmethod
    def of(cls, families: Iterable[Iterable[NodeId]]) -> "MISCollection":
        return cls(frozenset(frozenset(s) for s in families))

    @classmethod
    def empty_graph(cls) -> "MISCollection":
        return cls(frozenset({frozenset()}))

    def __len__(self) -> int:
        return len(self.sets)

    def __iter__(self) -> Iterator[NodeSet]:
        return iter(sorted(self.sets, key=_canonical_key))

    def __contains__(self, members: object) -> bool:
        return frozenset(members) in self.sets  # type: ignore[arg-type]

    def support(self) -> NodeSet:
        return frozenset().union(*self.sets) if self.sets else frozenset()

    def as_lists(self) -> List[List[NodeId]]:
        return [sorted(s) for s in self]

    def is_antichain(self) -> bool:
        items = list(self.sets)
        return not any(a < b for a in items for b in items)

    def best(self, g: WeightedGraph) -> IndependentSet:
        """Heaviest member; ties go to the lexicographically smallest sorted list."""
        if not self.sets:
            return IndependentSet.empty()
        candidates = [IndependentSet.of(g, s) for s in self.sets]
        return min(candidates, key=lambda c: (-c.total_weight, c.sorted_members()))


@dataclass(frozen=True)
class LevelRecord:
    """One node-adding level: which set won and why."""

    removed: NodeId
    level_nodes: NodeSet
    preliminary: IndependentSet
    compare: IndependentSet
    chosen: str  # "preliminary" | "compare"


@dataclass(frozen=True)
class SolveResult:
    algorithm: str
    solution: IndependentSet
    runtime: float
    verified_independent: bool
    verified_maximal: bool
    trace: Tuple[LevelRecord, ...] = ()

    @property
    def total_weight(self):
        return self.solution.total_weight

    def to_record(self) -> Dict[str, object]:
        return {
            "algorithm": self.algorithm,
            "members": self.solution.sorted_members(),
            "total_weight": str(self.solution.total_weight),
            "runtime_seconds": round(self.runtime, 6),
            "verified_independent": self.verified_independent,
            "verified_maximal": self.verified_maximal,
        }


@dataclass(frozen=True)
class AMISLResult:
    collection: MISCollection
    best: IndependentSet
    runtime: float

    def to_record(self) -> Dict[str, object]:
        return {
            "algorithm": "A2",
            "count": len(self.collection),
            "sets": self.collection.as_lists(),
            "best": {
                "members": self.best.sorted_members(),
                "total_weight": str(self.best.total_weight),
            },
            "runtime_seconds": round(self.runtime, 6),
        }


@dataclass
class MemoTable(Generic[T]):
    """Answers keyed by the sorted node ids of the induced subgraph they solve.

    Valid for induced subgraphs of a single root graph only.
    """

    entries: Dict[Tuple[NodeId, ...], T] = field(default_factory=dict)
    hits: int = 0

    def get(self, nodes: Iterable[NodeId]) -> Optional[T]:
        found = self.entries.get(tuple(sorted(nodes)))
        if found is not None:
            self.hits += 1
        return found

    def put(self, nodes: Iterable[NodeId], answer: T) -> T:
        self.entries[tuple(sorted(nodes))] = answer
        return answer

    def __len__(self) -> int:
        return len(self.entries)


class Deadline:
    """Cooperative time budget checked between node-adding levels."""

    def __init__(self, seconds: Optional[float] = None):
        self.seconds = seconds
        self._start = time.monotonic()

    def expired(self) -> bool:
        return self.seconds is not None and time.monotonic() - self._start > self.seconds

    def check(self) -> None:
        if self.expired():
            raise SolveTimeout(f"Solve exceeded its {self.seconds:.1f}s budget")
