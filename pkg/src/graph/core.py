"""
Immutable node-weighted graphs and the subgraph operators every solver uses.

Node ids are non-negative integers and are never renumbered: an induced
subgraph keeps the ids of its parent, so any induced subgraph of a graph is
identified by its node set alone.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from decimal import Decimal, InvalidOperation
from functools import cached_property
from types import MappingProxyType
from typing import Dict, FrozenSet, Iterable, Iterator, List, Mapping, Sequence, Tuple, Union

import networkx as nx

from src.errors import (
    DuplicateEdgeError,
    DuplicateNodeError,
    GraphError,
    NonPositiveWeightError,
    SelfLoopError,
    UnknownEndpointError,
    UnknownNodeError,
)

NodeId = int
Weight = Decimal
WeightLike = Union[Decimal, int, float, str]
NodeSet = FrozenSet[NodeId]

ZERO = Decimal(0)

# Float comparisons of summed weights (exact Decimal totals compare exactly).
WEIGHT_TOLERANCE = 1e-9


def to_weight(value: WeightLike) -> Decimal:
    """Convert a user-supplied weight into an exact Decimal.

    Floats go through their shortest repr so that 1.1 becomes Decimal('1.1').
    """
    if isinstance(value, bool):
        raise NonPositiveWeightError(f"Weight must be numeric, got {value!r}")
    try:
        if isinstance(value, Decimal):
            w = value
        elif isinstance(value, float):
            if not math.isfinite(value):
                raise NonPositiveWeightError(f"Weight must be finite, got {value!r}")
            w = Decimal(repr(value))
        else:
            w = Decimal(value)
    except (InvalidOperation, TypeError, ValueError) as exc:
        raise NonPositiveWeightError(f"Weight is not a number: {value!r}") from exc
    if not w.is_finite() or w <= 0:
        raise NonPositiveWeightError(f"Weight must be positive and finite, got {value!r}")
    return w


def weights_close(a: WeightLike, b: WeightLike, tol: float = WEIGHT_TOLERANCE) -> bool:
    return abs(float(a) - float(b)) <= tol * max(1.0, abs(float(a)), abs(float(b)))


class WeightedGraph:
    """Simple undirected graph with positive node weights.

    Build instances with :func:`build_graph`; the constructor trusts its input.
    """

    def __init__(self, weights: Mapping[NodeId, Decimal], adjacency: Mapping[NodeId, FrozenSet[NodeId]]):
        self._weights = MappingProxyType(dict(weights))
        self._adjacency = MappingProxyType(dict(adjacency))

    # --- basic accessors ---

    @property
    def weights(self) -> Mapping[NodeId, Decimal]:
        return self._weights

    @property
    def adjacency(self) -> Mapping[NodeId, FrozenSet[NodeId]]:
        return self._adjacency

    @cached_property
    def nodes(self) -> NodeSet:
        return frozenset(self._weights)

    @cached_property
    def edges(self) -> FrozenSet[Tuple[NodeId, NodeId]]:
        return frozenset((u, v) for u, nbrs in self._adjacency.items() for v in nbrs if u < v)

    @cached_property
    def number_of_edges(self) -> int:
        return sum(len(nbrs) for nbrs in self._adjacency.values()) // 2

    @property
    def number_of_nodes(self) -> int:
        return len(self._weights)

    def __len__(self) -> int:
        return len(self._weights)

    def __contains__(self, node: object) -> bool:
        return node in self._weights

    def __iter__(self) -> Iterator[NodeId]:
        return iter(sorted(self._weights))

    def is_empty(self) -> bool:
        return not self._weights

    def weight(self, node: NodeId) -> Decimal:
        self._require(node)
        return self._weights[node]

    def neighbors(self, node: NodeId) -> FrozenSet[NodeId]:
        self._require(node)
        return self._adjacency[node]

    def closed_neighborhood(self, node: NodeId) -> FrozenSet[NodeId]:
        return self.neighbors(node) | {node}

    def degree(self, node: NodeId) -> int:
        return len(self.neighbors(node))

    def total_weight(self, nodes: Iterable[NodeId]) -> Decimal:
        return sum((self._weights[v] for v in nodes), ZERO)

    def sorted_edges(self) -> List[Tuple[NodeId, NodeId]]:
        return sorted(self.edges)

    @cached_property
    def key(self) -> Tuple[NodeId, ...]:
        """Canonical memo key: the sorted node ids."""
        return tuple(sorted(self._weights))

    def to_networkx(self) -> nx.Graph:
        """Frozen networkx view with a ``weight`` node attribute (float)."""
        return self._nx

    @cached_property
    def _nx(self) -> nx.Graph:
        G = nx.Graph()
        for v in sorted(self._weights):
            G.add_node(v, weight=float(self._weights[v]))
        G.add_edges_from(sorted(self.edges))
        return nx.freeze(G)

    def _require(self, node: NodeId) -> None:
        if node not in self._weights:
            raise UnknownNodeError(f"Node {node!r} is not in the graph")

    def _require_all(self, nodes: Iterable[NodeId]) -> FrozenSet[NodeId]:
        s = frozenset(nodes)
        missing = s - self.nodes
        if missing:
            raise UnknownNodeError(f"Nodes not in the graph: {sorted(missing)}")
        return s

    # --- value semantics ---

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, WeightedGraph):
            return NotImplemented
        return dict(self._weights) == dict(other._weights) and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((frozenset(self._weights.items()), self.edges))

    def __reduce__(self):
        return (build_graph, (sorted(self._weights.items()), self.sorted_edges()))

    def __repr__(self) -> str:
        return f"WeightedGraph(|V|={self.number_of_nodes}, |E|={self.number_of_edges})"


@dataclass(frozen=True)
class IndependentSet:
    """A node set together with its exact total weight."""

    members: NodeSet
    total_weight: Decimal

    @classmethod
    def empty(cls) -> "IndependentSet":
        return cls(frozenset(), ZERO)

    @classmethod
    def of(cls, g: WeightedGraph, nodes: Iterable[NodeId]) -> "IndependentSet":
        members = frozenset(nodes)
        return cls(members, g.total_weight(members))

    def with_node(self, node: NodeId, weight: Decimal) -> "IndependentSet":
        return IndependentSet(self.members | {node}, self.total_weight + weight)

    def sorted_members(self) -> List[NodeId]:
        return sorted(self.members)

    def __len__(self) -> int:
        return len(self.members)


# --- construction ---

def build_graph(
    node_weights: Iterable[Tuple[NodeId, WeightLike]],
    edge_list: Iterable[Tuple[NodeId, NodeId]],
) -> WeightedGraph:
    """Validate ids, weights and edges and return an immutable graph."""
    weights: Dict[NodeId, Decimal] = {}
    for node, raw in node_weights:
        if isinstance(node, bool) or not isinstance(node, int) or node < 0:
            raise GraphError(f"Node id must be a non-negative integer, got {node!r}")
        if node in weights:
            raise DuplicateNodeError(f"Node {node} declared more than once")
        weights[node] = to_weight(raw)

    adjacency: Dict[NodeId, set] = {v: set() for v in weights}
    for u, v in edge_list:
        if u == v:
            raise SelfLoopError(f"Self-loop on node {u}")
        for end in (u, v):
            if end not in weights:
                raise UnknownEndpointError(f"Edge ({u}, {v}) references undeclared node {end}")
        if v in adjacency[u]:
            raise DuplicateEdgeError(f"Edge ({u}, {v}) listed more than once")
        adjacency[u].add(v)
        adjacency[v].add(u)

    return WeightedGraph(weights, {v: frozenset(n) for v, n in adjacency.items()})


# --- subgraph operators ---

def induced_subgraph(g: WeightedGraph, s: Iterable[NodeId]) -> WeightedGraph:
    keep = g._require_all(s)
    if keep == g.nodes:
        return g
    adjacency = {v: g.adjacency[v] & keep for v in keep}
    return WeightedGraph({v: g.weights[v] for v in keep}, adjacency)


def complement_remove(g: WeightedGraph, k: NodeId) -> WeightedGraph:
    """C_Ind_G(k): the graph with k and its incident edges removed."""
    g._require(k)
    return induced_subgraph(g, g.nodes - {k})


def complement_nonneighbors(g: WeightedGraph, k: NodeId) -> WeightedGraph:
    """C_Neig_Ind_G(k): the subgraph induced by the non-neighbours of k (k excluded)."""
    return induced_subgraph(g, g.nodes - g.closed_neighborhood(k))


def connected_components(g: WeightedGraph) -> List[NodeSet]:
    """Components as node sets, ordered by smallest member id."""
    if g.is_empty():
        return []
    comps = [frozenset(c) for c in nx.connected_components(g.to_networkx())]
    return sorted(comps, key=min)


# --- independence predicates ---

def is_independent(g: WeightedGraph, s: Iterable[NodeId]) -> bool:
    members = g._require_all(s)
    return all(not (g.adjacency[v] & members) for v in members)


def is_maximal_independent(g: WeightedGraph, s: Iterable[NodeId]) -> bool:
    members = g._require_all(s)
    if not is_independent(g, members):
        return False
    return all(g.adjacency[v] & members for v in g.nodes - members)


def relabel(g: WeightedGraph, mapping: Mapping[NodeId, NodeId]) -> WeightedGraph:
    """Apply a bijection on node ids."""
    images = [mapping[v] for v in g.nodes]
    if len(set(images)) != len(images):
        raise DuplicateNodeError("Relabeling is not injective")
    return build_graph(
        [(mapping[v], w) for v, w in g.weights.items()],
        [(mapping[u], mapping[v]) for u, v in g.edges],
    )


def scale_weights(g: WeightedGraph, factor: WeightLike) -> WeightedGraph:
    c = to_weight(factor)
    return WeightedGraph({v: w * c for v, w in g.weights.items()}, g.adjacency)


def graph_from_sequences(
    weights: Sequence[WeightLike], edges: Sequence[Tuple[NodeId, NodeId]]
) -> WeightedGraph:
    """Shorthand: node i gets weights[i]."""
    return build_graph(list(enumerate(weights)), edges)
