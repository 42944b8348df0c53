"""
Node removal phase: break cycles, then shorten paths, until every component
of the residual graph is a connected unit substructure (CUS).

A CUS is an isolated node, a single edge, or a tree of diameter at most 2
(a star). Removals are recorded, in order, in a SubgraphsDictionary.

All tie-breaks use the smallest node id so that a given graph always
decomposes the same way.
"""
from __future__ import annotations

import logging
from collections import Counter
from dataclasses import dataclass
from enum import Enum
from typing import Dict, Iterable, Iterator, List, Optional, Tuple

import networkx as nx

from src.errors import (
    AcyclicGraphError,
    DisconnectedGraphError,
    EmptyGraphError,
    HasCycleError,
    NotApplicableError,
)
from src.graph.core import (
    NodeId,
    NodeSet,
    WeightedGraph,
    complement_remove,
    connected_components,
    induced_subgraph,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Cycle:
    nodes: Tuple[NodeId, ...]

    def __len__(self) -> int:
        return len(self.nodes)

    def edges(self) -> List[Tuple[NodeId, NodeId]]:
        n = self.nodes
        return [(n[i], n[(i + 1) % len(n)]) for i in range(len(n))]


class CusKind(str, Enum):
    ISOLATED_NODE = "IsolatedNode"
    CONNECTED_PAIR = "ConnectedPair"
    SHALLOW_TREE = "ShallowTree"


@dataclass(frozen=True)
class SdEntry:
    removed: NodeId
    components: Tuple[NodeSet, ...]


@dataclass(frozen=True)
class SubgraphsDictionary:
    """Removed nodes in removal order, each with the components left behind."""

    entries: Tuple[SdEntry, ...] = ()

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[SdEntry]:
        return iter(self.entries)

    def removed_nodes(self) -> List[NodeId]:
        return [e.removed for e in self.entries]

    def level_graphs(self, g: WeightedGraph) -> List[WeightedGraph]:
        """Graph in force just before each removal (level k sees G_k)."""
        graphs = []
        current = g
        for entry in self.entries:
            graphs.append(current)
            current = complement_remove(current, entry.removed)
        return graphs

    def residual(self, g: WeightedGraph) -> WeightedGraph:
        return induced_subgraph(g, g.nodes - set(self.removed_nodes()))

    def as_dict(self) -> Dict[NodeId, List[List[NodeId]]]:
        return {e.removed: [sorted(c) for c in e.components] for e in self.entries}


# --- cycle basis ---

def cycle_basis(g: WeightedGraph) -> List[Cycle]:
    """Fundamental cycle basis from networkx, one spanning tree per component.

    Each tree is rooted at the component's smallest id and the networkx view
    lists nodes and edges in ascending order, so the basis is deterministic.
    """
    G = g.to_networkx()
    cycles: List[Cycle] = []
    for comp in sorted(connected_components(g), key=min):
        if len(comp) < 3:
            continue
        cycles.extend(Cycle(tuple(c)) for c in nx.cycle_basis(G.subgraph(comp), root=min(comp)))
    return cycles


def cyclomatic_number(g: WeightedGraph) -> int:
    return g.number_of_edges - g.number_of_nodes + len(connected_components(g))


def cycle_counts(g: WeightedGraph) -> Dict[NodeId, int]:
    """Number of basis cycles each node lies on (zero for nodes on none)."""
    counts = Counter(v for cycle in cycle_basis(g) for v in cycle.nodes)
    return {v: counts.get(v, 0) for v in sorted(g.nodes)}


def max_cycle_node(g: WeightedGraph) -> NodeId:
    counts = cycle_counts(g)
    best = max(counts.values(), default=0)
    if best == 0:
        raise AcyclicGraphError("Graph has no cycle to break")
    return min(v for v, c in counts.items() if c == best)


# --- diameter and middle node ---

def diameter(g: WeightedGraph) -> int:
    """Maximum eccentricity, from single-source BFS lengths out of every node."""
    if g.is_empty():
        raise EmptyGraphError("Diameter of the empty graph is undefined")
    G = g.to_networkx()
    if not nx.is_connected(G):
        raise DisconnectedGraphError("Diameter of a disconnected graph is infinite")
    return max(max(nx.single_source_shortest_path_length(G, v).values()) for v in sorted(g.nodes))


def _component_diameters(g: WeightedGraph) -> List[Tuple[int, NodeSet]]:
    return [(diameter(induced_subgraph(g, comp)), comp) for comp in connected_components(g)]


def middle_node(g: WeightedGraph) -> NodeId:
    """Centre of the longest path in the widest component of a forest.

    Leaves are stripped round by round; the last survivor is returned, or the
    smaller of the last two.
    """
    if g.is_empty():
        raise NotApplicableError("Empty graph has no middle node")
    if not nx.is_forest(g.to_networkx()):
        raise HasCycleError("Middle node is only defined on a forest")

    widths = _component_diameters(g)
    width, target = max(widths, key=lambda item: (item[0], -min(item[1])))
    if width < 3:
        raise NotApplicableError(f"Every component has diameter <= 2 (max {width})")

    remaining = set(target)
    degree = {v: len(g.adjacency[v] & remaining) for v in remaining}
    while len(remaining) > 2:
        leaves = [v for v in remaining if degree[v] <= 1]
        for leaf in leaves:
            remaining.discard(leaf)
        for leaf in leaves:
            for nbr in g.adjacency[leaf] & remaining:
                degree[nbr] -= 1
    return min(remaining)


# --- base-case recognition ---

def cus_kind(g: WeightedGraph) -> Optional[CusKind]:
    """Kind of CUS for a connected graph, or None when it is not one."""
    n = g.number_of_nodes
    if n == 0:
        return None
    if not nx.is_connected(g.to_networkx()):
        raise DisconnectedGraphError("CUS test expects a single component")
    if n == 1:
        return CusKind.ISOLATED_NODE
    if n == 2:
        return CusKind.CONNECTED_PAIR
    # a tree of diameter <= 2 on 3+ nodes is exactly a star
    if g.number_of_edges == n - 1 and any(len(nbrs) == n - 1 for nbrs in g.adjacency.values()):
        return CusKind.SHALLOW_TREE
    return None


def is_cus(g: WeightedGraph) -> bool:
    return cus_kind(g) is not None


def component_is_cus(g: WeightedGraph, comp: Iterable[NodeId]) -> bool:
    """CUS test for a node set already known to be a connected component of g."""
    comp = frozenset(comp)
    n = len(comp)
    if n <= 2:
        return n > 0
    inner = [len(g.adjacency[v] & comp) for v in comp]
    return sum(inner) // 2 == n - 1 and max(inner) == n - 1


def meets_base_conditions(g: WeightedGraph) -> bool:
    """True when every component is a CUS (the empty graph qualifies)."""
    return all(component_is_cus(g, comp) for comp in connected_components(g))


# --- phase I ---

def decompose(g: WeightedGraph) -> SubgraphsDictionary:
    """Remove nodes one at a time until every component is a CUS.

    Cycles are broken first (node on the most basis cycles), then paths
    longer than two edges are cut at their middle node.
    """
    entries: List[SdEntry] = []
    current = g
    while not meets_base_conditions(current):
        if cyclomatic_number(current) > 0:
            removed = max_cycle_node(current)
            step = "cycle"
        else:
            removed = middle_node(current)
            step = "path"
        current = complement_remove(current, removed)
        components = tuple(connected_components(current))
        entries.append(SdEntry(removed, components))
        logger.debug(
            "decompose: removed %s (%s step), %d components left", removed, step, len(components)
        )
    return SubgraphsDictionary(tuple(entries))


def replay(g: WeightedGraph, sd: SubgraphsDictionary) -> List[WeightedGraph]:
    """Re-insert removed nodes in reverse order, returning each rebuilt graph.

    The last element equals ``g``.
    """
    nodes = set(sd.residual(g).nodes)
    rebuilt = []
    for entry in reversed(sd.entries):
        nodes.add(entry.removed)
        rebuilt.append(induced_subgraph(g, nodes))
    return rebuilt

