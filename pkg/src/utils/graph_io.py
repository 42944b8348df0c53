"""
Plain-text graph files.

    # comment
    p <node_count> <edge_count>
    n <id> <weight>        (node_count lines)
    e <u> <v>              (edge_count lines)

The header is the first non-comment line. Blank lines are ignored.
"""
from __future__ import annotations

from pathlib import Path
from typing import Dict, Iterable, List, Optional, Tuple

from src.errors import (
    BadWeightError,
    CountMismatchError,
    DuplicateNodeError,
    MalformedHeaderError,
    MalformedLineError,
    NonPositiveWeightError,
)
from src.graph.core import WeightedGraph, build_graph, to_weight


def _int_token(token: str, what: str, line_no: int) -> int:
    try:
        value = int(token)
    except ValueError:
        raise MalformedLineError(f"{what} must be an integer, got {token!r}", line_no) from None
    if value < 0:
        raise MalformedLineError(f"{what} must be non-negative, got {value}", line_no)
    return value


def _parse_header(tokens: List[str], line_no: int) -> Tuple[int, int]:
    if len(tokens) != 3 or tokens[0] != "p":
        raise MalformedHeaderError(f"expected 'p <nodes> <edges>', got {' '.join(tokens)!r}", line_no)
    try:
        counts = int(tokens[1]), int(tokens[2])
    except ValueError:
        raise MalformedHeaderError(f"header counts must be integers: {' '.join(tokens)!r}", line_no) from None
    if min(counts) < 0:
        raise MalformedHeaderError(f"header counts must be non-negative: {counts}", line_no)
    return counts


def parse_graph(text: str) -> WeightedGraph:
    header: Optional[Tuple[int, int]] = None
    nodes: Dict[int, object] = {}
    edges: List[Tuple[int, int]] = []

    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if header is None:
            header = _parse_header(tokens, line_no)
            continue

        tag = tokens[0]
        if tag == "p":
            raise MalformedHeaderError("header appears more than once", line_no)
        if tag not in ("n", "e") or len(tokens) != 3:
            raise MalformedLineError(f"expected 'n <id> <weight>' or 'e <u> <v>', got {line!r}", line_no)

        if tag == "n":
            node = _int_token(tokens[1], "node id", line_no)
            if node in nodes:
                raise DuplicateNodeError(f"line {line_no}: node {node} declared more than once")
            try:
                nodes[node] = to_weight(tokens[2])
            except NonPositiveWeightError:
                raise BadWeightError(
                    f"weight of node {node} must be a positive decimal, got {tokens[2]!r}", line_no
                ) from None
        else:
            edges.append((_int_token(tokens[1], "endpoint", line_no), _int_token(tokens[2], "endpoint", line_no)))

    if header is None:
        raise MalformedHeaderError("missing 'p <nodes> <edges>' header")
    node_count, edge_count = header
    if len(nodes) != node_count:
        raise CountMismatchError(f"header declares {node_count} nodes, file has {len(nodes)}")
    if len(edges) != edge_count:
        raise CountMismatchError(f"header declares {edge_count} edges, file has {len(edges)}")
    return build_graph(nodes.items(), edges)


def serialize_graph(g: WeightedGraph, comments: Iterable[str] = ()) -> str:
    """Nodes then edges, each in ascending id order."""
    lines = [f"# {c}" for c in comments]
    lines.append(f"p {g.number_of_nodes} {g.number_of_edges}")
    lines.extend(f"n {v} {format(g.weights[v], 'f')}" for v in sorted(g.nodes))
    lines.extend(f"e {u} {v}" for u, v in g.sorted_edges())
    return "\n".join(lines) + "\n"


def read_graph(path: Path) -> WeightedGraph:
    return parse_graph(Path(path).read_text(encoding="utf-8"))


def write_graph(g: WeightedGraph, path: Path, comments: Iterable[str] = ()) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(serialize_graph(g, comments), encoding="utf-8")
    return path
