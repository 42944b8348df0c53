from __future__ import annotations

from typing import Dict, List, Optional

import pandas as pd

from src.graph.core import (
    IndependentSet,
    WeightedGraph,
    is_independent,
    is_maximal_independent,
    WEIGHT_TOLERANCE,
    weights_close,
)
from src.solvers.results import MISCollection


def solution_checks(
    g: WeightedGraph,
    solution: IndependentSet,
    optimum: Optional[IndependentSet] = None,
    exact: bool = False,
    tol: float = WEIGHT_TOLERANCE,
) -> List[str]:
    """
    Check one solver answer against its graph.

    Returns list of human-readable error strings. Empty list means pass.
    With ``optimum`` given, exact answers must match its weight and
    approximate answers must not exceed it, both up to relative tolerance
    ``tol``.
    """
    errors: List[str] = []

    unknown = solution.members - g.nodes
    if unknown:
        return [f"Solution names nodes outside the graph: {sorted(unknown)[:10]}"]

    if not is_independent(g, solution.members):
        clashes = sorted((u, v) for u, v in g.edges if u in solution.members and v in solution.members)
        errors.append(f"Solution is not independent, adjacent pairs: {clashes[:10]}")
    elif not is_maximal_independent(g, solution.members):
        errors.append("Solution is independent but not maximal")

    if g.total_weight(solution.members) != solution.total_weight:
        errors.append(
            f"Reported weight {solution.total_weight} differs from member weight "
            f"{g.total_weight(solution.members)}"
        )

    if optimum is not None:
        if exact and not weights_close(solution.total_weight, optimum.total_weight, tol):
            errors.append(f"Weight {solution.total_weight} != optimum {optimum.total_weight}")
        if solution.total_weight > optimum.total_weight and not weights_close(
            solution.total_weight, optimum.total_weight, tol
        ):
            errors.append(f"Weight {solution.total_weight} exceeds optimum {optimum.total_weight}")
    return errors


def collection_checks(
    g: WeightedGraph,
    collection: MISCollection,
    reference: Optional[MISCollection] = None,
) -> List[str]:
    """Every member maximal, no nesting, and (optionally) equal to a reference family."""
    errors: List[str] = []
    bad = [sorted(s) for s in collection if not is_maximal_independent(g, s)]
    if bad:
        errors.append(f"{len(bad)} member sets are not maximal independent sets, e.g. {bad[0]}")
    if not collection.is_antichain():
        errors.append("Collection contains nested sets")
    if reference is not None and collection.sets != reference.sets:
        missing = reference.sets - collection.sets
        extra = collection.sets - reference.sets
        errors.append(
            f"Collection differs from reference: {len(missing)} missing, {len(extra)} unexpected"
        )
    return errors


def summarize(frame: pd.DataFrame) -> Dict[str, object]:
    """
    Small summary of a benchmark frame, useful for logs.
    Keys: graphs, algorithms, max_nodes, max_edges, timeouts
    """
    weight_cols = [c for c in frame.columns if c.endswith(" Weight Sum")]
    return {
        "graphs": int(len(frame)),
        "algorithms": [c.split(" ", 1)[0] for c in weight_cols],
        "max_nodes": int(frame["# of Nodes"].max()) if len(frame) else 0,
        "max_edges": int(frame["# of Edges"].max()) if len(frame) else 0,
        "timeouts": int(frame[weight_cols].isna().sum().sum()) if weight_cols else 0,
    }
