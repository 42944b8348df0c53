"""
Benchmark harness: run algorithms over a graph list and tabulate weight sums,
run times and weight error rates against the exact optimum.
"""
from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from decimal import Decimal
from pathlib import Path
from typing import Dict, List, Optional, Sequence, Tuple

import pandas as pd

from src.errors import MissingBaselineError, SolveTimeout, ZeroOptimumError
from src.graph.core import WeightedGraph, is_independent

from .common import load_registry
from .registry import ALL_ALGORITHMS, get_solver

logger = logging.getLogger(__name__)

BASELINES = ("A1", "A2")


def weight_error_rate(w, w_optimum) -> float:
    """(W - W_optimum) / W_optimum as a signed percentage."""
    w, w_optimum = Decimal(w), Decimal(w_optimum)
    if w_optimum <= 0:
        raise ZeroOptimumError(f"Optimum weight must be positive, got {w_optimum}")
    return float((w - w_optimum) / w_optimum * 100)


@dataclass(frozen=True)
class AlgorithmRun:
    total_weight: Optional[Decimal]
    runtime: Optional[float]
    timed_out: bool = False
    verified: bool = False
    error_rate: Optional[float] = None

    @property
    def abs_error_rate(self) -> Optional[float]:
        return None if self.error_rate is None else abs(self.error_rate)


@dataclass
class BenchRecord:
    test_id: int
    edge_count: int
    node_count: int
    density: float
    runs: Dict[str, AlgorithmRun] = field(default_factory=dict)

    @property
    def optimum(self) -> Optional[Decimal]:
        for alg in BASELINES:
            run = self.runs.get(alg)
            if run is not None and run.total_weight is not None:
                return run.total_weight
        return None


def graph_density(g: WeightedGraph) -> float:
    n = g.number_of_nodes
    pairs = n * (n - 1) // 2
    return g.number_of_edges / pairs if pairs else 0.0


def _run_one(g: WeightedGraph, alg_id: str, budget: Optional[float], registry: dict) -> AlgorithmRun:
    solver, meta = get_solver(alg_id, registry)
    try:
        result = solver(g, deadline=budget) if meta.get("deadline") else solver(g)
    except SolveTimeout:
        return AlgorithmRun(total_weight=None, runtime=budget, timed_out=True)
    if budget is not None and result.runtime > budget:
        return AlgorithmRun(total_weight=None, runtime=result.runtime, timed_out=True)
    return AlgorithmRun(
        total_weight=result.solution.total_weight,
        runtime=result.runtime,
        verified=is_independent(g, result.solution.members),
    )


def _with_error_rates(record: BenchRecord) -> BenchRecord:
    optimum = record.optimum
    if optimum is None:
        return record
    for alg, run in record.runs.items():
        if run.total_weight is not None:
            record.runs[alg] = AlgorithmRun(
                total_weight=run.total_weight,
                runtime=run.runtime,
                verified=run.verified,
                error_rate=weight_error_rate(run.total_weight, optimum),
            )
    return record


def run_benchmark(
    graphs: Sequence[WeightedGraph],
    algorithms: Sequence[str],
    per_instance_budget: Optional[float] = None,
    test_ids: Optional[Sequence[int]] = None,
    workers: int = 1,
    error_rates: bool = True,
    registry: Optional[dict] = None,
) -> List[BenchRecord]:
    """Run every algorithm on every graph; one record per graph.

    Timed-out runs keep an empty weight. Records come back ordered by
    (node count, edge count, test id).
    """
    algorithms = [a.upper() for a in algorithms]
    unknown = set(algorithms) - set(ALL_ALGORITHMS)
    if unknown:
        raise ValueError(f"Unknown algorithms: {sorted(unknown)}")
    if error_rates and not set(BASELINES) & set(algorithms):
        raise MissingBaselineError("Error rates need A1 or A2 among the algorithms")
    registry = registry or load_registry()
    test_ids = list(test_ids) if test_ids is not None else list(range(1, len(graphs) + 1))
    if len(test_ids) != len(graphs):
        raise ValueError(f"{len(test_ids)} test ids given for {len(graphs)} graphs")

    tasks: List[Tuple[int, str]] = [(i, alg) for i in range(len(graphs)) for alg in algorithms]
    outcomes: Dict[Tuple[int, str], AlgorithmRun] = {}
    if workers > 1 and tasks:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            futures = {
                task: pool.submit(_run_one, graphs[task[0]], task[1], per_instance_budget, registry)
                for task in tasks
            }
            for task, future in futures.items():
                outcomes[task] = future.result()
    else:
        for i, alg in tasks:
            outcomes[(i, alg)] = _run_one(graphs[i], alg, per_instance_budget, registry)

    records = []
    for i, g in enumerate(graphs):
        record = BenchRecord(
            test_id=test_ids[i],
            edge_count=g.number_of_edges,
            node_count=g.number_of_nodes,
            density=graph_density(g),
        )
        for alg in algorithms:
            run = outcomes[(i, alg)]
            record.runs[alg] = run
            if run.timed_out:
                logger.warning("test %s: %s exceeded %ss budget", record.test_id, alg, per_instance_budget)
            else:
                logger.info(
                    "test %s: %s weight %s in %.6fs", record.test_id, alg, run.total_weight, run.runtime
                )
                if not run.verified:
                    logger.error("test %s: %s returned a set that is not independent", record.test_id, alg)
        records.append(_with_error_rates(record) if error_rates else record)

    return sorted(records, key=lambda r: (r.node_count, r.edge_count, r.test_id))


def _algorithms_in(records: Sequence[BenchRecord]) -> List[str]:
    present = {alg for r in records for alg in r.runs}
    return [a for a in ALL_ALGORITHMS if a in present]


def _round(value, digits: int = 6):
    return None if value is None else round(float(value), digits)


def records_to_frame(records: Sequence[BenchRecord], algorithms: Optional[Sequence[str]] = None) -> pd.DataFrame:
    """One row per graph in the fixed column order of the results table."""
    algorithms = list(algorithms) if algorithms is not None else _algorithms_in(records)
    columns = ["Test-ID", "# of Edges", "# of Nodes", "Graph Density"]
    columns += [c for a in algorithms for c in (f"{a} Weight Sum", f"{a} Run Time")]
    columns += [c for a in algorithms for c in (f"{a} Error Rate (%)", f"{a} Abs Error Rate (%)")]

    rows = []
    for r in records:
        row = {
            "Test-ID": r.test_id,
            "# of Edges": r.edge_count,
            "# of Nodes": r.node_count,
            "Graph Density": _round(r.density),
        }
        for a in algorithms:
            run = r.runs.get(a)
            row[f"{a} Weight Sum"] = _round(run.total_weight) if run else None
            row[f"{a} Run Time"] = _round(run.runtime) if run and not run.timed_out else None
            row[f"{a} Error Rate (%)"] = _round(run.error_rate) if run else None
            row[f"{a} Abs Error Rate (%)"] = _round(run.abs_error_rate) if run else None
        rows.append(row)
    return pd.DataFrame(rows, columns=columns)


def write_bench_csv(records: Sequence[BenchRecord], path: Path) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    records_to_frame(records).to_csv(path, index=False)
    return path


def summarize_records(records: Sequence[BenchRecord]) -> pd.DataFrame:
    """Per-algorithm accuracy and runtime, most accurate first."""
    rows = []
    for alg in _algorithms_in(records):
        runs = [r.runs[alg] for r in records if alg in r.runs]
        solved = [run for run in runs if not run.timed_out]
        errors = [run.abs_error_rate for run in solved if run.abs_error_rate is not None]
        times = [run.runtime for run in solved]
        rows.append({
            "algorithm": alg,
            "solved": len(solved),
            "timeouts": len(runs) - len(solved),
            "mean_abs_error": sum(errors) / len(errors) if errors else None,
            "max_abs_error": max(errors) if errors else None,
            "mean_runtime": sum(times) / len(times) if times else None,
            "max_runtime": max(times) if times else None,
        })
    frame = pd.DataFrame(
        rows,
        columns=["algorithm", "solved", "timeouts", "mean_abs_error", "max_abs_error", "mean_runtime", "max_runtime"],
    )
    return frame.sort_values(["mean_abs_error", "algorithm"], na_position="last", kind="mergesort").reset_index(drop=True)
