"""DuckDB persistence of benchmark records, one row per graph and algorithm."""
from typing import List, Optional, Sequence, Tuple

from .bench import BenchRecord
from .common import load_registry

BENCH_RUNS_DDL = """
create table if not exists bench_runs (
  run_id varchar,
  test_id integer,
  node_count integer,
  edge_count integer,
  density double,
  algorithm varchar,
  exact boolean,
  total_weight double,
  runtime double,
  timed_out boolean,
  verified boolean,
  error_rate double,
  abs_error_rate double,
  recorded_at timestamp default current_timestamp
);
"""

COLUMNS = (
    "run_id", "test_id", "node_count", "edge_count", "density", "algorithm", "exact",
    "total_weight", "runtime", "timed_out", "verified", "error_rate", "abs_error_rate",
)


def ensure_schema(con) -> None:
    con.execute(BENCH_RUNS_DDL)


def long_rows(records: Sequence[BenchRecord], run_id: str, registry: Optional[dict] = None) -> List[Tuple]:
    registry = registry or load_registry()
    exact = {alg: bool(meta.get("exact")) for alg, meta in registry["algorithms"].items()}
    return [
        (
            run_id,
            r.test_id,
            r.node_count,
            r.edge_count,
            r.density,
            alg,
            exact.get(alg, False),
            None if run.total_weight is None else float(run.total_weight),
            None if run.timed_out else run.runtime,
            run.timed_out,
            run.verified,
            run.error_rate,
            run.abs_error_rate,
        )
        for r in records
        for alg, run in r.runs.items()
    ]


def store_records(con, records: Sequence[BenchRecord], run_id: str, registry: Optional[dict] = None) -> int:
    """Append records under ``run_id``; returns the number of rows written."""
    ensure_schema(con)
    rows = long_rows(records, run_id, registry)
    if rows:
        placeholders = ", ".join("?" for _ in COLUMNS)
        con.executemany(
            f"insert into bench_runs ({', '.join(COLUMNS)}) values ({placeholders})",
            rows,
        )
    return len(rows)
