from typing import List, Tuple

import pandas as pd

from .store import ensure_schema


def validate_bench(con) -> List[Tuple[str, int]]:
    """
    Consistency checks over stored benchmark runs.

    Returns:
        List of tuples (check_name, violation_count)
    """
    ensure_schema(con)
    checks = [
        (
            "Exact algorithm with non-zero error",
            "select count(*) from bench_runs where exact and abs(coalesce(error_rate, 0)) > 1e-7",
        ),
        (
            "Approximation above the optimum",
            "select count(*) from bench_runs where not exact and error_rate > 1e-7",
        ),
        (
            "Solution not independent",
            "select count(*) from bench_runs where not timed_out and not verified",
        ),
        (
            "A1/A2 weight disagreement",
            """
            select count(*) from bench_runs a1
            join bench_runs a2 using (run_id, test_id)
            where a1.algorithm = 'A1' and a2.algorithm = 'A2'
              and a1.total_weight is not null and a2.total_weight is not null
              and abs(a1.total_weight - a2.total_weight) > 1e-9 * greatest(1, abs(a1.total_weight))
            """,
        ),
    ]
    return [(name, con.execute(sql).fetchone()[0]) for name, sql in checks]


def accuracy_summary(con) -> pd.DataFrame:
    """Per-algorithm mean/max absolute error and mean runtime across stored runs."""
    ensure_schema(con)
    return con.execute("""
        select
          algorithm,
          count(*) filter (where not timed_out) as solved,
          count(*) filter (where timed_out) as timeouts,
          avg(abs_error_rate) as mean_abs_error,
          max(abs_error_rate) as max_abs_error,
          avg(runtime) filter (where not timed_out) as mean_runtime
        from bench_runs
        group by algorithm
        order by mean_abs_error nulls last, algorithm
    """).df()
