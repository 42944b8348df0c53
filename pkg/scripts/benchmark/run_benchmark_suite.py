"""
Regenerate the 43-graph benchmark suite and run the selected algorithms on it.

Graph sizes come from `configs/benchmark_suite.yaml`; each graph is generated with
seed = base_seed + test id, written under <data root>/suite/, benchmarked, and
tabulated into a results CSV (and optionally appended to the DuckDB store).
"""

import argparse
import logging
import sys
import uuid
from pathlib import Path
from typing import Iterable, Optional

# Ensure project root is importable
PROJECT_ROOT = Path(__file__).resolve().parents[2]
if str(PROJECT_ROOT) not in sys.path:
    sys.path.insert(0, str(PROJECT_ROOT))

from src.utils.env import load_env

load_env()

from pipelines.bench import run_benchmark, summarize_records, write_bench_csv
from pipelines.common import connect_duckdb, get_paths
from pipelines.registry import parse_algorithms
from pipelines.store import store_records
from src.utils.generator import benchmark_suite_specs, generate_graph
from src.utils.graph_io import write_graph
from src.utils.settings import load_settings
from src.utils.suite_config import load_suite_config, parse_test_ids

logger = logging.getLogger("run_benchmark_suite")

DEFAULT_CONFIG_PATH = PROJECT_ROOT / "configs" / "benchmark_suite.yaml"


def configure_logging(verbose: bool = False) -> None:
    level = logging.DEBUG if verbose else logging.INFO
    logging.basicConfig(
        level=level,
        format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
    )


def main(argv: Optional[Iterable[str]] = None) -> int:
    parser = argparse.ArgumentParser(description="Benchmark the regenerated 43-graph suite.")
    parser.add_argument("--config", type=str, default=str(DEFAULT_CONFIG_PATH), help="Path to suite YAML.")
    parser.add_argument("--tests", type=str, help='Test ids to run, e.g. "1-10,42" (defaults to all).')
    parser.add_argument("--algs", type=str, default=None,
                        help="Comma-separated algorithm ids or 'all' (default: bench.algorithms in settings).")
    parser.add_argument("--budget", type=float, help="Per-run time budget in seconds.")
    parser.add_argument("--workers", type=int, help="Worker processes (1 runs in-process).")
    parser.add_argument("--output", type=str, help="Results CSV (defaults to <data root>/results/benchmark_suite.csv).")
    parser.add_argument("--store", action="store_true", help="Append runs to the DuckDB results store.")
    parser.add_argument("--verbose", action="store_true", help="Enable verbose logging.")
    args = parser.parse_args(list(argv) if argv is not None else None)

    configure_logging(args.verbose)
    settings = load_settings()
    suite = load_suite_config(Path(args.config))
    if args.tests:
        suite = suite.select(parse_test_ids(args.tests))
    algorithms = parse_algorithms(args.algs if args.algs is not None else ",".join(settings.bench.algorithms))

    data_root, dbpath = get_paths()
    suite_dir = data_root / "suite"
    graphs, test_ids = [], []
    for test_id, spec in benchmark_suite_specs(suite):
        g = generate_graph(spec)
        write_graph(g, suite_dir / f"test_{test_id:02d}.txt", comments=[f"test {test_id}: {spec}"])
        graphs.append(g)
        test_ids.append(test_id)
    logger.info("Generated %d suite graphs under %s", len(graphs), suite_dir)

    records = run_benchmark(
        graphs,
        algorithms,
        per_instance_budget=args.budget if args.budget is not None else settings.bench.budget_seconds,
        test_ids=test_ids,
        workers=args.workers if args.workers is not None else settings.bench.workers,
        error_rates=bool({"A1", "A2"} & set(algorithms)),
    )
    output = Path(args.output) if args.output else data_root / "results" / "benchmark_suite.csv"
    write_bench_csv(records, output)
    logger.info("Wrote %s", output)

    if args.store:
        run_id = f"suite-{uuid.uuid4().hex[:8]}"
        written = store_records(connect_duckdb(dbpath), records, run_id)
        logger.info("Stored %d runs as %s in %s", written, run_id, dbpath)

    print(summarize_records(records).to_string(index=False))
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
