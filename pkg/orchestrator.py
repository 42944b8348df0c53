import json
import uuid
from pathlib import Path
from typing import List, Optional

import typer

from src.utils.env import load_env

load_env()

from pipelines.bench import records_to_frame, run_benchmark, summarize_records, write_bench_csv
from pipelines.common import connect_duckdb, get_paths
from pipelines.registry import get_solver, parse_algorithms
from pipelines.store import store_records
from pipelines.validators import accuracy_summary, validate_bench
from src.errors import GeneratorSpecError, GraphError, GraphFormatError, SolveTimeout, TooLargeError
from src.graph.core import WeightedGraph, weights_close
from src.graph.decomposition import decompose
from src.solvers.exact import solve_amisl, solve_mwis
from src.solvers.greedy import gwmin2_bound, gwmin_bound
from src.solvers.oracle import OracleConfig, oracle_amis, oracle_mwis
from src.utils.generator import GeneratorSpec, generate_graph
from src.utils.graph_io import read_graph, write_graph
from src.utils.logging_config import get_logger
from src.utils.settings import load_settings
from src.validation.integrity_checks import collection_checks, solution_checks, summarize

EXIT_MISMATCH = 1
EXIT_INPUT = 2

INPUT_ERRORS = (GraphError, GraphFormatError, GeneratorSpecError, TooLargeError, OSError)

app = typer.Typer(help="Maximum weight independent set toolkit")


@app.callback()
def main():
    get_logger("src")
    get_logger("pipelines")


def _fail(message: str, code: int = EXIT_INPUT):
    typer.echo(f"error: {message}", err=True)
    raise typer.Exit(code)


def _read(path: Path) -> WeightedGraph:
    try:
        return read_graph(path)
    except INPUT_ERRORS as exc:
        _fail(f"{path}: {exc}")


def _emit(payload: dict, output: Optional[Path]):
    text = json.dumps(payload, indent=2)
    if output:
        output.parent.mkdir(parents=True, exist_ok=True)
        output.write_text(text + "\n", encoding="utf-8")
    typer.echo(text)


@app.command()
def solve(alg: str = typer.Option(..., "--alg"),
          input: Path = typer.Option(..., "--input"),
          output: Path = typer.Option(None, "--output"),
          verify: bool = typer.Option(False, "--verify"),
          budget: float = typer.Option(None, "--budget")):
    """Solve one graph file with one algorithm (a1..a8)."""
    g = _read(input)
    try:
        solver, meta = get_solver(alg)
    except ValueError as exc:
        _fail(str(exc))
    try:
        result = solver(g, deadline=budget) if meta.get("deadline") else solver(g)
    except SolveTimeout as exc:
        _fail(str(exc), EXIT_MISMATCH)
    _emit(result.to_record(), output)

    if verify:
        settings = load_settings()
        optimum = None
        if g.number_of_nodes <= settings.oracle_max_nodes:
            optimum = oracle_mwis(g, OracleConfig(settings.oracle_max_nodes))
        errors = solution_checks(
            g, result.solution, optimum, exact=bool(meta.get("exact")), tol=settings.tolerance
        )
        for err in errors:
            typer.echo(f"[{result.algorithm}] {err}", err=True)
        if errors:
            raise typer.Exit(EXIT_MISMATCH)


@app.command("enumerate")
def enumerate_sets(input: Path = typer.Option(..., "--input"),
                   output: Path = typer.Option(None, "--output"),
                   budget: float = typer.Option(None, "--budget")):
    """List every maximal independent set (A2) and the heaviest one."""
    g = _read(input)
    try:
        result = solve_amisl(g, deadline=budget)
    except SolveTimeout as exc:
        _fail(str(exc), EXIT_MISMATCH)
    _emit(result.to_record(), output)


@app.command()
def gen(nodes: int = typer.Option(..., "--nodes"),
        density: float = typer.Option(..., "--density"),
        wmin: float = typer.Option(None, "--wmin"),
        wmax: float = typer.Option(None, "--wmax"),
        seed: int = typer.Option(0, "--seed"),
        output: Path = typer.Option(..., "--output")):
    """Write a seeded random conflict graph."""
    defaults = load_settings().generator
    try:
        spec = GeneratorSpec(
            node_count=nodes,
            density=density,
            weight_low=defaults.weight_low if wmin is None else wmin,
            weight_high=defaults.weight_high if wmax is None else wmax,
            seed=seed,
        )
        g = generate_graph(spec)
    except INPUT_ERRORS as exc:
        _fail(str(exc))
    write_graph(g, output, comments=[
        f"nodes={spec.node_count} density={spec.density} weights=[{spec.weight_low}, {spec.weight_high}] seed={spec.seed}"
    ])
    typer.echo(f"Wrote {g!r} to {output}")


def _input_files(inputs: str) -> List[Path]:
    path = Path(inputs)
    if path.is_dir():
        return sorted(path.glob("*.txt")) + sorted(path.glob("*.graph"))
    return [Path(p.strip()) for p in inputs.split(",") if p.strip()]


@app.command()
def bench(inputs: str = typer.Option(..., "--inputs", help="Directory or comma-separated graph files"),
          algs: str = typer.Option(None, "--algs", help="Defaults to bench.algorithms in the settings file"),
          budget: float = typer.Option(None, "--budget"),
          output: Path = typer.Option(..., "--output"),
          db: Path = typer.Option(None, "--db", help="Also append runs to this DuckDB file"),
          workers: int = typer.Option(None, "--workers")):
    """Benchmark algorithms over graph files and write the results CSV."""
    settings = load_settings()
    files = _input_files(inputs)
    if not files:
        _fail(f"No graph files found in {inputs}")
    graphs = [_read(f) for f in files]
    try:
        algorithms = parse_algorithms(",".join(settings.bench.algorithms) if algs is None else algs)
    except ValueError as exc:
        _fail(str(exc))

    records = run_benchmark(
        graphs,
        algorithms,
        per_instance_budget=settings.bench.budget_seconds if budget is None else budget,
        workers=settings.bench.workers if workers is None else workers,
        error_rates=bool({"A1", "A2"} & set(algorithms)),
    )
    write_bench_csv(records, output)
    info = summarize(records_to_frame(records))
    typer.echo(f"Wrote {info['graphs']} rows to {output} ({info['timeouts']} timed-out runs)")

    if db:
        con = connect_duckdb(db)
        run_id = uuid.uuid4().hex[:12]
        written = store_records(con, records, run_id)
        con.close()
        typer.echo(f"Stored {written} runs as run {run_id} in {db}")
    typer.echo(summarize_records(records).to_string(index=False))


@app.command()
def verify(input: Path = typer.Option(..., "--input"),
           algs: str = typer.Option("all", "--algs"),
           max_nodes: int = typer.Option(None, "--max-nodes", help="Defaults to oracle.max_nodes in settings")):
    """Check algorithms against both brute-force oracles; exit 1 on any mismatch."""
    settings = load_settings()
    g = _read(input)
    cfg = OracleConfig(settings.oracle_max_nodes if max_nodes is None else max_nodes)
    try:
        optimum = oracle_mwis(g, cfg)
        family = oracle_amis(g, cfg)
        algorithms = parse_algorithms(algs)
    except (TooLargeError, ValueError) as exc:
        _fail(str(exc))

    failures = 0
    best_in_family = family.best(g)
    if best_in_family.total_weight != optimum.total_weight:
        typer.echo(f"[oracle] subset scan {optimum.total_weight} != maximal-set branch {best_in_family.total_weight}")
        failures += 1

    # composed variants inherit the bound of their greedy selector
    bounds = {alg: gwmin_bound(g) for alg in ("A3", "A4", "A5")}
    bounds.update({alg: gwmin2_bound(g) for alg in ("A6", "A7", "A8")})
    for alg in algorithms:
        solver, meta = get_solver(alg)
        result = solver(g)
        errors = solution_checks(
            g, result.solution, optimum, exact=bool(meta.get("exact")), tol=settings.tolerance
        )
        if alg in bounds and result.total_weight < bounds[alg] and not weights_close(
            result.total_weight, bounds[alg], settings.tolerance
        ):
            errors.append(f"Weight {result.total_weight} below the greedy bound {bounds[alg]}")
        if alg == "A2":
            errors += collection_checks(g, solve_amisl(g).collection, family)
        status = "ok" if not errors else "MISMATCH"
        typer.echo(f"[{alg}] weight={result.total_weight} optimum={optimum.total_weight} {status}")
        for err in errors:
            typer.echo(f"    {err}")
        failures += bool(errors)

    if failures:
        raise typer.Exit(EXIT_MISMATCH)
    typer.echo("Verification complete.")


@app.command()
def explain(input: Path = typer.Option(..., "--input")):
    """Show the node removals and how each level was rebuilt (A1)."""
    g = _read(input)
    sd = decompose(g)
    typer.echo(f"Graph: {g.number_of_nodes} nodes, {g.number_of_edges} edges")
    typer.echo("Removal order:")
    for step, entry in enumerate(sd, start=1):
        comps = ", ".join(str(sorted(c)) for c in entry.components)
        typer.echo(f"  {step}. remove {entry.removed} -> components {comps}")
    typer.echo(f"Residual: {sorted(sd.residual(g).nodes)}")

    result = solve_mwis(g)
    typer.echo("Rebuild (last removed first):")
    for level in result.trace:
        typer.echo(
            f"  add {level.removed} to {sorted(level.level_nodes)}: "
            f"preliminary {level.preliminary.sorted_members()} ({level.preliminary.total_weight}) vs "
            f"compare {level.compare.sorted_members()} ({level.compare.total_weight}) -> {level.chosen}"
        )
    typer.echo(f"MWIS: {result.solution.sorted_members()} total weight {result.total_weight}")


@app.command()
def report(db: Path = typer.Option(None, "--db")):
    """Validate stored benchmark runs and print the accuracy ranking."""
    if db is None:
        _, db = get_paths()
    if not db.exists():
        _fail(f"No results database at {db}")
    con = connect_duckdb(db)
    for name, cnt in validate_bench(con):
        print(f"[{name}] -> {cnt}")
    print(accuracy_summary(con).to_string(index=False))
    con.close()
    print("Report complete.")


if __name__ == "__main__":
    app()
