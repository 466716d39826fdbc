"""Main CLI entry point for the 2-SCSS toolkit.

Exit codes: 0 success, 2 parse or usage error, 3 infeasible instance, 4 oracle path
limit or time budget exceeded, 5 verification failure.
"""

import logging
from collections.abc import Callable
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path
from typing import NoReturn

import click
from dotenv import load_dotenv
from pydantic import BaseModel, TypeAdapter, ValidationError
from rich.logging import RichHandler

from src.cli.exporter import format_certificate, format_dot, get_default_certificate_filename
from src.cli.formatters import (
    error_console,
    format_batch,
    format_error,
    format_optima,
    format_solution,
    format_structure_report,
    format_verify_report,
    print_formatted,
)
from src.common.config import OracleLimits, SolverConfig
from src.common.exceptions import (
    DemandShapeError,
    GridTilingError,
    InfeasibleError,
    InstanceFormatError,
    InvalidInstanceError,
    OracleLimitExceeded,
    TimeBudgetExceeded,
    WalkError,
)
from src.common.types import Weight
from src.graph.generators import random_instance
from src.graph.instance import Instance, Solution
from src.graph.io import (
    parse_instance,
    parse_solution,
    parse_vertex_weighted,
    serialize_instance,
    serialize_vertex_weighted,
)
from src.graph.transforms import edge_to_vertex_weighted, vertex_to_edge_weighted
from src.hardness.gadget import gridtiling_to_scss
from src.hardness.gridtiling import (
    UndirectedGraph,
    clique_to_gridtiling,
    parse_clique_graph,
    singleton_mismatch,
)
from src.oracle.oracle import oracle_enumerate_optima, oracle_solve
from src.solver.solver import solve
from src.solver.verify import verify
from src.structure.compatibility import structure_report
from src.structure.counterexample import build_counterexample

# Load environment variables from .env file
load_dotenv()

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_INFEASIBLE = 3
EXIT_LIMIT = 4
EXIT_VERIFY_FAILED = 5

_STATUS_EXIT = {
    "solved": EXIT_OK,
    "parse-error": EXIT_USAGE,
    "usage-error": EXIT_USAGE,
    "infeasible": EXIT_INFEASIBLE,
    "limit-exceeded": EXIT_LIMIT,
}

INSTANCE_FILE = click.Path(exists=True, dir_okay=False, path_type=Path)


class BatchOutcome(BaseModel):
    """Result of solving one instance file."""

    path: str
    status: str
    cost: Weight | None = None
    solution: Solution | None = None
    error: str | None = None


def _fail(message: str, code: int) -> NoReturn:
    error_console.print(format_error(message))
    raise click.exceptions.Exit(code)


def _read_instance(path: Path) -> Instance:
    try:
        return parse_instance(path.read_text())
    except InstanceFormatError as e:
        _fail(f"{path}: {e}", EXIT_USAGE)


def _write(content: str, output: Path | None) -> None:
    if output is None:
        click.echo(content, nl=False)
    else:
        output.write_text(content)
        logger.info("Wrote %s", output)


def _solve_file(path: Path, config: SolverConfig) -> BatchOutcome:
    try:
        instance = parse_instance(path.read_text())
    except InstanceFormatError as e:
        return BatchOutcome(path=str(path), status="parse-error", error=str(e))
    try:
        solution = solve(instance, config)
    except DemandShapeError as e:
        return BatchOutcome(path=str(path), status="usage-error", error=str(e))
    except InfeasibleError as e:
        return BatchOutcome(path=str(path), status="infeasible", error=str(e))
    except TimeBudgetExceeded as e:
        return BatchOutcome(path=str(path), status="limit-exceeded", error=str(e))
    return BatchOutcome(path=str(path), status="solved", cost=solution.cost, solution=solution)


def _oracle_file(path: Path, limits: OracleLimits) -> BatchOutcome:
    try:
        instance = parse_instance(path.read_text())
    except InstanceFormatError as e:
        return BatchOutcome(path=str(path), status="parse-error", error=str(e))
    try:
        result = oracle_solve(instance, limits)
    except InfeasibleError as e:
        return BatchOutcome(path=str(path), status="infeasible", error=str(e))
    except (OracleLimitExceeded, TimeBudgetExceeded) as e:
        return BatchOutcome(path=str(path), status="limit-exceeded", error=str(e))
    return BatchOutcome(
        path=str(path), status="solved", cost=result.cost, solution=result.solution
    )


def _run_batch(
    worker: Callable[[Path, SolverConfig | OracleLimits], BatchOutcome],
    paths: tuple[Path, ...],
    settings: SolverConfig | OracleLimits,
    jobs: int,
) -> list[BatchOutcome]:
    if jobs > 1 and len(paths) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as executor:
            return list(executor.map(worker, paths, [settings] * len(paths)))
    return [worker(path, settings) for path in paths]


def _report_batch(outcomes: list[BatchOutcome], as_json: bool, title: str) -> None:
    if as_json:
        if len(outcomes) == 1:
            click.echo(outcomes[0].model_dump_json(indent=2))
        else:
            click.echo(TypeAdapter(list[BatchOutcome]).dump_json(outcomes, indent=2).decode())
    elif len(outcomes) == 1 and outcomes[0].solution is not None:
        print_formatted(format_solution(outcomes[0].solution, title=title))
    elif len(outcomes) > 1:
        rows = [
            (o.path, o.status, "" if o.cost is None else str(o.cost)) for o in outcomes
        ]
        print_formatted(format_batch(rows))
    for outcome in outcomes:
        if outcome.error:
            error_console.print(format_error(f"{outcome.path}: {outcome.error}"))
    code = max(_STATUS_EXIT[o.status] for o in outcomes)
    if code != EXIT_OK:
        raise click.exceptions.Exit(code)


def _configure_logging(verbose: bool) -> None:
    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.WARNING,
        format="%(message)s",
        handlers=[RichHandler(console=error_console, show_path=False)],
        force=True,
    )


@click.group()
@click.option("-v", "--verbose", is_flag=True, help="Log search progress at DEBUG level.")
def cli(verbose: bool) -> None:
    """Exact solvers, oracles, and generators for 2-SCSS-(k1,k2)."""
    _configure_logging(verbose)


@cli.command("solve")
@click.argument("files", nargs=-1, required=True, type=INSTANCE_FILE)
@click.option("--json", "as_json", is_flag=True, help="Emit machine-readable JSON.")
@click.option("--jobs", default=1, show_default=True, type=click.IntRange(min=1))
def solve_command(files: tuple[Path, ...], as_json: bool, jobs: int) -> None:
    """Solve instances with k2 = 1 exactly."""
    try:
        config = SolverConfig.from_env()
    except (ValidationError, ValueError) as e:
        _fail(f"Invalid solver configuration: {e}", EXIT_USAGE)
    outcomes = _run_batch(_solve_file, files, config, jobs)
    _report_batch(outcomes, as_json, title="Optimal solution")


@cli.command("oracle")
@click.argument("files", nargs=-1, required=True, type=INSTANCE_FILE)
@click.option("--enumerate", "enumerate_all", is_flag=True, help="List every optimum.")
@click.option("--max-paths", default=10_000, show_default=True, type=click.IntRange(min=1))
@click.option("--json", "as_json", is_flag=True, help="Emit machine-readable JSON.")
@click.option("--jobs", default=1, show_default=True, type=click.IntRange(min=1))
def oracle_command(
    files: tuple[Path, ...], enumerate_all: bool, max_paths: int, as_json: bool, jobs: int
) -> None:
    """Solve small instances by brute force."""
    try:
        limits = OracleLimits.from_env(max_paths=max_paths)
    except (ValidationError, ValueError) as e:
        _fail(f"Invalid oracle limits: {e}", EXIT_USAGE)
    if not enumerate_all:
        outcomes = _run_batch(_oracle_file, files, limits, jobs)
        _report_batch(outcomes, as_json, title="Oracle optimum")
        return

    for path in files:
        instance = _read_instance(path)
        try:
            optima = oracle_enumerate_optima(instance, limits)
        except InfeasibleError as e:
            _fail(f"{path}: {e}", EXIT_INFEASIBLE)
        except (OracleLimitExceeded, TimeBudgetExceeded) as e:
            _fail(f"{path}: {e}", EXIT_LIMIT)
        if as_json:
            click.echo(TypeAdapter(list[Solution]).dump_json(optima, indent=2).decode())
        else:
            print_formatted(format_optima(optima))


@cli.command("verify")
@click.argument("file", type=INSTANCE_FILE)
@click.argument("solution_file", type=INSTANCE_FILE)
@click.option("--json", "as_json", is_flag=True, help="Emit machine-readable JSON.")
def verify_command(file: Path, solution_file: Path, as_json: bool) -> None:
    """Check a solution file against an instance."""
    instance = _read_instance(file)
    try:
        solution = parse_solution(solution_file.read_text(), instance.graph)
    except InstanceFormatError as e:
        _fail(f"{solution_file}: {e}", EXIT_USAGE)
    except WalkError as e:
        _fail(f"{solution_file}: {e}", EXIT_VERIFY_FAILED)
    report = verify(instance, solution)
    if as_json:
        click.echo(report.model_dump_json(indent=2))
    else:
        print_formatted(format_verify_report(report))
    if not report.ok:
        raise click.exceptions.Exit(EXIT_VERIFY_FAILED)


@cli.command("check-structure")
@click.argument("file", type=INSTANCE_FILE)
@click.argument("solution_file", type=INSTANCE_FILE)
@click.option("--json", "as_json", is_flag=True, help="Emit machine-readable JSON.")
def check_structure_command(file: Path, solution_file: Path, as_json: bool) -> None:
    """Report shared subpaths, rank, and reverse-compatibility of a solution."""
    instance = _read_instance(file)
    try:
        solution = parse_solution(solution_file.read_text(), instance.graph)
    except (InstanceFormatError, WalkError) as e:
        _fail(f"{solution_file}: {e}", EXIT_USAGE)
    report = structure_report(solution.forward, solution.backward)
    if as_json:
        click.echo(report.model_dump_json(indent=2))
    else:
        print_formatted(format_structure_report(report))


@cli.group()
def gen() -> None:
    """Generate instances."""
    pass


OUTPUT_OPTION = click.option(
    "-o",
    "--output",
    type=click.Path(dir_okay=False, path_type=Path),
    default=None,
    help="Write to this file instead of stdout.",
)


@gen.command("random")
@click.option("--n", "n", required=True, type=click.IntRange(min=2))
@click.option("--m", "m", required=True, type=click.IntRange(min=0))
@click.option("--wmax", required=True, type=click.IntRange(min=0))
@click.option("--k1", required=True, type=click.IntRange(min=1))
@click.option("--k2", required=True, type=click.IntRange(min=1))
@click.option("--seed", required=True, type=int)
@click.option("--strongly-connected", is_flag=True, help="Start from a Hamiltonian cycle.")
@OUTPUT_OPTION
def gen_random(
    n: int,
    m: int,
    wmax: int,
    k1: int,
    k2: int,
    seed: int,
    strongly_connected: bool,
    output: Path | None,
) -> None:
    """Seeded random instance with s=0 and t=1."""
    try:
        instance = random_instance(n, m, wmax, k1, k2, seed, strongly_connected)
    except (InvalidInstanceError, ValueError, OverflowError) as e:
        _fail(str(e), EXIT_USAGE)
    _write(serialize_instance(instance), output)


@gen.command("gridtiling")
@click.option("--k", "k", required=True, type=click.IntRange(min=1))
@click.option("--n", "n", type=click.IntRange(min=1), default=None, help="Clique graph size.")
@click.option(
    "--from-clique",
    type=click.Path(exists=True, dir_okay=False, path_type=Path),
    default=None,
    help="Reduce from this graph instead of the complete graph K_n.",
)
@click.option("--mismatch", is_flag=True, help="Turn the result into a no-instance.")
@click.option(
    "--certificate",
    type=click.Path(dir_okay=False, path_type=Path),
    default=None,
    help="Certificate path (defaults to <output>.cert.json).",
)
@OUTPUT_OPTION
def gen_gridtiling(
    k: int,
    n: int | None,
    from_clique: Path | None,
    mismatch: bool,
    certificate: Path | None,
    output: Path | None,
) -> None:
    """Clique -> Grid Tiling* -> 2-SCSS-(2k-1, 1) instance plus its certificate."""
    if from_clique is not None:
        try:
            graph = parse_clique_graph(from_clique.read_text())
        except InstanceFormatError as e:
            _fail(f"{from_clique}: {e}", EXIT_USAGE)
        if n is not None and n != graph.n:
            _fail(f"--n {n} disagrees with the {graph.n} vertices of {from_clique}", EXIT_USAGE)
    elif n is None:
        _fail("Either --n or --from-clique is required", EXIT_USAGE)
    else:
        graph = UndirectedGraph.complete(n)
    try:
        tiling = clique_to_gridtiling(graph, k)
        if mismatch:
            tiling = singleton_mismatch(tiling)
        generated = gridtiling_to_scss(tiling)
    except GridTilingError as e:
        _fail(str(e), EXIT_USAGE)
    _write(serialize_instance(generated.instance), output)
    if certificate is None and output is not None:
        certificate = get_default_certificate_filename(output)
    if certificate is not None:
        certificate.write_text(format_certificate(generated))
    logger.info("Generated instance with beta = %d", generated.beta)


@gen.command("counterexample")
@click.option("--k1", default=2, show_default=True, type=click.IntRange(min=1))
@click.option("--k2", default=2, show_default=True, type=click.IntRange(min=1))
@OUTPUT_OPTION
def gen_counterexample(k1: int, k2: int, output: Path | None) -> None:
    """The 22-vertex instance without general-reverse-compatible optima."""
    _write(serialize_instance(build_counterexample(k1, k2)), output)


@cli.group()
def transform() -> None:
    """Convert between vertex- and edge-weighted instances."""
    pass


@transform.command("vw2ew")
@click.argument("file", type=INSTANCE_FILE)
@OUTPUT_OPTION
def transform_vw2ew(file: Path, output: Path | None) -> None:
    """Split vertices: vertex-weighted -> edge-weighted."""
    try:
        vwi = parse_vertex_weighted(file.read_text())
    except InstanceFormatError as e:
        _fail(f"{file}: {e}", EXIT_USAGE)
    instance, _ = vertex_to_edge_weighted(vwi)
    _write(serialize_instance(instance), output)


@transform.command("ew2vw")
@click.argument("file", type=INSTANCE_FILE)
@OUTPUT_OPTION
def transform_ew2vw(file: Path, output: Path | None) -> None:
    """Subdivide edges: edge-weighted -> vertex-weighted."""
    instance = _read_instance(file)
    _write(serialize_vertex_weighted(edge_to_vertex_weighted(instance)), output)


@cli.command("export-dot")
@click.argument("file", type=INSTANCE_FILE)
@click.argument("solution_file", type=INSTANCE_FILE, required=False)
@OUTPUT_OPTION
def export_dot(file: Path, solution_file: Path | None, output: Path | None) -> None:
    """Draw an instance (and optionally a solution) in Graphviz DOT."""
    instance = _read_instance(file)
    solution = None
    if solution_file is not None:
        try:
            solution = parse_solution(solution_file.read_text(), instance.graph)
        except (InstanceFormatError, WalkError) as e:
            _fail(f"{solution_file}: {e}", EXIT_USAGE)
    _write(format_dot(instance, solution), output)


@cli.command()
def version() -> None:
    """Display version information."""
    click.echo("scss-demands v0.1.0")


if __name__ == "__main__":
    cli()
