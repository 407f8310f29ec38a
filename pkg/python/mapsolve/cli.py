"""mapsolve command-line interface."""

from __future__ import annotations

import functools
import os
import sys
import time
from pathlib import Path
from typing import Optional

import click

from mapsolve.exceptions import MapSolveError, NodeLimitError
from mapsolve.types import MAX_INDEX

FAMILY_CHOICES = ["cc", "ccp", "cq", "cqp", "sr", "srp"]
SUITE_CHOICES = ["desk", "full"]

EXIT_NODE_LIMIT = 3


def _handle_errors(f):
    """Map library errors to exit codes: node limit 3, anything else 1."""

    @functools.wraps(f)
    def wrapper(*args, **kwargs):
        try:
            return f(*args, **kwargs)
        except NodeLimitError as e:
            click.echo(f"Error: {e}", err=True)
            sys.exit(EXIT_NODE_LIMIT)
        except MapSolveError as e:
            raise click.ClickException(str(e)) from e

    return wrapper


def _check_solver(ctx, param, value):
    if value is None:
        return value
    from mapsolve.solvers import create_solver

    names = value if isinstance(value, tuple) else (value,)
    for name in names:
        try:
            create_solver(name)
        except ValueError as e:
            raise click.BadParameter(str(e)) from None
    return value


def _budget(time_s: Optional[float], deterministic: Optional[str]):
    from mapsolve.memetic.params import Budget

    if time_s is not None and deterministic is not None:
        raise click.UsageError("Use either --time or --deterministic, not both.")
    try:
        if deterministic is not None:
            budget = Budget.parse(deterministic)
            if budget.is_timed:
                raise click.BadParameter("expected <generations>x<size>", param_hint="--deterministic")
            return budget
        return Budget.timed(3.0 if time_s is None else time_s)
    except MapSolveError as e:
        raise click.UsageError(str(e)) from None


def _budget_options(f):
    """Add the shared --time / --deterministic options to a Click command."""
    options = [
        click.option("--time", "time_s", type=float, default=None,
                     help="Wall-clock budget in seconds (default: 3)."),
        click.option("--deterministic", default=None, metavar="GxM",
                     help="Fixed budget: G generations of size M, e.g. 50x8."),
    ]
    for option in reversed(options):
        f = option(f)
    return f


def _best_known_options(f):
    options = [
        click.option("--best-known", default=None, metavar="FILE|published",
                     help="Best known values (YAML mapping) or 'published' for the bundled table."),
        click.option("--best-from-run", is_flag=True, default=False,
                     help="Use the best observed value where no best known value exists."),
    ]
    for option in reversed(options):
        f = option(f)
    return f


def _emit_row(row, header: bool) -> None:
    from mapsolve.bench.analyze import format_rows

    click.echo(format_rows([row], header=header), nl=False)


@click.group()
@click.version_option(package_name="mapsolve")
@click.option("--verbose", "-v", count=True, help="Increase verbosity (-v=info, -vv=debug).")
@click.option("--quiet", "-q", is_flag=True, default=False, help="Suppress all output except errors.")
@click.pass_context
def main(ctx, verbose, quiet):
    """mapsolve - heuristics and a memetic algorithm for the multidimensional assignment problem."""
    if verbose and quiet:
        raise click.UsageError("Cannot use --verbose and --quiet together.")

    if verbose >= 2:
        level = "DEBUG"
    elif verbose == 1:
        level = "INFO"
    elif quiet:
        level = "ERROR"
    else:
        level = None  # use environment default

    if level is not None:
        os.environ["MAPSOLVE_LOG_LEVEL"] = level

    from mapsolve.logging import configure_logging
    configure_logging(level=level)


@main.command()
@click.option("--family", type=click.Choice(FAMILY_CHOICES), required=True,
              help="Instance family; a trailing 'p' selects the perturbed variant.")
@click.option("--perturbed", is_flag=True, default=False, help="Perturbed variant of --family.")
@click.option("--s", "s", type=click.IntRange(min=2), required=True, help="Number of dimensions.")
@click.option("--n", "n", type=click.IntRange(min=1), required=True, help="Vectors per assignment.")
@click.option("--i", "index", type=click.IntRange(1, MAX_INDEX), default=1, show_default=True,
              help="Instance index; the seed is s + n + index.")
@click.option("--seed", type=int, default=None, help="Override the derived seed.")
@click.option("--out", type=click.Path(dir_okay=False), default=None,
              help="Instance file to write (default: standard output).")
@_handle_errors
def generate(family: str, perturbed: bool, s: int, n: int, index: int, seed: Optional[int], out: Optional[str]):
    """Write a generated instance descriptor."""
    from mapsolve.instances.io import format_instance
    from mapsolve.logging import get_logger
    from mapsolve.types import InstanceDescriptor

    token = family if family.endswith("p") or not perturbed else family + "p"
    desc = InstanceDescriptor.from_token(token, s, n, index=index, seed=seed)
    if desc.family == "cq" and s == 3:
        get_logger(__name__).warning("3-AP CQ instances are identical to CC instances", instance=desc.name)
        click.echo("Warning: 3-AP CQ instances are identical to CC instances.", err=True)

    text = format_instance(desc)
    if out is None:
        click.echo(text, nl=False)
    else:
        Path(out).write_text(text, encoding="utf-8")
        click.echo(f"Wrote {desc.name} (seed {desc.seed}) to {out}", err=True)


@main.command()
@click.argument("instance", type=click.Path(exists=True, dir_okay=False))
@click.option("--solver", default="gk", show_default=True, callback=_check_solver,
              help="greedy, 2opt, 3opt, dv, mdv, dv2, mdv2, mdv3, gk, gk-<local search> or exact.")
@_budget_options
@click.option("--seed", type=int, default=0, envvar="MAPSOLVE_SEED", show_default=True,
              help="Seed of the memetic random stream.")
@click.option("--out", type=click.Path(dir_okay=False), default=None, help="Solution file to write.")
@click.option("--csv", "csv_header", is_flag=True, default=False, help="Print the CSV header line too.")
@click.option("--node-limit", type=click.IntRange(min=1), default=None, help="Work limit for --solver exact.")
@_best_known_options
@_handle_errors
def solve(instance: str, solver: str, time_s, deterministic, seed: int, out: Optional[str],
          csv_header: bool, node_limit: Optional[int], best_known: Optional[str], best_from_run: bool):
    """Solve one instance and print its result row."""
    from mapsolve.bench.best_known import attach_errors, load_best_known
    from mapsolve.core import write_solution
    from mapsolve.exact import DEFAULT_NODE_LIMIT
    from mapsolve.instances.factory import open_instance
    from mapsolve.solvers import create_solver
    from mapsolve.types import ResultRow

    budget = _budget(time_s, deterministic)
    name, oracle = open_instance(instance)
    limit = node_limit or DEFAULT_NODE_LIMIT
    chosen = create_solver(solver, node_limit=limit)
    report = chosen.solve(oracle, budget, seed)
    row = ResultRow(
        instance=name,
        solver=chosen.name,
        budget=budget.label,
        seed=seed,
        value=report.weight,
        error_pct=None,
        generations=report.generations,
        evaluations=report.evaluations,
        elapsed=report.elapsed,
    )
    if best_known is not None or best_from_run:
        best = load_best_known(best_known) if best_known is not None else {}
        row = attach_errors([row], best, best_from_run=best_from_run)[0]
    if out is not None:
        write_solution(out, report.best, report.weight)
    _emit_row(row, csv_header)


@main.command()
@click.argument("instance", type=click.Path(exists=True, dir_okay=False))
@click.option("--node-limit", type=click.IntRange(min=1), default=None,
              help="Refuse instances whose estimated work n!^(s-2)*n^3 exceeds this (default: 10^7).")
@click.option("--out", type=click.Path(dir_okay=False), default=None, help="Solution file to write.")
@click.option("--csv", "csv_header", is_flag=True, default=False, help="Print the CSV header line too.")
@_handle_errors
def exact(instance: str, node_limit: Optional[int], out: Optional[str], csv_header: bool):
    """Solve a tiny instance to optimality."""
    from mapsolve.core import write_solution
    from mapsolve.exact import DEFAULT_NODE_LIMIT, brute_force
    from mapsolve.instances.factory import open_instance
    from mapsolve.oracle import CountingOracle
    from mapsolve.types import ResultRow

    name, oracle = open_instance(instance)
    counting = CountingOracle(oracle)
    start = time.perf_counter()
    result = brute_force(counting, node_limit or DEFAULT_NODE_LIMIT)
    elapsed = time.perf_counter() - start
    if out is not None:
        write_solution(out, result.optimum, result.value)
    row = ResultRow(
        instance=name,
        solver="exact",
        budget="-",
        seed=0,
        value=result.value,
        error_pct=None,
        generations=0,
        evaluations=counting.evaluations,
        elapsed=elapsed,
    )
    _emit_row(row, csv_header)
    click.echo(f"nodes {result.nodes}", err=True)


@main.command()
@click.argument("config", required=False, type=click.Path(exists=True, dir_okay=False))
@click.option("--suite", type=click.Choice(SUITE_CHOICES), default=None,
              help="Preset grid when no CONFIG file is given (default: desk).")
@click.option("--type", "types", multiple=True, help="Instance type such as 3cc10; repeatable.")
@click.option("--index", "indices", type=click.IntRange(1, 10), multiple=True,
              help="Instance index 1..10; repeatable.")
@click.option("--solver", "solvers", multiple=True, callback=_check_solver, help="Solver name; repeatable.")
@click.option("--time", "times", type=float, multiple=True, help="Wall-clock budget in seconds; repeatable.")
@click.option("--deterministic", "schedules", multiple=True, metavar="GxM",
              help="Fixed budget GxM; repeatable.")
@click.option("--repetitions", type=click.IntRange(min=1), default=None, help="Runs per grid cell.")
@click.option("--seed", type=int, default=None, envvar="MAPSOLVE_SEED", help="Base seed.")
@click.option("--out", type=click.Path(dir_okay=False), default=None, help="CSV file for the result rows.")
@click.option("--jobs", type=click.IntRange(min=1), default=1, envvar="MAPSOLVE_JOBS", show_default=True,
              help="Worker processes.")
@click.option("--node-limit", type=click.IntRange(min=1), default=None, help="Work limit for the exact solver.")
@_best_known_options
@_handle_errors
def bench(config: Optional[str], suite: Optional[str], types, indices, solvers, times, schedules,
          repetitions: Optional[int], seed: Optional[int], out: Optional[str], jobs: int,
          node_limit: Optional[int], best_known: Optional[str], best_from_run: bool):
    """Run an experiment grid; print the rows, then the aggregate block."""
    import dataclasses

    from mapsolve.bench.analyze import aggregate, format_aggregates, format_rows, write_results
    from mapsolve.bench.best_known import attach_errors, load_best_known
    from mapsolve.bench.config import desk_suite, load_spec_from_yaml, full_suite
    from mapsolve.bench.runner import run_experiment
    from mapsolve.exact import DEFAULT_NODE_LIMIT
    from mapsolve.memetic.params import Budget

    if config is not None and suite is not None:
        raise click.UsageError("Use either CONFIG or --suite, not both.")
    if config is not None:
        spec = load_spec_from_yaml(config)
    elif suite == "full":
        spec = full_suite()
    else:
        spec = desk_suite()

    overrides = {}
    if types:
        overrides["types"] = tuple(types)
    if indices:
        overrides["indices"] = tuple(indices)
    if solvers:
        overrides["solvers"] = tuple(solvers)
    try:
        budgets = tuple(Budget.timed(t) for t in times) + tuple(Budget.parse(g) for g in schedules)
    except MapSolveError as e:
        raise click.UsageError(str(e)) from None
    if budgets:
        overrides["budgets"] = budgets
    if repetitions is not None:
        overrides["repetitions"] = repetitions
    if seed is not None:
        overrides["seed"] = seed
    if out is not None:
        overrides["output"] = out
    if best_known is not None:
        overrides["best_known"] = best_known
    spec = dataclasses.replace(spec, **overrides)

    rows = run_experiment(spec, jobs=jobs, node_limit=node_limit or DEFAULT_NODE_LIMIT)
    best = load_best_known(spec.best_known) if spec.best_known is not None else {}
    rows = attach_errors(rows, best, best_from_run=best_from_run)
    if spec.output is not None:
        Path(spec.output).parent.mkdir(parents=True, exist_ok=True)
        write_results(rows, spec.output)
    click.echo(format_rows(rows), nl=False)
    click.echo("")
    click.echo(format_aggregates(aggregate(rows)), nl=False)


@main.command("aggregate")
@click.argument("results", type=click.Path(exists=True, dir_okay=False))
@_best_known_options
@_handle_errors
def aggregate_cmd(results: str, best_known: Optional[str], best_from_run: bool):
    """Print the aggregate block of a results CSV."""
    from mapsolve.bench.analyze import aggregate, format_aggregates, read_results
    from mapsolve.bench.best_known import attach_errors, load_best_known

    rows = read_results(results)
    if best_known is not None or best_from_run:
        best = load_best_known(best_known) if best_known is not None else {}
        rows = attach_errors(rows, best, best_from_run=best_from_run)
    click.echo(format_aggregates(aggregate(rows)), nl=False)


if __name__ == "__main__":
    main()
