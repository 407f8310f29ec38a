"""Run experiment grids, optionally across worker processes."""

from __future__ import annotations

import concurrent.futures
import functools
from dataclasses import dataclass
from typing import Optional, Union

from mapsolve.bench.config import ExperimentSpec
from mapsolve.exact import DEFAULT_NODE_LIMIT
from mapsolve.instances.factory import make_instance, open_instance
from mapsolve.logging import get_logger
from mapsolve.memetic.params import Budget, MemeticParams
from mapsolve.oracle import WeightOracle
from mapsolve.solvers import create_solver
from mapsolve.types import InstanceDescriptor, ResultRow

logger = get_logger(__name__)

InstanceSource = Union[InstanceDescriptor, str]


@dataclass(frozen=True)
class Cell:
    """One solver run: instance, solver, budget and seed."""
    source: InstanceSource
    solver: str
    budget: Budget
    seed: int = 0


def grid(spec: ExperimentSpec) -> list[Cell]:
    """Cells in output order: instance, solver, budget, repetition."""
    return [
        Cell(desc, solver, budget, spec.seed + rep)
        for desc in spec.descriptors()
        for solver in spec.solvers
        for budget in spec.budgets
        for rep in range(spec.repetitions)
    ]


@functools.lru_cache(maxsize=8)
def _load(source: InstanceSource) -> tuple[str, WeightOracle]:
    if isinstance(source, InstanceDescriptor):
        return source.name, make_instance(source)
    return open_instance(source)


def run_cell(
    cell: Cell,
    params: Optional[MemeticParams] = None,
    node_limit: int = DEFAULT_NODE_LIMIT,
) -> ResultRow:
    """Solve one cell; ``error_pct`` is left empty."""
    name, oracle = _load(cell.source)
    solver = create_solver(cell.solver, params=params, node_limit=node_limit)
    report = solver.solve(oracle, cell.budget, cell.seed)
    logger.info(
        "cell done",
        instance=name,
        solver=solver.name,
        budget=cell.budget.label,
        value=report.weight,
        elapsed=report.elapsed,
    )
    return ResultRow(
        instance=name,
        solver=solver.name,
        budget=cell.budget.label,
        seed=cell.seed,
        value=report.weight,
        error_pct=None,
        generations=report.generations,
        evaluations=report.evaluations,
        elapsed=report.elapsed,
    )


def run_cells(
    cells: list[Cell],
    params: Optional[MemeticParams] = None,
    *,
    jobs: int = 1,
    node_limit: int = DEFAULT_NODE_LIMIT,
) -> list[ResultRow]:
    """Run *cells*, returning rows in the order of *cells* whatever *jobs* is."""
    work = functools.partial(run_cell, params=params, node_limit=node_limit)
    if jobs <= 1 or len(cells) <= 1:
        return [work(cell) for cell in cells]
    # Timed budgets measure wall-clock time, so workers compete for cores.
    with concurrent.futures.ProcessPoolExecutor(max_workers=jobs) as executor:
        return list(executor.map(work, cells))


def run_experiment(spec: ExperimentSpec, *, jobs: int = 1, node_limit: int = DEFAULT_NODE_LIMIT) -> list[ResultRow]:
    cells = grid(spec)
    logger.info("experiment started", cells=len(cells), jobs=jobs)
    return run_cells(cells, spec.params, jobs=jobs, node_limit=node_limit)
