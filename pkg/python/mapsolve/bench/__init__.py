"""Benchmark harness: experiment grids, runs, best known values and aggregates."""

from mapsolve.bench.analyze import aggregate, format_aggregates, format_rows, read_results, write_results
from mapsolve.bench.best_known import attach_errors, load_best_known
from mapsolve.bench.config import FULL_TIMES, ExperimentSpec, desk_suite, load_spec_from_yaml, full_suite
from mapsolve.bench.runner import Cell, grid, run_cell, run_cells, run_experiment

__all__ = [
    "Cell",
    "ExperimentSpec",
    "FULL_TIMES",
    "aggregate",
    "attach_errors",
    "desk_suite",
    "format_aggregates",
    "format_rows",
    "grid",
    "load_best_known",
    "load_spec_from_yaml",
    "full_suite",
    "read_results",
    "run_cell",
    "run_cells",
    "run_experiment",
    "write_results",
]
