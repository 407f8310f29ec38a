"""Memetic algorithm with dynamically adjusted generation size."""

from mapsolve.memetic.operators import correct, crossover, perturb, swap_count
from mapsolve.memetic.params import Budget, MemeticParams
from mapsolve.memetic.sizing import next_gen_size, round_gen_size
from mapsolve.memetic.solver import GenerationState, first_generation, next_generation, run, select

__all__ = [
    "Budget",
    "GenerationState",
    "MemeticParams",
    "correct",
    "crossover",
    "first_generation",
    "next_gen_size",
    "next_generation",
    "perturb",
    "round_gen_size",
    "run",
    "select",
    "swap_count",
]
