"""Named solvers run by the bench harness and the CLI."""

from __future__ import annotations

import time
from typing import Optional, Protocol

from mapsolve.core import assignment_weight
from mapsolve.exact import DEFAULT_NODE_LIMIT, brute_force
from mapsolve.heuristics.factory import LOCAL_SEARCHES, create_local_search
from mapsolve.heuristics.greedy import greedy_construct
from mapsolve.heuristics.protocol import LocalSearch
from mapsolve.instances.prng import SubtractiveRandom
from mapsolve.logging import get_logger
from mapsolve.memetic.params import Budget, MemeticParams
from mapsolve.memetic.solver import run
from mapsolve.oracle import CountingOracle, WeightOracle
from mapsolve.types import SolveReport

logger = get_logger(__name__)

MEMETIC_PREFIX = "gk"


class Solver(Protocol):
    """Protocol for anything that turns an instance into a :class:`SolveReport`."""

    name: str

    def solve(self, oracle: WeightOracle, budget: Budget, seed: int = 0) -> SolveReport:
        """Solve *oracle*. Budget and seed are ignored by deterministic one-shot solvers."""
        ...


class HeuristicSolver:
    """Greedy construction followed by one local search."""

    def __init__(self, name: str, ls: Optional[LocalSearch] = None):
        self.name = name
        self.ls = ls

    def solve(self, oracle: WeightOracle, budget: Budget, seed: int = 0) -> SolveReport:
        counting = CountingOracle(oracle)
        start = time.perf_counter()
        a = greedy_construct(counting)
        if self.ls is not None:
            a = self.ls(counting, a)
        weight = assignment_weight(counting, a)
        return SolveReport(
            best=a,
            weight=weight,
            generations=0,
            evaluations=counting.evaluations,
            elapsed=time.perf_counter() - start,
        )

    def __repr__(self) -> str:
        return f"HeuristicSolver(name={self.name!r})"


class MemeticSolver:
    """The memetic algorithm with a chosen local search."""

    def __init__(self, name: str, ls: LocalSearch, params: Optional[MemeticParams] = None):
        self.name = name
        self.ls = ls
        self.params = params or MemeticParams()

    def solve(self, oracle: WeightOracle, budget: Budget, seed: int = 0) -> SolveReport:
        return run(oracle, self.params, budget, self.ls, SubtractiveRandom(seed))

    def __repr__(self) -> str:
        return f"MemeticSolver(name={self.name!r}, ls={self.ls.name!r})"


class ExactSolver:
    """Enumeration plus linear AP; only for tiny instances."""

    name = "exact"

    def __init__(self, node_limit: int = DEFAULT_NODE_LIMIT):
        self.node_limit = node_limit

    def solve(self, oracle: WeightOracle, budget: Budget, seed: int = 0) -> SolveReport:
        counting = CountingOracle(oracle)
        start = time.perf_counter()
        result = brute_force(counting, self.node_limit)
        return SolveReport(
            best=result.optimum,
            weight=result.value,
            generations=0,
            evaluations=counting.evaluations,
            elapsed=time.perf_counter() - start,
        )


def solver_names() -> list[str]:
    heuristics = ["greedy", *(ls for ls in LOCAL_SEARCHES if ls != "none")]
    memetic = [MEMETIC_PREFIX, *(f"{MEMETIC_PREFIX}-{ls}" for ls in LOCAL_SEARCHES if ls != "none")]
    return [*heuristics, *memetic, "exact"]


def create_solver(
    name: str,
    *,
    params: Optional[MemeticParams] = None,
    node_limit: int = DEFAULT_NODE_LIMIT,
) -> Solver:
    """Create a solver by name.

    Args:
        name: ``greedy``; a local search name (applied to the Greedy
            start); ``gk`` (memetic with MDV2) or ``gk-<local search>``;
            or ``exact``.
        params: Memetic parameters; ignored by other solvers.
        node_limit: Work limit of the exact solver.

    Raises:
        ValueError: If *name* is not recognized.
    """
    key = name.lower()
    if key == "greedy":
        return HeuristicSolver("greedy")
    elif key == "exact":
        return ExactSolver(node_limit)
    elif key == MEMETIC_PREFIX:
        return MemeticSolver(key, create_local_search("mdv2"), params)
    elif key.startswith(MEMETIC_PREFIX + "-"):
        ls_name = key[len(MEMETIC_PREFIX) + 1:]
        try:
            ls = create_local_search(ls_name)
        except ValueError:
            raise ValueError(_unknown(name)) from None
        return MemeticSolver(f"{MEMETIC_PREFIX}-{ls.name}", ls, params)
    else:
        try:
            ls = create_local_search(key)
        except ValueError:
            raise ValueError(_unknown(name)) from None
        if ls.name == "none":
            raise ValueError(_unknown(name))
        return HeuristicSolver(ls.name, ls)


def _unknown(name: str) -> str:
    return f"Unknown solver: {name!r}. Supported: {', '.join(repr(n) for n in solver_names())}"
