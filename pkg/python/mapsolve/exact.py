"""Exact optimum of tiny instances by enumeration plus one linear AP per node."""

from __future__ import annotations

import math
from itertools import permutations, product

import numpy as np

from mapsolve.ap import solve_ap_columns
from mapsolve.exceptions import NodeLimitError
from mapsolve.logging import get_logger
from mapsolve.oracle import WeightOracle
from mapsolve.types import Assignment, ExactResult, ProblemShape

logger = get_logger(__name__)

DEFAULT_NODE_LIMIT = 10**7


def estimated_work(shape: ProblemShape) -> int:
    """``n!^(s-2) * n^3``: AP solves times the cost of one solve."""
    return math.factorial(shape.n) ** max(shape.s - 2, 0) * shape.n ** 3


def brute_force(oracle: WeightOracle, node_limit: int = DEFAULT_NODE_LIMIT) -> ExactResult:
    """Fix dimension 1 to the identity, enumerate dimensions 2..s-1, solve dimension s.

    Returns the first minimum found in lexicographic enumeration order.

    Raises:
        NodeLimitError: If the estimated work exceeds *node_limit*.
    """
    shape = oracle.shape
    s, n = shape.s, shape.n
    work = estimated_work(shape)
    if work > node_limit:
        raise NodeLimitError(work, node_limit)

    rows = np.arange(n)
    grid = np.empty((n, n, s), dtype=np.int64)
    grid[:, :, 0] = rows[:, None]
    grid[:, :, s - 1] = rows[None, :]

    best_value = math.inf
    best_table = None
    nodes = 0
    for middle in product(permutations(range(n)), repeat=s - 2):
        for d, perm in enumerate(middle, start=1):
            grid[:, :, d] = np.asarray(perm)[:, None]
        cost = oracle.weigh(grid)
        columns = solve_ap_columns(cost)
        value = float(cost[rows, columns].sum())
        nodes += 1
        if value < best_value:
            best_value = value
            best_table = grid[rows, columns].copy()

    logger.info("exact search done", s=s, n=n, nodes=nodes, value=best_value, optimum=best_table + 1)
    return ExactResult(optimum=Assignment.from_table(best_table), value=best_value, nodes=nodes)
