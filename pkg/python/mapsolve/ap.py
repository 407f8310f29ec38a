"""Linear (2-dimensional) assignment problem."""

from __future__ import annotations

import numpy as np
from scipy.optimize import linear_sum_assignment

from mapsolve.exceptions import DomainError
from mapsolve.types import ApSolution


def solve_ap(cost: np.ndarray) -> ApSolution:
    """Minimum-cost perfect matching of a square cost matrix.

    Uses scipy's shortest augmenting path solver (O(n^3)). Ties between
    equal optima are broken deterministically by the solver.

    Raises:
        DomainError: If *cost* is not square or holds non-finite entries.
    """
    cost = np.asarray(cost, dtype=np.float64)
    if cost.ndim != 2 or cost.shape[0] != cost.shape[1] or cost.shape[0] < 1:
        raise DomainError(f"cost matrix must be square and non-empty, got shape {cost.shape}")
    if not np.all(np.isfinite(cost)):
        raise DomainError("cost matrix has non-finite entries")
    columns = solve_ap_columns(cost)
    value = float(cost[np.arange(cost.shape[0]), columns].sum())
    return ApSolution(perm=tuple(int(c) + 1 for c in columns), value=value)


def solve_ap_columns(cost: np.ndarray) -> np.ndarray:
    """0-based optimal column per row; no input checks (hot path for local search)."""
    _, columns = linear_sum_assignment(cost)
    return columns
