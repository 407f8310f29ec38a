"""DV and MDV: re-optimize one side of a dimension split with a linear AP.

A split is stored as a boolean mask over dimensions marking the right side
R; dimension 1 always sits on the left. For split R the induced cost is
``c[j][k] = w(j's coordinates on L joined with k's coordinates on R)``, whose
diagonal is the current assignment.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from mapsolve.ap import solve_ap_columns
from mapsolve.heuristics.protocol import TableSearch, improves
from mapsolve.logging import get_logger
from mapsolve.oracle import WeightOracle
from mapsolve.types import Assignment

logger = get_logger(__name__)


@dataclass(frozen=True)
class DimensionSplit:
    """A bipartition of ``{1..s}``; ``left`` always contains dimension 1."""
    left: tuple[int, ...]
    right: tuple[int, ...]

    @classmethod
    def from_mask(cls, mask: np.ndarray) -> DimensionSplit:
        left = tuple(d + 1 for d in range(mask.size) if not mask[d])
        right = tuple(d + 1 for d in range(mask.size) if mask[d])
        return cls(left=left, right=right)

    def mask(self, s: int) -> np.ndarray:
        m = np.zeros(s, dtype=bool)
        m[[d - 1 for d in self.right]] = True
        return m


def dv_splits(s: int) -> list[np.ndarray]:
    """DV's splits in dimension order 1..s.

    Re-assigning dimension 1 is the split whose right side is every other
    dimension (the same linear AP, transposed). For s = 2 both dimensions
    give the same split and it is listed once.
    """
    splits: list[np.ndarray] = []
    for d in range(s):
        mask = np.zeros(s, dtype=bool)
        if d == 0:
            mask[1:] = True
        else:
            mask[d] = True
        if not any(np.array_equal(mask, m) for m in splits):
            splits.append(mask)
    return splits


def mdv_splits(s: int) -> list[np.ndarray]:
    """All ``2^(s-1) - 1`` splits: DV's splits first, then the rest by bitmask."""
    splits = dv_splits(s)
    for m in range(1, 2 ** (s - 1)):
        mask = np.asarray([False] + [bool((m >> (d - 1)) & 1) for d in range(1, s)])
        if not any(np.array_equal(mask, known) for known in splits):
            splits.append(mask)
    return splits


def split_cost(oracle: WeightOracle, table: np.ndarray, mask: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Candidate vectors ``(n, n, s)`` and their weights ``(n, n)`` for one split."""
    candidates = np.where(mask[None, None, :], table[None, :, :], table[:, None, :])
    return candidates, oracle.weigh(candidates)


class SplitDescent(TableSearch):
    """Cycle through a fixed list of splits, solving one linear AP each,
    until a whole cycle finds no improvement."""

    def __init__(self, name: str, splits_for):
        self.name = name
        self._splits_for = splits_for
        self._by_s: dict[int, list[np.ndarray]] = {}

    def improve(self, oracle: WeightOracle, table: np.ndarray) -> bool:
        n, s = table.shape
        rows = np.arange(n)
        splits = self._by_s.get(s)
        if splits is None:
            splits = self._by_s[s] = self._splits_for(s)
        changed = False
        rounds = 0
        while True:
            rounds += 1
            improved = False
            for mask in splits:
                candidates, cost = split_cost(oracle, table, mask)
                columns = solve_ap_columns(cost)
                if improves(float(cost[rows, columns].sum()), float(cost[rows, rows].sum())):
                    table[:] = candidates[rows, columns]
                    improved = changed = True
            if not improved:
                logger.debug("split descent converged", heuristic=self.name, rounds=rounds)
                return changed


DV = SplitDescent("dv", dv_splits)
MDV = SplitDescent("mdv", mdv_splits)


def dv(oracle: WeightOracle, a: Assignment) -> Assignment:
    return DV(oracle, a)


def mdv(oracle: WeightOracle, a: Assignment) -> Assignment:
    return MDV(oracle, a)


def dimension_splits(s: int) -> list[DimensionSplit]:
    """Every split of ``{1..s}`` in MDV's enumeration order."""
    return [DimensionSplit.from_mask(m) for m in mdv_splits(s)]
