"""Alternating combinations of two local searches (DV2, MDV2, MDV3)."""

from __future__ import annotations

import numpy as np

from mapsolve.heuristics.protocol import LocalSearch, TableSearch
from mapsolve.oracle import WeightOracle


class CombinedSearch(TableSearch):
    """Run *first* then *second*, repeating until a round applies no move."""

    def __init__(self, first: LocalSearch, second: LocalSearch, name: str | None = None):
        self.first = first
        self.second = second
        self.name = name or f"{first.name}+{second.name}"

    def improve(self, oracle: WeightOracle, table: np.ndarray) -> bool:
        changed = False
        while True:
            moved = self.first.improve(oracle, table)
            moved = self.second.improve(oracle, table) or moved
            if not moved:
                return changed
            changed = True


def combine(first: LocalSearch, second: LocalSearch, name: str | None = None) -> CombinedSearch:
    return CombinedSearch(first, second, name)
