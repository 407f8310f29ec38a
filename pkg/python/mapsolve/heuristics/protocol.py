"""Local search protocol and the shared table-based base class."""

from __future__ import annotations

from typing import Protocol, runtime_checkable

import numpy as np

from mapsolve.core import ensure_feasible
from mapsolve.oracle import WeightOracle
from mapsolve.types import Assignment

# Relative slack below which a weight decrease does not count as improvement.
IMPROVEMENT_EPS = 1e-9


def improves(new: float, old: float) -> bool:
    """True iff *new* beats *old* by more than the floating-point slack."""
    return new < old - IMPROVEMENT_EPS * max(1.0, old)


@runtime_checkable
class LocalSearch(Protocol):
    """Protocol for local search procedures."""

    name: str

    def improve(self, oracle: WeightOracle, table: np.ndarray) -> bool:
        """Improve a 0-based ``n x s`` assignment table in place.

        Returns:
            True if at least one improving move was applied.
        """
        ...

    def __call__(self, oracle: WeightOracle, a: Assignment) -> Assignment:
        """Return the improved, canonical assignment; never heavier than *a*."""
        ...


class TableSearch:
    """Base class: validates the input, runs :meth:`improve`, re-canonicalizes."""

    name = "base"

    def improve(self, oracle: WeightOracle, table: np.ndarray) -> bool:
        raise NotImplementedError

    def __call__(self, oracle: WeightOracle, a: Assignment) -> Assignment:
        ensure_feasible(a, oracle.shape)
        table = a.table()
        self.improve(oracle, table)
        return Assignment.from_table(table)

    def __repr__(self) -> str:
        return f"{type(self).__name__}(name={self.name!r})"


class IdentitySearch(TableSearch):
    """Local search that never moves."""

    name = "none"

    def improve(self, oracle: WeightOracle, table: np.ndarray) -> bool:
        return False
