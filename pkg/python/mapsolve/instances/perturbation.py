"""Per-clique random offsets for perturbed instances.

Offsets come from a stateless splitmix64 hash of the instance seed and the
1-based vector coordinates, so they do not depend on the order in which
cliques are weighed.
"""

from __future__ import annotations

import numpy as np

from mapsolve.oracle import WeightOracle, check_vector
from mapsolve.types import ProblemShape, Vector

OFFSET_RANGE = 20

_GOLDEN = np.uint64(0x9E3779B97F4A7C15)
_MIX1 = np.uint64(0xBF58476D1CE4E5B9)
_MIX2 = np.uint64(0x94D049BB133111EB)


def _splitmix64(x: np.ndarray) -> np.ndarray:
    z = x + _GOLDEN
    z = (z ^ (z >> np.uint64(30))) * _MIX1
    z = (z ^ (z >> np.uint64(27))) * _MIX2
    return z ^ (z >> np.uint64(31))


def offsets(seed: int, coords: np.ndarray) -> np.ndarray:
    """Offsets in ``0..19`` for a batch of 0-based vectors."""
    coords = np.asarray(coords, dtype=np.int64)
    with np.errstate(over="ignore"):
        h = _splitmix64(np.full(coords.shape[:-1], seed & 0xFFFFFFFFFFFFFFFF, dtype=np.uint64))
        for d in range(coords.shape[-1]):
            h = _splitmix64(h ^ (coords[..., d] + 1).astype(np.uint64))
    return (h % np.uint64(OFFSET_RANGE)).astype(np.int64)


def offset(seed: int, e: Vector) -> int:
    """Offset of one 1-based vector."""
    return int(offsets(seed, np.asarray(e, dtype=np.int64) - 1))


class PerturbedOracle:
    """``base(e) + offset(seed, e)``."""

    def __init__(self, base: WeightOracle, seed: int):
        self._base = base
        self._seed = seed

    @property
    def shape(self) -> ProblemShape:
        return self._base.shape

    @property
    def seed(self) -> int:
        return self._seed

    def weigh(self, coords: np.ndarray) -> np.ndarray:
        coords = np.asarray(coords)
        return self._base.weigh(coords) + offsets(self._seed, coords)

    def __repr__(self) -> str:
        return f"PerturbedOracle(base={self._base!r}, seed={self._seed})"


def perturbed_weight(base: WeightOracle, seed: int, e: Vector) -> float:
    check_vector(base.shape, e)
    return float(PerturbedOracle(base, seed).weigh(np.asarray(e, dtype=np.int64) - 1))
