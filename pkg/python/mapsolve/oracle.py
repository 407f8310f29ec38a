"""Weight oracles: vector -> clique weight, evaluated in numpy batches."""

from __future__ import annotations

from typing import Protocol, runtime_checkable

import numpy as np

from mapsolve.exceptions import DomainError
from mapsolve.logging import get_logger
from mapsolve.types import ProblemShape, Vector

logger = get_logger(__name__)

# Largest n^s materialized into a dense tensor (float64, 32 MB).
DENSE_LIMIT = 4_000_000

_CHUNK = 1 << 18


@runtime_checkable
class WeightOracle(Protocol):
    """Protocol for weight oracles."""

    @property
    def shape(self) -> ProblemShape:
        """Shape of the instance the oracle weighs."""
        ...

    def weigh(self, coords: np.ndarray) -> np.ndarray:
        """Weigh a batch of vectors.

        Args:
            coords: integer array of shape ``(..., s)`` holding 0-based
                coordinates.

        Returns:
            float64 array of shape ``coords.shape[:-1]``.
        """
        ...


def weight_of(oracle: WeightOracle, vector: Vector) -> float:
    """Weight of one 1-based vector."""
    check_vector(oracle.shape, vector)
    return float(oracle.weigh(np.asarray(vector, dtype=np.int64) - 1))


def check_vector(shape: ProblemShape, vector: Vector) -> None:
    if len(vector) != shape.s:
        raise DomainError(f"vector {vector} has {len(vector)} coordinates, expected {shape.s}")
    for c in vector:
        if not 1 <= c <= shape.n:
            raise DomainError(f"coordinate {c} of vector {vector} outside 1..{shape.n}")


class TensorOracle:
    """Oracle backed by an explicit ``n x n x ... x n`` weight tensor."""

    def __init__(self, weights: np.ndarray):
        weights = np.array(weights, dtype=np.float64)
        if weights.ndim < 2 or len(set(weights.shape)) != 1:
            raise DomainError(f"weight tensor must be an n^s cube with s >= 2, got shape {weights.shape}")
        if not np.all(np.isfinite(weights)) or np.any(weights < 0):
            raise DomainError("weight tensor entries must be finite and non-negative")
        self._weights = weights
        self._weights.setflags(write=False)
        self._shape = ProblemShape(s=weights.ndim, n=weights.shape[0])

    @property
    def shape(self) -> ProblemShape:
        return self._shape

    @property
    def weights(self) -> np.ndarray:
        return self._weights

    def weigh(self, coords: np.ndarray) -> np.ndarray:
        coords = np.asarray(coords)
        return self._weights[tuple(coords[..., d] for d in range(coords.shape[-1]))]

    def __repr__(self) -> str:
        return f"TensorOracle(s={self._shape.s}, n={self._shape.n})"


class CountingOracle:
    """Wraps an oracle and counts how many vectors were weighed.

    Owned by a single run; not meant to be shared between threads.
    """

    def __init__(self, inner: WeightOracle):
        self._inner = inner
        self.evaluations = 0

    @property
    def shape(self) -> ProblemShape:
        return self._inner.shape

    @property
    def inner(self) -> WeightOracle:
        return self._inner

    def weigh(self, coords: np.ndarray) -> np.ndarray:
        coords = np.asarray(coords)
        self.evaluations += coords.size // coords.shape[-1]
        return self._inner.weigh(coords)


def all_vectors(shape: ProblemShape) -> np.ndarray:
    """Every 0-based vector of *shape* in row-major order (last dimension fastest)."""
    grids = np.indices((shape.n,) * shape.s, dtype=np.int64)
    return np.moveaxis(grids, 0, -1).reshape(-1, shape.s)


def materialize(oracle: WeightOracle, limit: int = DENSE_LIMIT) -> TensorOracle:
    """Evaluate every vector once and return the equivalent dense oracle."""
    shape = oracle.shape
    if shape.vector_count > limit:
        raise DomainError(f"n^s = {shape.vector_count} exceeds the dense limit {limit}")
    if isinstance(oracle, TensorOracle):
        return oracle

    flat = np.empty(shape.vector_count, dtype=np.float64)
    # Chunked over the leading index so memory stays bounded.
    strides = np.array([shape.n ** (shape.s - 1 - d) for d in range(shape.s)], dtype=np.int64)
    for start in range(0, shape.vector_count, _CHUNK):
        stop = min(start + _CHUNK, shape.vector_count)
        idx = np.arange(start, stop, dtype=np.int64)
        coords = (idx[:, None] // strides[None, :]) % shape.n
        flat[start:stop] = oracle.weigh(coords)

    logger.debug("oracle materialized", s=shape.s, n=shape.n, vectors=shape.vector_count)
    return TensorOracle(flat.reshape((shape.n,) * shape.s))
