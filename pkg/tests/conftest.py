"""Shared test fixtures for mapsolve tests."""

from itertools import permutations, product

import numpy as np
import pytest

from mapsolve.oracle import TensorOracle
from mapsolve.types import Assignment


def random_tensor(s: int, n: int, seed: int, *, integer: bool = True) -> TensorOracle:
    """Explicit instance with weights 1..100 (or uniform reals in [0, 100))."""
    rng = np.random.default_rng(seed)
    if integer:
        weights = rng.integers(1, 101, size=(n,) * s).astype(np.float64)
    else:
        weights = rng.random(size=(n,) * s) * 100.0
    return TensorOracle(weights)


def random_assignment(s: int, n: int, seed: int) -> Assignment:
    rng = np.random.default_rng(seed)
    table = np.empty((n, s), dtype=np.int64)
    table[:, 0] = np.arange(n)
    for d in range(1, s):
        table[:, d] = rng.permutation(n)
    return Assignment.from_table(table)


def naive_optimum(oracle) -> float:
    """Minimum over all n!^(s-1) assignments, without any AP shortcut."""
    s, n = oracle.shape.s, oracle.shape.n
    rows = np.arange(n)
    best = np.inf
    for perms in product(permutations(range(n)), repeat=s - 1):
        table = np.column_stack([rows, *(np.asarray(p) for p in perms)])
        best = min(best, float(oracle.weigh(table).sum()))
    return best


@pytest.fixture
def tensor_factory():
    """Build seeded explicit instances: ``tensor_factory(s, n, seed)``."""
    return random_tensor


@pytest.fixture
def assignment_factory():
    return random_assignment


@pytest.fixture
def small_tensor():
    """A 3-AP instance with n = 4 and integer weights."""
    return random_tensor(3, 4, seed=7)


@pytest.fixture
def identity_3x3():
    return Assignment.of([(1, 1, 1), (2, 2, 2), (3, 3, 3)])
