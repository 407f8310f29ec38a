"""Genetic operators: perturbation, crossover and feasibility correction.

All randomness is drawn from one :class:`SubtractiveRandom` in a fixed
order, so a seed reproduces a run exactly.
"""

from __future__ import annotations

import math

import numpy as np

from mapsolve.core import canonicalize, ensure_feasible, shape_of
from mapsolve.exceptions import DomainError, ValidationError
from mapsolve.instances.prng import SubtractiveRandom
from mapsolve.types import Assignment


def swap_count(n: int, mu: float) -> int:
    """``ceil(n * mu / 2)``, rounded first so 40 * 0.1 counts as exactly 4."""
    return math.ceil(round(n * mu, 9) / 2)


def perturb(a: Assignment, mu: float, rng: SubtractiveRandom) -> Assignment:
    """Apply ``ceil(n * mu / 2)`` random single-dimension coordinate swaps.

    Each swap draws ``u``, ``v`` then ``d`` and exchanges the dimension-``d``
    coordinates of vectors ``u`` and ``v``.
    """
    if not 0.0 < mu <= 1.0:
        raise DomainError(f"perturbation strength must be in (0, 1], got {mu}")
    ensure_feasible(a, shape_of(a))
    table = a.table()
    perturb_table(table, mu, rng)
    return Assignment.from_table(table)


def perturb_table(table: np.ndarray, mu: float, rng: SubtractiveRandom) -> None:
    n, s = table.shape
    for _ in range(swap_count(n, mu)):
        u = rng.next_int(0, n)
        v = rng.next_int(0, n)
        d = rng.next_int(0, s)
        table[u, d], table[v, d] = table[v, d], table[u, d]


def crossover(
    x: Assignment,
    y: Assignment,
    rng: SubtractiveRandom,
    bias: float = 0.8,
) -> tuple[Assignment, Assignment]:
    """Two children sharing ``x ∩ y``; the other vectors are paired at random.

    Both parents' leftover vectors are shuffled (``x``'s first), then each
    pairing goes straight with probability *bias* and crossed otherwise.
    The drafts are repaired by :func:`correct`.
    """
    if (x.n, x.s) != (y.n, y.s):
        raise ValidationError(f"crossover parents differ in shape: s={x.s}, n={x.n} vs s={y.s}, n={y.n}")
    x = canonicalize(x)
    y = canonicalize(y)

    in_y = set(y.vectors)
    common = [v for v in x.vectors if v in in_y]
    shared = set(common)
    rest_x = [v for v in x.vectors if v not in shared]
    rest_y = [v for v in y.vectors if v not in shared]

    pi = rng.permutation(len(rest_x))
    omega = rng.permutation(len(rest_y))
    first = list(common)
    second = list(common)
    for j in range(len(rest_x)):
        if rng.next_double() < bias:
            first.append(rest_x[pi[j]])
            second.append(rest_y[omega[j]])
        else:
            first.append(rest_y[omega[j]])
            second.append(rest_x[pi[j]])

    return correct(Assignment(tuple(first)), rng), correct(Assignment(tuple(second)), rng)


def correct(c: Assignment, rng: SubtractiveRandom) -> Assignment:
    """Replace repeated coordinates with random unused ones, then sort by dimension 1.

    Dimensions are scanned in order and, within a dimension, vectors in
    their current order; the first occurrence of a value keeps it.
    """
    table = c.table()
    correct_table(table, rng)
    return Assignment.from_table(table)


def correct_table(table: np.ndarray, rng: SubtractiveRandom) -> None:
    n, s = table.shape
    for d in range(s):
        column = table[:, d]
        seen: set[int] = set()
        repeats = []
        for i in range(n):
            value = int(column[i])
            if value in seen:
                repeats.append(i)
            else:
                seen.add(value)
        if not repeats:
            continue
        unused = [value for value in range(n) if value not in seen]
        for i in repeats:
            column[i] = unused.pop(rng.next_int(0, len(unused)))
