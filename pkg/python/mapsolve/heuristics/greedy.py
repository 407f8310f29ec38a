"""Greedy construction heuristic."""

from __future__ import annotations

import math

import numpy as np

from mapsolve.oracle import WeightOracle
from mapsolve.types import Assignment


def greedy_construct(oracle: WeightOracle) -> Assignment:
    """Build an assignment by repeatedly taking the lightest compatible vector.

    Each of the n steps scans every vector whose coordinates are all still
    unused; ties go to the lexicographically smallest vector.
    """
    s, n = oracle.shape.s, oracle.shape.n
    free = [list(range(n)) for _ in range(s)]
    chosen = np.empty((n, s), dtype=np.int64)

    for step in range(n):
        axes = [np.asarray(f, dtype=np.int64) for f in free[1:]]
        tail = np.stack(np.meshgrid(*axes, indexing="ij"), axis=-1).reshape(-1, s - 1)
        coords = np.empty((tail.shape[0], s), dtype=np.int64)
        coords[:, 1:] = tail

        best_w = math.inf
        best = None
        # Scanned one leading coordinate at a time, in ascending order, so
        # the first strict minimum is the lexicographically smallest one.
        for first in free[0]:
            coords[:, 0] = first
            w = oracle.weigh(coords)
            k = int(np.argmin(w))
            if w[k] < best_w:
                best_w = float(w[k])
                best = coords[k].copy()

        chosen[step] = best
        for d in range(s):
            free[d].remove(int(best[d]))

    return Assignment.from_table(chosen)
