"""Edge-weighted s-partite graphs and the CC, CQ and SR clique weightings."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

import numpy as np

from mapsolve.exceptions import DomainError
from mapsolve.instances.prng import SubtractiveRandom, prng_next_int
from mapsolve.oracle import check_vector
from mapsolve.types import ProblemShape, Vector

EDGE_MIN = 1
EDGE_MAX = 100


@dataclass(frozen=True)
class EdgeGraph:
    """One ``n x n`` weight matrix per part pair ``(i, j)``, ``i < j``, 0-based.

    ``matrices[(i, j)][u, v]`` is the weight of the edge between vertex
    ``u`` of part ``i`` and vertex ``v`` of part ``j``.
    """
    shape: ProblemShape
    matrices: dict

    def __post_init__(self) -> None:
        expected = list(combinations(range(self.shape.s), 2))
        if sorted(self.matrices) != expected:
            raise DomainError(f"edge graph needs matrices for pairs {expected}")
        for pair, m in self.matrices.items():
            if m.shape != (self.shape.n, self.shape.n):
                raise DomainError(f"matrix {pair} has shape {m.shape}, expected {(self.shape.n,) * 2}")

    def edge(self, i: int, j: int, u: np.ndarray, v: np.ndarray) -> np.ndarray:
        """Weights of edges between part *i* vertices *u* and part *j* vertices *v*."""
        if i < j:
            return self.matrices[(i, j)][u, v]
        return self.matrices[(j, i)][v, u]

    @classmethod
    def from_matrices(cls, shape: ProblemShape, matrices: dict) -> EdgeGraph:
        frozen = {}
        for pair, m in matrices.items():
            arr = np.array(m, dtype=np.int64)
            arr.setflags(write=False)
            frozen[tuple(pair)] = arr
        return cls(shape=shape, matrices=frozen)


def generate_edge_graph(shape: ProblemShape, seed: int) -> EdgeGraph:
    """Draw every edge weight uniformly from ``{1..100}``.

    Pairs are visited in lexicographic order, each matrix row-major, one
    generator step per edge.
    """
    rng = SubtractiveRandom(seed)
    matrices = {}
    for pair in combinations(range(shape.s), 2):
        values = [prng_next_int(rng, EDGE_MIN, EDGE_MAX + 1) for _ in range(shape.n * shape.n)]
        matrices[pair] = np.asarray(values, dtype=np.int64).reshape(shape.n, shape.n)
    return EdgeGraph.from_matrices(shape, matrices)


def _cycle_pairs(s: int) -> list[tuple[int, int]]:
    return [(i, i + 1) for i in range(s - 1)] + [(s - 1, 0)]


def cc_weights(g: EdgeGraph, coords: np.ndarray) -> np.ndarray:
    """Cycle sum ``w(v_s v_1) + sum w(v_i v_{i+1})`` for a batch of 0-based vectors."""
    total = np.zeros(coords.shape[:-1], dtype=np.float64)
    for i, j in _cycle_pairs(g.shape.s):
        total = total + g.edge(i, j, coords[..., i], coords[..., j])
    return total


def cq_weights(g: EdgeGraph, coords: np.ndarray) -> np.ndarray:
    """Sum over all clique edges."""
    total = np.zeros(coords.shape[:-1], dtype=np.float64)
    for i, j in combinations(range(g.shape.s), 2):
        total = total + g.edge(i, j, coords[..., i], coords[..., j])
    return total


def sr_weights(g: EdgeGraph, coords: np.ndarray) -> np.ndarray:
    """Root of the summed squares of the cycle edges."""
    total = np.zeros(coords.shape[:-1], dtype=np.float64)
    for i, j in _cycle_pairs(g.shape.s):
        w = g.edge(i, j, coords[..., i], coords[..., j]).astype(np.float64)
        total = total + w * w
    return np.sqrt(total)


FAMILY_WEIGHTS = {
    "cc": cc_weights,
    "cq": cq_weights,
    "sr": sr_weights,
}


def _single(g: EdgeGraph, e: Vector, fn) -> float:
    check_vector(g.shape, e)
    return float(fn(g, np.asarray(e, dtype=np.int64) - 1))


def weight_cc(g: EdgeGraph, e: Vector) -> float:
    return _single(g, e, cc_weights)


def weight_cq(g: EdgeGraph, e: Vector) -> float:
    return _single(g, e, cq_weights)


def weight_sr(g: EdgeGraph, e: Vector) -> float:
    return _single(g, e, sr_weights)


class GraphOracle:
    """Weight oracle evaluating a family weighting on an :class:`EdgeGraph`."""

    def __init__(self, graph: EdgeGraph, family: str):
        if family not in FAMILY_WEIGHTS:
            raise DomainError(f"unknown family {family!r}")
        self._graph = graph
        self._family = family
        self._fn = FAMILY_WEIGHTS[family]

    @property
    def shape(self) -> ProblemShape:
        return self._graph.shape

    @property
    def graph(self) -> EdgeGraph:
        return self._graph

    def weigh(self, coords: np.ndarray) -> np.ndarray:
        return self._fn(self._graph, np.asarray(coords))

    def __repr__(self) -> str:
        return f"GraphOracle(family={self._family!r}, s={self.shape.s}, n={self.shape.n})"
