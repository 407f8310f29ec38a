"""2-opt and 3-opt: coordinate interchanges inside pairs and triples of vectors."""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations, permutations, product

import numpy as np

from mapsolve.heuristics.protocol import TableSearch, improves
from mapsolve.logging import get_logger
from mapsolve.oracle import WeightOracle
from mapsolve.types import Assignment

logger = get_logger(__name__)

# Upper bound on vectors weighed per batch when scanning triples.
_BATCH_VECTORS = 1 << 20


@lru_cache(maxsize=None)
def swap_masks(s: int) -> np.ndarray:
    """Every nontrivial dimension subset with dimension 1 held fixed.

    Row ``m - 1`` marks the dimensions in bitmask ``m`` (bit ``d - 1`` for
    0-based dimension ``d``), so there are ``2^(s-1) - 1`` rows.
    """
    rows = []
    for m in range(1, 2 ** (s - 1)):
        rows.append([False] + [bool((m >> (d - 1)) & 1) for d in range(1, s)])
    return _frozen(np.asarray(rows, dtype=bool).reshape(-1, s))


@lru_cache(maxsize=None)
def triple_sources(s: int) -> np.ndarray:
    """Redistributions of three vectors' coordinates, dimension 1 held fixed.

    ``src[c, r, d]`` is the triple member whose dimension-``d`` coordinate
    goes to new vector ``r`` under move ``c``; ``6^(s-1) - 1`` moves.
    """
    identity = (0, 1, 2)
    moves = []
    for perms in product(permutations(range(3)), repeat=s - 1):
        if all(p == identity for p in perms):
            continue
        src = np.empty((3, s), dtype=np.int64)
        src[:, 0] = identity
        for d, p in enumerate(perms, start=1):
            src[:, d] = p
        moves.append(src)
    return _frozen(np.asarray(moves, dtype=np.int64).reshape(-1, 3, s))


class TwoOpt(TableSearch):
    """Best interchange per vector pair; passes repeat until none improves."""

    name = "2opt"

    def improve(self, oracle: WeightOracle, table: np.ndarray) -> bool:
        n, s = table.shape
        if n < 2:
            return False
        masks = swap_masks(s)
        weights = oracle.weigh(table).astype(np.float64)
        first, second, pairs_of = _pair_layout(n)

        changed = False
        passes = 0
        while True:
            passes += 1
            wa, wb = _pair_moves(oracle, table, first, second, masks)
            best = np.argmin(wa + wb, axis=1)
            improved = False
            for p in range(first.size):
                i, j = int(first[p]), int(second[p])
                m = int(best[p])
                if not improves(wa[p, m] + wb[p, m], weights[i] + weights[j]):
                    continue
                vi, vj = table[i].copy(), table[j].copy()
                table[i] = np.where(masks[m], vj, vi)
                table[j] = np.where(masks[m], vi, vj)
                weights[i], weights[j] = wa[p, m], wb[p, m]
                improved = changed = True
                # Later pairs sharing i or j are re-weighed in one batch.
                stale = _later(pairs_of, (i, j), p)
                if stale.size:
                    wa[stale], wb[stale] = _pair_moves(oracle, table, first[stale], second[stale], masks)
                    best[stale] = np.argmin(wa[stale] + wb[stale], axis=1)
            if not improved:
                logger.debug("2-opt converged", passes=passes)
                return changed


def _frozen(a: np.ndarray) -> np.ndarray:
    a.setflags(write=False)
    return a


@lru_cache(maxsize=16)
def _pair_layout(n: int) -> tuple[np.ndarray, np.ndarray, list[np.ndarray]]:
    first, second = np.triu_indices(n, k=1)
    return _frozen(first), _frozen(second), _members_index(n, first, second)


@lru_cache(maxsize=4)
def _triple_layout(n: int) -> tuple[np.ndarray, list[np.ndarray]]:
    triples = np.asarray(list(combinations(range(n), 3)), dtype=np.int64).reshape(-1, 3)
    return _frozen(triples), _members_index(n, triples[:, 0], triples[:, 1], triples[:, 2])


def _members_index(n: int, *columns: np.ndarray) -> list[np.ndarray]:
    """For every vector, the sorted positions of the tuples it belongs to."""
    owners = np.concatenate(columns)
    positions = np.tile(np.arange(columns[0].size), len(columns))
    order = np.lexsort((positions, owners))
    bounds = np.cumsum(np.bincount(owners, minlength=n))[:-1]
    return np.split(positions[order], bounds)


def _later(index: list[np.ndarray], members, position: int) -> np.ndarray:
    stale = np.unique(np.concatenate([index[v] for v in members]))
    return stale[stale > position]


def _pair_moves(oracle, table, first, second, masks):
    a = table[first][:, None, :]
    b = table[second][:, None, :]
    sel = masks[None, :, :]
    return oracle.weigh(np.where(sel, b, a)), oracle.weigh(np.where(sel, a, b))


class ThreeOpt(TableSearch):
    """Best coordinate redistribution per vector triple, until a fixed point."""

    name = "3opt"

    def improve(self, oracle: WeightOracle, table: np.ndarray) -> bool:
        n, s = table.shape
        if n < 3:
            return False
        src = triple_sources(s)
        dims = np.arange(s)
        weights = oracle.weigh(table).astype(np.float64)
        triples, triples_of = _triple_layout(n)
        chunk = max(1, _BATCH_VECTORS // (3 * src.shape[0]))

        changed = False
        passes = 0
        while True:
            passes += 1
            best_move = np.empty(triples.shape[0], dtype=np.int64)
            best_w = np.empty((triples.shape[0], 3), dtype=np.float64)
            _best_triple_moves(oracle, table, triples, np.arange(triples.shape[0]), src, dims, chunk,
                               best_move, best_w)

            improved = False
            for t in range(triples.shape[0]):
                members = triples[t]
                m = int(best_move[t])
                new_w = best_w[t].copy()
                old = weights[members[0]] + weights[members[1]] + weights[members[2]]
                if not improves(new_w[0] + new_w[1] + new_w[2], old):
                    continue
                rows = table[members]
                table[members] = rows[src[m], dims]
                weights[members] = new_w
                improved = changed = True
                stale = _later(triples_of, members.tolist(), t)
                if stale.size:
                    _best_triple_moves(oracle, table, triples, stale, src, dims, chunk, best_move, best_w)
            if not improved:
                logger.debug("3-opt converged", passes=passes)
                return changed


def _best_triple_moves(oracle, table, triples, which, src, dims, chunk, best_move, best_w):
    """Fill ``best_move``/``best_w`` at positions *which*, weighing in chunks."""
    for start in range(0, which.size, chunk):
        pos = which[start:start + chunk]
        w = _triple_moves(oracle, table, triples[pos], src, dims)
        m = np.argmin(w[..., 0] + w[..., 1] + w[..., 2], axis=1)
        best_move[pos] = m
        best_w[pos] = w[np.arange(pos.size), m]


def _triple_moves(oracle, table, triples, src, dims):
    stack = table[triples]  # (K, 3, s)
    return oracle.weigh(stack[:, src, dims])  # (K, C, 3)


_TWO_OPT = TwoOpt()
_THREE_OPT = ThreeOpt()


def two_opt(oracle: WeightOracle, a: Assignment) -> Assignment:
    return _TWO_OPT(oracle, a)


def three_opt(oracle: WeightOracle, a: Assignment) -> Assignment:
    return _THREE_OPT(oracle, a)
