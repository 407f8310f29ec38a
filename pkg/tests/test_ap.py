"""Tests for the linear assignment solver."""

from itertools import permutations

import numpy as np
import pytest

from mapsolve.ap import solve_ap, solve_ap_columns
from mapsolve.exceptions import DomainError


def _brute_force(cost: np.ndarray) -> float:
    n = cost.shape[0]
    perms = np.asarray(list(permutations(range(n))))
    return float(cost[np.arange(n), perms].sum(axis=1).min())


class TestSolveAp:
    @pytest.mark.parametrize("n", [2, 3, 4, 5, 6, 7])
    def test_matches_permutation_enumeration(self, n):
        rng = np.random.default_rng(n)
        for _ in range(100):
            cost = rng.integers(1, 101, size=(n, n)).astype(np.float64)
            assert solve_ap(cost).value == _brute_force(cost)

    def test_perm_is_one_based_permutation(self):
        cost = np.array([[4.0, 1.0, 3.0], [2.0, 0.0, 5.0], [3.0, 2.0, 2.0]])
        solution = solve_ap(cost)
        assert sorted(solution.perm) == [1, 2, 3]
        assert solution.value == 5.0
        np.testing.assert_array_equal(solution.columns, np.asarray(solution.perm) - 1)

    def test_value_is_sum_of_chosen_cells(self):
        rng = np.random.default_rng(0)
        cost = rng.random((6, 6))
        solution = solve_ap(cost)
        assert solution.value == float(cost[np.arange(6), solution.columns].sum())

    def test_single_cell(self):
        assert solve_ap(np.array([[3.5]])).value == 3.5

    @pytest.mark.parametrize("axis", [0, 1])
    def test_shifting_a_line_shifts_the_optimum(self, axis):
        rng = np.random.default_rng(17 + axis)
        for _ in range(50):
            cost = rng.integers(1, 101, size=(5, 5)).astype(np.float64)
            line = int(rng.integers(0, 5))
            shifted = cost.copy()
            if axis == 0:
                shifted[line, :] += 7.0
            else:
                shifted[:, line] += 7.0
            assert solve_ap(shifted).value == solve_ap(cost).value + 7.0

    def test_identity_is_optimal_on_diagonal_matrix(self):
        cost = np.full((4, 4), 10.0)
        np.fill_diagonal(cost, 1.0)
        assert solve_ap_columns(cost).tolist() == [0, 1, 2, 3]

    @pytest.mark.parametrize("cost", [np.ones((2, 3)), np.ones((0, 0)), np.ones(4)])
    def test_rejects_non_square(self, cost):
        with pytest.raises(DomainError, match="square"):
            solve_ap(cost)

    def test_rejects_non_finite(self):
        with pytest.raises(DomainError, match="non-finite"):
            solve_ap(np.array([[1.0, np.inf], [1.0, 1.0]]))
