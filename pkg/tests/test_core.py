"""Tests for assignments, oracles and solution files."""

import numpy as np
import pytest

from mapsolve.core import (
    assignment_weight,
    assignments_equal,
    canonicalize,
    ensure_feasible,
    is_feasible,
    read_solution,
    solution_error,
    validate,
    write_solution,
)
from mapsolve.exceptions import DomainError, InstanceFormatError, ValidationError
from mapsolve.oracle import CountingOracle, TensorOracle, WeightOracle, all_vectors, materialize, weight_of
from mapsolve.types import Assignment, InstanceDescriptor, ProblemShape


# ---------------------------------------------------------------------------
# 1. Types
# ---------------------------------------------------------------------------


class TestProblemShape:
    def test_vector_count(self):
        assert ProblemShape(s=3, n=4).vector_count == 64

    @pytest.mark.parametrize("s, n", [(1, 3), (3, 0), (0, 0)])
    def test_rejects_invalid(self, s, n):
        with pytest.raises(DomainError):
            ProblemShape(s=s, n=n)


class TestAssignment:
    def test_from_table_sorts_and_shifts(self):
        table = np.array([[1, 3, 0], [3, 2, 3], [2, 0, 2], [0, 1, 1]])
        a = Assignment.from_table(table)
        assert a.vectors == ((1, 2, 2), (2, 4, 1), (3, 1, 3), (4, 3, 4))

    def test_table_is_zero_based_copy(self):
        a = Assignment.of([(1, 2), (2, 1)])
        t = a.table()
        t[0, 0] = 9
        assert a.table().tolist() == [[0, 1], [1, 0]]

    def test_n_and_s(self):
        a = Assignment.of([(1, 2, 3), (2, 3, 1), (3, 1, 2)])
        assert (a.n, a.s) == (3, 3)


class TestInstanceDescriptor:
    def test_default_seed(self):
        desc = InstanceDescriptor("cc", ProblemShape(3, 40), index=1)
        assert desc.seed == 44
        assert not desc.seed_overridden

    def test_names(self):
        desc = InstanceDescriptor("sr", ProblemShape(4, 30), index=3, perturbed=True)
        assert desc.type_name == "4sr30p"
        assert desc.name == "4sr30p_3"
        assert desc.token == "srp"

    def test_from_type_name(self):
        desc = InstanceDescriptor.from_type_name("5cq18p", index=2)
        assert (desc.family, desc.shape, desc.perturbed, desc.index) == ("cq", ProblemShape(5, 18), True, 2)

    def test_unknown_family(self):
        with pytest.raises(DomainError, match="unknown instance family"):
            InstanceDescriptor("xx", ProblemShape(3, 4))

    def test_bad_type_name(self):
        with pytest.raises(DomainError):
            InstanceDescriptor.from_type_name("3ab40")

    @pytest.mark.parametrize("index", [0, 11])
    def test_index_outside_range(self, index):
        with pytest.raises(DomainError, match="outside 1..10"):
            InstanceDescriptor("cc", ProblemShape(3, 40), index=index)

    def test_index_range_bounds(self):
        assert InstanceDescriptor("cc", ProblemShape(3, 40), index=10).seed == 53


# ---------------------------------------------------------------------------
# 2. Validation and canonical coding
# ---------------------------------------------------------------------------


class TestValidate:
    def test_feasible(self, identity_3x3):
        assert validate(identity_3x3, ProblemShape(3, 3)) == []
        assert is_feasible(identity_3x3, ProblemShape(3, 3))

    def test_duplicate_reported_once_per_value(self):
        a = Assignment.of([(1, 1), (2, 1), (3, 1)])
        violations = validate(a, ProblemShape(2, 3))
        assert [(v.kind, v.dimension, v.value) for v in violations] == [("duplicate", 2, 1)]

    def test_range_and_count(self):
        a = Assignment.of([(1, 5), (2, 1)])
        kinds = {v.kind for v in validate(a, ProblemShape(2, 3))}
        assert kinds == {"count", "range"}

    def test_wrong_length(self):
        a = Assignment.of([(1, 1), (2, 2, 2)])
        assert [v.kind for v in validate(a, ProblemShape(2, 2))] == ["length"]

    def test_ensure_feasible_lists_violations(self):
        a = Assignment.of([(1, 1), (1, 2)])
        with pytest.raises(ValidationError) as info:
            ensure_feasible(a, ProblemShape(2, 2))
        assert len(info.value.violations) == 1


class TestCanonicalize:
    def test_sorts_by_first_coordinate(self):
        a = Assignment.of([(2, 4, 1), (4, 3, 4), (3, 1, 3), (1, 2, 2)])
        assert canonicalize(a).vectors == ((1, 2, 2), (2, 4, 1), (3, 1, 3), (4, 3, 4))

    def test_idempotent(self):
        a = Assignment.of([(2, 1), (1, 2)])
        assert canonicalize(canonicalize(a)) == canonicalize(a)

    def test_rejects_infeasible(self):
        with pytest.raises(ValidationError):
            canonicalize(Assignment.of([(1, 1), (1, 2)]))


class TestAssignmentsEqual:
    def test_order_insensitive(self):
        assert assignments_equal(Assignment.of([(1, 2), (2, 1)]), Assignment.of([(2, 1), (1, 2)]))

    def test_different(self):
        assert not assignments_equal(Assignment.of([(1, 1), (2, 2)]), Assignment.of([(1, 2), (2, 1)]))

    def test_shape_mismatch(self):
        with pytest.raises(ValidationError, match="shape mismatch"):
            assignments_equal(Assignment.of([(1, 1), (2, 2)]), Assignment.of([(1, 1, 1), (2, 2, 2)]))


# ---------------------------------------------------------------------------
# 3. Weights and errors
# ---------------------------------------------------------------------------


class TestWeights:
    def test_assignment_weight(self):
        oracle = TensorOracle(np.array([[1.0, 10.0], [10.0, 1.0]]))
        assert assignment_weight(oracle, Assignment.of([(1, 1), (2, 2)])) == 2.0
        assert assignment_weight(oracle, Assignment.of([(1, 2), (2, 1)])) == 20.0

    def test_weighs_exactly_n_vectors(self, small_tensor, assignment_factory):
        counting = CountingOracle(small_tensor)
        assignment_weight(counting, assignment_factory(3, 4, seed=1))
        assert counting.evaluations == 4

    def test_rejects_infeasible(self, small_tensor):
        a = Assignment.of([(1, 1, 1), (1, 2, 2), (3, 3, 3), (4, 4, 4)])
        with pytest.raises(ValidationError):
            assignment_weight(small_tensor, a)

    def test_weight_of_checks_range(self, small_tensor):
        with pytest.raises(DomainError):
            weight_of(small_tensor, (1, 2, 5))


class TestSolutionError:
    def test_zero_at_best(self):
        assert solution_error(100.0, 100.0) == 0.0

    def test_percent(self):
        assert solution_error(105.0, 100.0) == pytest.approx(5.0)

    @pytest.mark.parametrize("v_best", [0.0, -1.0])
    def test_nonpositive_best(self, v_best):
        with pytest.raises(DomainError):
            solution_error(1.0, v_best)


# ---------------------------------------------------------------------------
# 4. Oracles
# ---------------------------------------------------------------------------


class TestTensorOracle:
    def test_satisfies_protocol(self, small_tensor):
        assert isinstance(small_tensor, WeightOracle)
        assert isinstance(CountingOracle(small_tensor), WeightOracle)

    def test_batch_weigh(self, small_tensor):
        coords = np.array([[[0, 1, 2], [3, 3, 3]]])
        w = small_tensor.weigh(coords)
        assert w.shape == (1, 2)
        assert w[0, 1] == small_tensor.weights[3, 3, 3]

    def test_does_not_alias_input(self):
        raw = np.ones((2, 2))
        TensorOracle(raw)
        raw[0, 0] = 5.0
        assert raw.flags.writeable

    @pytest.mark.parametrize("weights", [np.ones(3), np.ones((2, 3)), -np.ones((2, 2)), np.full((2, 2), np.nan)])
    def test_rejects_bad_tensors(self, weights):
        with pytest.raises(DomainError):
            TensorOracle(weights)


class TestMaterialize:
    def test_all_vectors_row_major(self):
        vectors = all_vectors(ProblemShape(2, 2))
        assert vectors.tolist() == [[0, 0], [0, 1], [1, 0], [1, 1]]

    def test_matches_lazy_oracle(self, small_tensor):
        counting = CountingOracle(small_tensor)
        dense = materialize(counting)
        assert isinstance(dense, TensorOracle)
        np.testing.assert_array_equal(dense.weights, small_tensor.weights)
        assert counting.evaluations == 64

    def test_limit(self, small_tensor):
        with pytest.raises(DomainError, match="dense limit"):
            materialize(CountingOracle(small_tensor), limit=10)


# ---------------------------------------------------------------------------
# 5. Solution files
# ---------------------------------------------------------------------------


class TestSolutionFiles:
    def test_write_then_read(self, tmp_path, small_tensor, assignment_factory):
        a = assignment_factory(3, 4, seed=3)
        weight = assignment_weight(small_tensor, a)
        path = tmp_path / "sol.txt"
        write_solution(path, a, weight)
        back, back_weight = read_solution(path)
        assert back == canonicalize(a)
        assert back_weight == weight

    def test_file_layout(self, tmp_path):
        path = tmp_path / "sol.txt"
        write_solution(path, Assignment.of([(2, 1), (1, 2)]), 3.5)
        assert path.read_text() == "2 2\n1 2\n2 1\nweight 3.5\n"

    def test_truncated_file_reports_line(self, tmp_path):
        path = tmp_path / "sol.txt"
        path.write_text("2 2\n1 2\n")
        with pytest.raises(InstanceFormatError) as info:
            read_solution(path)
        assert info.value.line == 3

    def test_bad_weight_line(self, tmp_path):
        path = tmp_path / "sol.txt"
        path.write_text("2 2\n1 2\n2 1\nvalue 3\n")
        with pytest.raises(InstanceFormatError, match="weight"):
            read_solution(path)

    def test_infeasible_contents(self, tmp_path):
        path = tmp_path / "sol.txt"
        path.write_text("2 2\n1 1\n2 1\nweight 3\n")
        with pytest.raises(ValidationError):
            read_solution(path)
