"""Tests for the benchmark harness: grids, runs, best known values, aggregates."""

from pathlib import Path

import pandas as pd
import pytest

from mapsolve.bench import (
    ExperimentSpec,
    aggregate,
    attach_errors,
    desk_suite,
    format_rows,
    grid,
    load_best_known,
    load_spec_from_yaml,
    full_suite,
    read_results,
    run_cells,
    run_experiment,
    write_results,
)
from mapsolve.bench.analyze import ALL_GROUP, group_error, groups_of
from mapsolve.bench.best_known import best_from_rows, lookup, type_of
from mapsolve.bench.config import MEMETIC_SOLVERS, suite_types
from mapsolve.exceptions import BestKnownMissingError, DomainError
from mapsolve.memetic import Budget
from mapsolve.solvers import ExactSolver, HeuristicSolver, MemeticSolver, create_solver, solver_names
from mapsolve.types import ResultRow

CONFIGS = Path(__file__).resolve().parent.parent / "configs"


def _row(instance="3cc10_1", solver="mdv2", budget="1", value=100.0, error_pct=None, seed=0) -> ResultRow:
    return ResultRow(
        instance=instance,
        solver=solver,
        budget=budget,
        seed=seed,
        value=value,
        error_pct=error_pct,
        generations=0,
        evaluations=10,
        elapsed=0.01,
    )


def _small_spec(**overrides) -> ExperimentSpec:
    fields = dict(
        types=("3cc5",),
        indices=(1, 2),
        solvers=("greedy", "2opt"),
        budgets=(Budget.deterministic(2, 4),),
    )
    fields.update(overrides)
    return ExperimentSpec(**fields)


# ---------------------------------------------------------------------------
# 1. Solvers
# ---------------------------------------------------------------------------


class TestSolvers:
    def test_kinds(self):
        assert isinstance(create_solver("greedy"), HeuristicSolver)
        assert isinstance(create_solver("mdv2"), HeuristicSolver)
        assert isinstance(create_solver("exact"), ExactSolver)
        gk = create_solver("gk")
        assert isinstance(gk, MemeticSolver)
        assert gk.ls.name == "mdv2"

    def test_memetic_names(self):
        assert create_solver("gk-2-opt").name == "gk-2opt"
        assert create_solver("GK-DV2").name == "gk-dv2"

    @pytest.mark.parametrize("name", ["none", "gk-vopt", "hungarian", ""])
    def test_unknown(self, name):
        with pytest.raises(ValueError, match="Unknown solver"):
            create_solver(name)

    def test_names_are_creatable(self):
        for name in solver_names():
            assert create_solver(name).name == name

    def test_heuristic_report(self, small_tensor):
        report = create_solver("2opt").solve(small_tensor, Budget.timed(1.0))
        assert report.generations == 0
        assert report.evaluations > 0


# ---------------------------------------------------------------------------
# 2. Experiment specs
# ---------------------------------------------------------------------------


class TestExperimentSpec:
    def test_bad_index(self):
        with pytest.raises(DomainError, match="1..10"):
            _small_spec(indices=(0, 11))

    def test_bad_type(self):
        with pytest.raises(DomainError):
            _small_spec(types=("3xx10",))

    def test_bad_solver(self):
        with pytest.raises(ValueError):
            _small_spec(solvers=("simplex",))

    def test_descriptors_type_major(self):
        spec = _small_spec(types=("3cc5", "4sr4"))
        assert [d.name for d in spec.descriptors()] == ["3cc5_1", "3cc5_2", "4sr4_1", "4sr4_2"]

    def test_full_suite(self):
        spec = full_suite()
        assert len(spec.types) == 22
        assert "3cq40" not in spec.types
        assert len(spec.budgets) == 5
        assert spec.solvers == MEMETIC_SOLVERS

    def test_desk_suite(self):
        assert desk_suite().types == ("3cc10", "3sr10", "4cc10", "4sr10")

    def test_suite_types_keeps_equivalent_on_request(self):
        assert suite_types([(3, 5)], ("cq",), skip_equivalent=False) == ("3cq5",)


class TestYamlSpec:
    def test_load(self, tmp_path):
        path = tmp_path / "exp.yaml"
        path.write_text(
            "types: [3cc5]\n"
            "indices: [1, 2]\n"
            "solvers: [greedy, gk]\n"
            'budgets: ["0.5", "3x4"]\n'
            "repetitions: 2\n"
            "params:\n"
            "  p_m: 0.3\n"
        )
        spec = load_spec_from_yaml(path)
        assert spec.types == ("3cc5",)
        assert [b.label for b in spec.budgets] == ["0.5", "3x4"]
        assert spec.repetitions == 2
        assert spec.params.p_m == 0.3

    def test_missing_keys(self, tmp_path):
        path = tmp_path / "exp.yaml"
        path.write_text("types: [3cc5]\n")
        with pytest.raises(DomainError, match="solvers"):
            load_spec_from_yaml(path)

    def test_not_a_mapping(self, tmp_path):
        path = tmp_path / "exp.yaml"
        path.write_text("- 3cc5\n")
        with pytest.raises(DomainError, match="mapping"):
            load_spec_from_yaml(path)

    def test_unknown_param(self, tmp_path):
        path = tmp_path / "exp.yaml"
        path.write_text("types: [3cc5]\nsolvers: [gk]\nparams:\n  temperature: 2\n")
        with pytest.raises(DomainError, match="memetic parameters"):
            load_spec_from_yaml(path)

    @pytest.mark.parametrize("name", ["desk.yaml", "memetic-desk.yaml", "full-3s.yaml"])
    def test_shipped_configs(self, name):
        spec = load_spec_from_yaml(CONFIGS / name)
        assert spec.types
        assert spec.solvers


# ---------------------------------------------------------------------------
# 3. Grids and runs
# ---------------------------------------------------------------------------


class TestGrid:
    def test_order_and_seeds(self):
        cells = grid(_small_spec(repetitions=2, seed=5))
        assert len(cells) == 8
        assert [c.source.name for c in cells[:4]] == ["3cc5_1"] * 4
        assert [c.solver for c in cells[:4]] == ["greedy", "greedy", "2opt", "2opt"]
        assert [c.seed for c in cells[:2]] == [5, 6]

    def test_run_rows(self):
        rows = run_experiment(_small_spec())
        assert len(rows) == 4
        assert [(r.instance, r.solver) for r in rows] == [
            ("3cc5_1", "greedy"),
            ("3cc5_1", "2opt"),
            ("3cc5_2", "greedy"),
            ("3cc5_2", "2opt"),
        ]
        assert all(r.error_pct is None for r in rows)
        assert all(r.budget == "2x4" for r in rows)

    def test_worker_processes_keep_order_and_values(self):
        cells = grid(_small_spec())
        serial = run_cells(cells)
        parallel = run_cells(cells, jobs=2)
        assert [(r.instance, r.solver, r.value) for r in serial] == [(r.instance, r.solver, r.value) for r in parallel]


# ---------------------------------------------------------------------------
# 4. Best known values
# ---------------------------------------------------------------------------


class TestBestKnown:
    def test_published_table(self):
        best = load_best_known("published")
        assert len(best) == 22
        assert best["3cc40"] == 926.9

    def test_lookup_by_type(self):
        best = {"3cc40": 926.9, "3cc40_2": 900.0}
        assert lookup(best, "3cc40_1") == 926.9
        assert lookup(best, "3cc40_2") == 900.0
        assert lookup(best, "4sr30_1") is None

    def test_type_of(self):
        assert type_of("4sr30p_10") == "4sr30p"
        assert type_of("my_tensor") == "my_tensor"

    def test_missing_values_raise(self):
        with pytest.raises(BestKnownMissingError) as info:
            attach_errors([_row("3cc10_1"), _row("4sr10_2")], {"3cc10": 90.0})
        assert info.value.instances == ["4sr10_2"]

    def test_best_from_run(self):
        rows = [_row(solver="2opt", value=110.0), _row(solver="mdv2", value=100.0)]
        out = attach_errors(rows, best_from_run=True)
        assert [r.error_pct for r in out] == [pytest.approx(10.0), 0.0]

    def test_given_values_win(self):
        out = attach_errors([_row(value=105.0)], {"3cc10": 100.0}, best_from_run=True)
        assert out[0].error_pct == pytest.approx(5.0)

    def test_best_from_rows(self):
        rows = [_row(value=3.0), _row(value=2.0), _row("x", value=7.0)]
        assert best_from_rows(rows) == {"3cc10_1": 2.0, "x": 7.0}


# ---------------------------------------------------------------------------
# 5. Aggregates and CSV
# ---------------------------------------------------------------------------


class TestAggregate:
    def test_groups(self):
        assert groups_of("3cc40") == ["CC", "CQ", "3-AP", ALL_GROUP]
        assert groups_of("4cq30p") == ["CQ p.", "4-AP", ALL_GROUP]
        assert groups_of("tensor") == [ALL_GROUP]

    def test_identical_rows(self):
        rows = [_row(f"4sr10_{i}", error_pct=2.5) for i in range(1, 4)]
        table = aggregate(rows)
        assert list(table["group"]) == ["SR", "4-AP", ALL_GROUP]
        assert (table["error_pct"] == 2.5).all()

    def test_types_weigh_equally(self):
        rows = [_row("3cc10_1", error_pct=1.0), _row("3cc10_2", error_pct=3.0), _row("4cc10_1", error_pct=6.0)]
        table = aggregate(rows)
        assert group_error(table, "mdv2", "CC") == pytest.approx(4.0)
        assert group_error(table, "mdv2", "CQ") == pytest.approx(2.0)
        assert group_error(table, "mdv2", "3-AP") == pytest.approx(2.0)

    def test_order(self):
        rows = [
            _row("4sr10_1", solver="mdv2", budget="3", error_pct=1.0),
            _row("3cc10_1", solver="2opt", budget="1", error_pct=2.0),
            _row("3cc10_1", solver="mdv2", budget="1", error_pct=0.5),
        ]
        table = aggregate(rows)
        assert list(table["solver"].drop_duplicates()) == ["mdv2", "2opt"]
        first = table[table["solver"] == "mdv2"]
        assert list(first["budget_s"].drop_duplicates()) == ["3", "1"]

    def test_requires_errors(self):
        with pytest.raises(DomainError, match="error_pct"):
            aggregate([_row()])

    def test_empty(self):
        assert aggregate([]).empty

    def test_csv_round_trip_is_exact(self, tmp_path):
        rows = [_row(f"3sr10_{i}", value=100.0 + i / 3, error_pct=i / 7) for i in range(1, 6)]
        path = tmp_path / "rows.csv"
        write_results(rows, path)
        back = read_results(path)
        assert back == rows
        pd.testing.assert_frame_equal(aggregate(back), aggregate(rows))

    def test_read_stops_at_blank_line(self):
        text = format_rows([_row(error_pct=1.0)]) + "\nsolver,budget_s,group,error_pct,types\n"
        assert len(read_results(text, text=True)) == 1

    def test_header_toggle(self):
        assert format_rows([_row()], header=False).count("\n") == 1
        assert format_rows([_row()]).startswith("instance,solver,budget_s,seed,value")


# ---------------------------------------------------------------------------
# 6. Desk-scale experiments
# ---------------------------------------------------------------------------


@pytest.mark.slow
class TestDeskExperiments:
    def test_local_search_ordering(self):
        spec = desk_suite(solvers=MEMETIC_SOLVERS, budgets=(Budget.deterministic(10, 8),))
        table = aggregate(attach_errors(run_experiment(spec), best_from_run=True))
        err = {name: group_error(table, name) for name in MEMETIC_SOLVERS}
        assert err["gk-mdv2"] <= err["gk-mdv"] + 0.1
        assert err["gk-mdv"] <= err["gk-2opt"] + 0.1
        assert err["gk-mdv2"] <= err["gk-dv2"] + 0.1

    def test_budget_monotonicity(self):
        spec = desk_suite(solvers=("gk",), budgets=(Budget.deterministic(5, 8), Budget.deterministic(50, 8)))
        table = aggregate(attach_errors(run_experiment(spec), best_from_run=True))
        for group in ("CC", "SR"):
            assert group_error(table, "gk", group, "50x8") <= group_error(table, "gk", group, "5x8")
