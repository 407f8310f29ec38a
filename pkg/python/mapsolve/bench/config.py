"""Experiment grids: dataclasses, presets and YAML loading."""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional

from mapsolve.exceptions import DomainError
from mapsolve.memetic.params import Budget, MemeticParams
from mapsolve.solvers import create_solver
from mapsolve.types import MAX_INDEX, InstanceDescriptor

INDICES = tuple(range(1, MAX_INDEX + 1))
"""Ten instances per type."""

FULL_TIMES = (0.3, 1.0, 3.0, 10.0, 30.0)
"""Running times (seconds) given to the memetic solvers on the full test-bed."""

FULL_SIZES = ((3, 40), (4, 30), (5, 18), (6, 12))
MEMETIC_SOLVERS = ("gk-2opt", "gk-dv2", "gk-mdv", "gk-mdv2")
DESK_SOLVERS = ("2opt", "dv", "mdv", "dv2", "mdv2")


@dataclass(frozen=True)
class ExperimentSpec:
    """A grid of instance types x indices x solvers x budgets x repetitions.

    Attributes:
        types: Instance type names such as ``3cc40`` or ``4sr30p``.
        indices: Instance indices, each within 1..10.
        solvers: Solver names accepted by :func:`mapsolve.solvers.create_solver`.
        budgets: Budgets every solver is run under.
        repetitions: Runs per cell; repetition ``r`` uses seed ``seed + r``.
        seed: Base seed of the memetic random stream.
        output: Optional CSV path for the result rows.
        best_known: ``"published"``, a YAML path, or None.
        params: Memetic parameters.
    """
    types: tuple[str, ...]
    solvers: tuple[str, ...]
    budgets: tuple[Budget, ...] = (Budget(seconds=1.0),)
    indices: tuple[int, ...] = INDICES
    repetitions: int = 1
    seed: int = 0
    output: Optional[str] = None
    best_known: Optional[str] = None
    params: MemeticParams = field(default_factory=MemeticParams)

    def __post_init__(self) -> None:
        if not self.types:
            raise DomainError("experiment has no instance types")
        if not self.solvers:
            raise DomainError("experiment has no solvers")
        if not self.budgets:
            raise DomainError("experiment has no budgets")
        bad = [i for i in self.indices if i not in INDICES]
        if bad or not self.indices:
            raise DomainError(f"instance indices must lie in 1..10, got {list(self.indices)}")
        if self.repetitions < 1:
            raise DomainError(f"repetitions must be at least 1, got {self.repetitions}")
        for name in self.types:
            InstanceDescriptor.from_type_name(name)
        for name in self.solvers:
            create_solver(name)

    def descriptors(self) -> list[InstanceDescriptor]:
        """Every instance of the grid, type-major."""
        return [InstanceDescriptor.from_type_name(t, i) for t in self.types for i in self.indices]


def suite_types(sizes, tokens, *, skip_equivalent: bool = True) -> tuple[str, ...]:
    """Type names for every ``(s, n)`` and family token.

    3-AP CQ duplicates 3-AP CC, so it is left out unless *skip_equivalent*
    is False.
    """
    names = []
    for s, n in sizes:
        for token in tokens:
            if skip_equivalent and s == 3 and token.startswith("cq"):
                continue
            perturbed = token.endswith("p")
            names.append(f"{s}{token.rstrip('p')}{n}{'p' if perturbed else ''}")
    return tuple(names)


def full_suite(solvers=MEMETIC_SOLVERS, times=FULL_TIMES) -> ExperimentSpec:
    """The full test-bed: 22 instance types, 10 instances each, every given time."""
    return ExperimentSpec(
        types=suite_types(FULL_SIZES, ("cc", "ccp", "cq", "cqp", "sr", "srp")),
        solvers=tuple(solvers),
        budgets=tuple(Budget.timed(t) for t in times),
        best_known="published",
    )


def desk_suite(solvers=DESK_SOLVERS, budgets=(Budget(generations=10, size=8),), n: int = 10) -> ExperimentSpec:
    """Small grid for laptops: CC and SR families, s = 3 and 4, n = 10."""
    return ExperimentSpec(
        types=suite_types(((3, n), (4, n)), ("cc", "sr")),
        solvers=tuple(solvers),
        budgets=tuple(budgets),
    )


def load_spec_from_yaml(path: str | Path) -> ExperimentSpec:
    """Load an ExperimentSpec from a YAML file.

    Expected YAML structure::

        types: [3cc10, 3sr10, 4cc10, 4sr10]
        indices: [1, 2, 3]          # optional, default 1..10
        solvers: [2opt, mdv2, gk]
        budgets: ["1", "20x8"]      # seconds or <generations>x<size>
        repetitions: 1              # optional
        seed: 0                     # optional
        output: results/desk.csv    # optional
        best_known: published       # optional: published or a YAML path
        params:                     # optional memetic parameters
          p_m: 0.5
          mu_m: 0.1
    """
    import yaml

    raw = yaml.safe_load(Path(path).read_text())
    if not isinstance(raw, dict):
        raise DomainError(f"{path}: expected a mapping at the top level")
    missing = [key for key in ("types", "solvers") if key not in raw]
    if missing:
        raise DomainError(f"{path}: missing required keys: {', '.join(missing)}")

    try:
        params = MemeticParams(**(raw.get("params") or {}))
    except TypeError as e:
        raise DomainError(f"{path}: bad memetic parameters: {e}") from None
    budgets = tuple(Budget.parse(str(b)) for b in raw.get("budgets", ["1"]))
    return ExperimentSpec(
        types=tuple(str(t) for t in raw["types"]),
        solvers=tuple(str(s) for s in raw["solvers"]),
        budgets=budgets,
        indices=tuple(int(i) for i in raw.get("indices", INDICES)),
        repetitions=int(raw.get("repetitions", 1)),
        seed=int(raw.get("seed", 0)),
        output=raw.get("output"),
        best_known=raw.get("best_known"),
        params=params,
    )
