"""mapsolve data types."""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from mapsolve.exceptions import DomainError

Vector = tuple[int, ...]
"""One s-tuple of 1-based coordinates."""

FAMILIES = ("cc", "cq", "sr")
# Instance indices per type; the seed derives from the index.
MAX_INDEX = 10

_TYPE_NAME = re.compile(r"^(\d+)(cc|cq|sr)(\d+)(p?)$")


@dataclass(frozen=True)
class ProblemShape:
    """Dimension count *s* and side length *n* of an s-AP instance."""
    s: int
    n: int

    def __post_init__(self) -> None:
        if self.s < 2 or self.n < 1:
            raise DomainError(f"invalid problem shape s={self.s}, n={self.n} (need s >= 2, n >= 1)")

    @property
    def vector_count(self) -> int:
        return self.n ** self.s

    def __repr__(self) -> str:
        return f"ProblemShape(s={self.s}, n={self.n})"


@dataclass(frozen=True)
class Assignment:
    """A list of n vectors with 1-based coordinates.

    Construction does not check feasibility: crossover drafts are
    Assignments too. Use :func:`mapsolve.core.validate` or
    :func:`mapsolve.core.canonicalize` for that.
    """
    vectors: tuple[Vector, ...]

    @classmethod
    def of(cls, vectors: Sequence[Sequence[int]]) -> Assignment:
        return cls(tuple(tuple(int(c) for c in v) for v in vectors))

    @classmethod
    def from_table(cls, table: np.ndarray, *, sort: bool = True) -> Assignment:
        """Build from a 0-based ``n x s`` table, sorted by first coordinate by default."""
        if sort:
            table = table[np.argsort(table[:, 0], kind="stable")]
        return cls(tuple(tuple(row) for row in (table + 1).tolist()))

    def table(self) -> np.ndarray:
        """0-based ``n x s`` int64 table (a fresh copy)."""
        return np.asarray(self.vectors, dtype=np.int64).reshape(len(self.vectors), -1) - 1

    @property
    def n(self) -> int:
        return len(self.vectors)

    @property
    def s(self) -> int:
        return len(self.vectors[0]) if self.vectors else 0

    def __repr__(self) -> str:
        return f"Assignment({', '.join(str(v) for v in self.vectors)})"


@dataclass(frozen=True)
class GenerationRecord:
    """Trace entry for one generation of the memetic loop."""
    index: int
    size: int
    best: float
    elapsed: float


@dataclass(frozen=True)
class SolveReport:
    """Outcome of one solver run."""
    best: Assignment
    weight: float
    generations: int
    evaluations: int
    elapsed: float
    history: tuple[GenerationRecord, ...] = ()
    clamped_crossovers: int = 0

    def __repr__(self) -> str:
        return (
            f"SolveReport(weight={self.weight:.4f}, generations={self.generations}, "
            f"evaluations={self.evaluations}, elapsed={self.elapsed:.2f}s)"
        )


@dataclass(frozen=True)
class ApSolution:
    """Optimal matching of a square cost matrix; ``perm`` is 1-based."""
    perm: tuple[int, ...]
    value: float

    @property
    def columns(self) -> np.ndarray:
        """0-based column index per row."""
        return np.asarray(self.perm, dtype=np.int64) - 1


@dataclass(frozen=True)
class ExactResult:
    """Proven optimum of a small instance."""
    optimum: Assignment
    value: float
    nodes: int


@dataclass(frozen=True)
class InstanceDescriptor:
    """A generated instance: family, perturbation flag, shape, index and seed."""
    family: str
    shape: ProblemShape
    index: int = 1
    perturbed: bool = False
    seed: Optional[int] = None

    def __post_init__(self) -> None:
        if self.family not in FAMILIES:
            raise DomainError(f"unknown instance family {self.family!r}; supported: {', '.join(FAMILIES)}")
        if not 1 <= self.index <= MAX_INDEX:
            raise DomainError(f"instance index {self.index} outside 1..{MAX_INDEX}")
        if self.seed is None:
            object.__setattr__(self, "seed", self.shape.s + self.shape.n + self.index)

    @property
    def token(self) -> str:
        """Family token as written in instance files (``cc``, ``ccp``, ...)."""
        return self.family + ("p" if self.perturbed else "")

    @property
    def type_name(self) -> str:
        """Instance type name, e.g. ``4sr30p``."""
        return f"{self.shape.s}{self.family}{self.shape.n}{'p' if self.perturbed else ''}"

    @property
    def name(self) -> str:
        """Per-instance name, e.g. ``4sr30p_3``."""
        return f"{self.type_name}_{self.index}"

    @property
    def seed_overridden(self) -> bool:
        return self.seed != self.shape.s + self.shape.n + self.index

    @classmethod
    def from_token(cls, token: str, s: int, n: int, index: int = 1, seed: Optional[int] = None) -> InstanceDescriptor:
        perturbed = token.endswith("p")
        family = token[:-1] if perturbed else token
        return cls(family=family, shape=ProblemShape(s, n), index=index, perturbed=perturbed, seed=seed)

    @classmethod
    def from_type_name(cls, type_name: str, index: int = 1) -> InstanceDescriptor:
        """Parse ``<s><family><n>[p]`` such as ``4sr30p``."""
        match = _TYPE_NAME.match(type_name.strip().lower())
        if match is None:
            raise DomainError(f"bad instance type {type_name!r}; expected e.g. 3cc40 or 4sr30p")
        s, family, n, p = match.groups()
        return cls(family=family, shape=ProblemShape(int(s), int(n)), index=index, perturbed=bool(p))


@dataclass(frozen=True)
class ResultRow:
    """One line of benchmark output."""
    instance: str
    solver: str
    budget: str
    seed: int
    value: float
    error_pct: Optional[float]
    generations: int
    evaluations: int
    elapsed: float
