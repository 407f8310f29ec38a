"""Assignment validation, weighing, canonical coding and the solution-error metric."""

from __future__ import annotations

import os
from dataclasses import dataclass
from pathlib import Path
from typing import Optional

import numpy as np

from mapsolve.exceptions import DomainError, InstanceFormatError, ValidationError
from mapsolve.oracle import WeightOracle
from mapsolve.types import Assignment, ProblemShape


@dataclass(frozen=True)
class Violation:
    """One reason an assignment is infeasible.

    ``kind`` is ``"count"`` (wrong number of vectors), ``"length"`` (wrong
    number of coordinates), ``"range"`` (coordinate outside 1..n) or
    ``"duplicate"`` (a value repeated within a dimension). ``dimension``
    is 1-based.
    """
    kind: str
    dimension: Optional[int] = None
    value: Optional[int] = None
    vector: Optional[int] = None

    def __str__(self) -> str:
        if self.kind == "duplicate":
            return f"dimension {self.dimension}: value {self.value} used more than once"
        if self.kind == "range":
            return f"vector {self.vector}, dimension {self.dimension}: coordinate {self.value} out of range"
        if self.kind == "length":
            return f"vector {self.vector}: {self.value} coordinates"
        return f"{self.value} vectors"


def validate(a: Assignment, shape: ProblemShape) -> list[Violation]:
    """Check *a* against *shape*. An empty list means feasible."""
    violations: list[Violation] = []
    if a.n != shape.n:
        violations.append(Violation("count", value=a.n))
    well_formed = True
    for i, vector in enumerate(a.vectors, start=1):
        if len(vector) != shape.s:
            violations.append(Violation("length", value=len(vector), vector=i))
            well_formed = False
            continue
        for d, c in enumerate(vector, start=1):
            if not 1 <= c <= shape.n:
                violations.append(Violation("range", dimension=d, value=c, vector=i))
    if not well_formed:
        return violations

    for d in range(shape.s):
        seen: set[int] = set()
        reported: set[int] = set()
        for vector in a.vectors:
            c = vector[d]
            if c in seen and c not in reported:
                violations.append(Violation("duplicate", dimension=d + 1, value=c))
                reported.add(c)
            seen.add(c)
    return violations


def is_feasible(a: Assignment, shape: ProblemShape) -> bool:
    return not validate(a, shape)


def ensure_feasible(a: Assignment, shape: ProblemShape) -> None:
    """Raise :class:`ValidationError` listing every violation of *a*."""
    violations = validate(a, shape)
    if violations:
        detail = "; ".join(str(v) for v in violations[:5])
        more = f" (+{len(violations) - 5} more)" if len(violations) > 5 else ""
        raise ValidationError(f"infeasible assignment for {shape}: {detail}{more}", violations)


def shape_of(a: Assignment) -> ProblemShape:
    if a.n == 0:
        raise ValidationError("empty assignment")
    return ProblemShape(s=a.s, n=a.n)


def canonicalize(a: Assignment) -> Assignment:
    """Sort the vectors of a feasible assignment by first coordinate."""
    ensure_feasible(a, shape_of(a))
    return Assignment(tuple(sorted(a.vectors, key=lambda v: v[0])))


def assignment_weight(oracle: WeightOracle, a: Assignment) -> float:
    """Total weight of a feasible assignment; weighs exactly n vectors."""
    ensure_feasible(a, oracle.shape)
    return table_weight(oracle, a.table())


def table_weight(oracle: WeightOracle, table: np.ndarray) -> float:
    """Total weight of a 0-based table; no feasibility check."""
    return float(oracle.weigh(table).sum())


def assignments_equal(a: Assignment, b: Assignment) -> bool:
    """Structural equality of the vector sets."""
    if (a.n, a.s) != (b.n, b.s):
        raise ValidationError(f"shape mismatch: s={a.s}, n={a.n} vs s={b.s}, n={b.n}")
    return canonicalize(a).vectors == canonicalize(b).vectors


def solution_error(v: float, v_best: float) -> float:
    """Relative gap to the best known value, in percent."""
    if not v_best > 0:
        raise DomainError(f"best known value must be positive, got {v_best}")
    return (v - v_best) / v_best * 100.0


def write_solution(path: str | os.PathLike, a: Assignment, weight: float) -> None:
    """Write ``s n``, the canonical vectors, then ``weight <value>``."""
    a = canonicalize(a)
    lines = [f"{a.s} {a.n}"]
    lines.extend(" ".join(str(c) for c in v) for v in a.vectors)
    lines.append(f"weight {float(weight)!r}")
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")


def read_solution(path: str | os.PathLike) -> tuple[Assignment, float]:
    """Parse a solution file written by :func:`write_solution`."""
    path = str(path)
    lines = [ln.strip() for ln in Path(path).read_text(encoding="utf-8").splitlines()]
    if not lines:
        raise InstanceFormatError("empty solution file", line=1, path=path)
    try:
        s, n = (int(t) for t in lines[0].split())
    except ValueError:
        raise InstanceFormatError("expected header 's n'", line=1, path=path) from None

    vectors = []
    for lineno in range(2, n + 2):
        if lineno > len(lines):
            raise InstanceFormatError(f"expected {n} vectors, file ends early", line=lineno, path=path)
        try:
            vector = tuple(int(t) for t in lines[lineno - 1].split())
        except ValueError:
            raise InstanceFormatError("vector coordinates must be integers", line=lineno, path=path) from None
        if len(vector) != s:
            raise InstanceFormatError(f"expected {s} coordinates, got {len(vector)}", line=lineno, path=path)
        vectors.append(vector)

    tail_line = n + 2
    tail = lines[tail_line - 1].split() if tail_line <= len(lines) else []
    if len(tail) != 2 or tail[0] != "weight":
        raise InstanceFormatError("expected 'weight <value>'", line=tail_line, path=path)
    try:
        weight = float(tail[1])
    except ValueError:
        raise InstanceFormatError(f"bad weight {tail[1]!r}", line=tail_line, path=path) from None

    a = Assignment(tuple(vectors))
    ensure_feasible(a, ProblemShape(s, n))
    return a, weight
