"""mapsolve exception hierarchy."""

from __future__ import annotations

from typing import Optional, Sequence


class MapSolveError(Exception):
    """Base exception for all mapsolve errors."""
    pass


class ValidationError(MapSolveError):
    """An assignment is infeasible or does not match the problem shape."""

    def __init__(self, message: str, violations: Sequence[object] = ()):
        super().__init__(message)
        self.violations = list(violations)

    def __reduce__(self):
        return type(self), (self.args[0], self.violations)


class DomainError(MapSolveError, ValueError):
    """An argument lies outside the domain of the operation."""
    pass


class InstanceFormatError(MapSolveError):
    """Malformed instance, solution or results file."""

    def __init__(self, message: str, line: Optional[int] = None, path: Optional[str] = None):
        where = ""
        if path is not None:
            where = f"{path}:"
        if line is not None:
            where = f"{where}{line}:"
        super().__init__(f"{where} {message}" if where else message)
        self._message = message
        self.line = line
        self.path = path

    def __reduce__(self):
        return type(self), (self._message, self.line, self.path)


class NodeLimitError(MapSolveError):
    """Exact search refused because the estimated work exceeds the node limit."""

    def __init__(self, work: int, limit: int):
        super().__init__(
            f"exact search needs ~{work} work units, above the node limit {limit}"
        )
        self.work = work
        self.limit = limit

    def __reduce__(self):
        return type(self), (self.work, self.limit)


class BestKnownMissingError(MapSolveError):
    """Benchmark rows without a best-known reference value."""

    def __init__(self, instances: Sequence[str]):
        names = ", ".join(sorted(set(instances)))
        super().__init__(
            f"no best-known value for: {names} (pass --best-from-run to use the best observed value)"
        )
        self.instances = sorted(set(instances))

    def __reduce__(self):
        return type(self), (self.instances,)
