"""mapsolve - heuristics and a memetic algorithm for the multidimensional assignment problem."""

__version__ = "0.1.0"

from mapsolve.logging import configure_logging

# Initialize logging with environment defaults
configure_logging()

_TYPES = ("Assignment", "ProblemShape", "SolveReport", "ApSolution", "ExactResult", "InstanceDescriptor", "ResultRow")
_ERRORS = ("MapSolveError", "ValidationError", "DomainError", "InstanceFormatError", "NodeLimitError")


def __getattr__(name):
    """Lazy imports so the CLI starts without loading scipy and pandas."""
    if name in _TYPES:
        from mapsolve import types
        return getattr(types, name)
    if name in _ERRORS:
        from mapsolve import exceptions
        return getattr(exceptions, name)
    if name in ("make_instance", "open_instance"):
        from mapsolve.instances import factory
        return getattr(factory, name)
    if name == "create_solver":
        from mapsolve.solvers import create_solver
        return create_solver
    if name == "create_local_search":
        from mapsolve.heuristics.factory import create_local_search
        return create_local_search
    raise AttributeError(f"module 'mapsolve' has no attribute {name!r}")


__all__ = [
    *_TYPES,
    *_ERRORS,
    "create_local_search",
    "create_solver",
    "make_instance",
    "open_instance",
]
