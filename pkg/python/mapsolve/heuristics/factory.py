"""Factory for local search procedures."""

from __future__ import annotations

from mapsolve.heuristics.combined import combine
from mapsolve.heuristics.dimensionwise import DV, MDV
from mapsolve.heuristics.opt import ThreeOpt, TwoOpt
from mapsolve.heuristics.protocol import IdentitySearch, LocalSearch

LOCAL_SEARCHES = ("none", "2opt", "3opt", "dv", "mdv", "dv2", "mdv2", "mdv3")

_ALIASES = {"2-opt": "2opt", "3-opt": "3opt"}


def create_local_search(name: str = "mdv2") -> LocalSearch:
    """Create a local search by name.

    Args:
        name: One of ``none``, ``2opt``, ``3opt``, ``dv``, ``mdv``, ``dv2``
            (2-opt then DV), ``mdv2`` (2-opt then MDV) or ``mdv3``
            (3-opt then MDV).

    Raises:
        ValueError: If *name* is not recognized.
    """
    key = _ALIASES.get(name.lower(), name.lower())
    if key == "none":
        return IdentitySearch()
    elif key == "2opt":
        return TwoOpt()
    elif key == "3opt":
        return ThreeOpt()
    elif key == "dv":
        return DV
    elif key == "mdv":
        return MDV
    elif key == "dv2":
        return combine(TwoOpt(), DV, name="dv2")
    elif key == "mdv2":
        return combine(TwoOpt(), MDV, name="mdv2")
    elif key == "mdv3":
        return combine(ThreeOpt(), MDV, name="mdv3")
    else:
        raise ValueError(
            f"Unknown local search: {name!r}. Supported: {', '.join(repr(n) for n in LOCAL_SEARCHES)}"
        )
