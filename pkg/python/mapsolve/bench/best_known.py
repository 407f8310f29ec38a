"""Best known values and solution errors for result rows."""

from __future__ import annotations

import dataclasses
from pathlib import Path
from typing import Iterable, Mapping, Optional

from mapsolve.core import solution_error
from mapsolve.exceptions import BestKnownMissingError, InstanceFormatError
from mapsolve.logging import get_logger
from mapsolve.types import ResultRow

logger = get_logger(__name__)

PUBLISHED_BEST = Path(__file__).parent / "data" / "published_best.yaml"


def load_best_known(source: str | Path) -> dict[str, float]:
    """Load a ``name: value`` YAML mapping; ``"published"`` selects the bundled table."""
    import yaml

    path = PUBLISHED_BEST if str(source) == "published" else Path(source)
    raw = yaml.safe_load(path.read_text())
    if not isinstance(raw, dict):
        raise InstanceFormatError("expected a mapping of instance names to values", path=str(path))
    try:
        return {str(k): float(v) for k, v in raw.items()}
    except (TypeError, ValueError):
        raise InstanceFormatError("best known values must be numbers", path=str(path)) from None


def type_of(instance: str) -> str:
    """``3cc40_1`` -> ``3cc40``; names without an index come back unchanged."""
    head, sep, tail = instance.rpartition("_")
    return head if sep and tail.isdigit() else instance


def lookup(best: Mapping[str, float], instance: str) -> Optional[float]:
    """Per-instance value first, then the value of the instance's type."""
    if instance in best:
        return best[instance]
    return best.get(type_of(instance))


def best_from_rows(rows: Iterable[ResultRow]) -> dict[str, float]:
    """Lowest value observed per instance across every solver and budget."""
    best: dict[str, float] = {}
    for row in rows:
        if row.instance not in best or row.value < best[row.instance]:
            best[row.instance] = row.value
    return best


def attach_errors(
    rows: list[ResultRow],
    best: Optional[Mapping[str, float]] = None,
    *,
    best_from_run: bool = False,
) -> list[ResultRow]:
    """Fill ``error_pct`` for every row.

    Without *best_from_run* every instance needs a best known value.
    With it, instances lacking one fall back to the best value in *rows*,
    and a warning names them.

    Raises:
        BestKnownMissingError: If values are missing and *best_from_run*
            is not set.
    """
    best = dict(best or {})
    missing = sorted({r.instance for r in rows if lookup(best, r.instance) is None})
    if missing:
        if not best_from_run:
            raise BestKnownMissingError(missing)
        observed = best_from_rows(rows)
        for name in missing:
            best[name] = observed[name]
        logger.warning("best known values taken from this run", instances=len(missing))

    return [dataclasses.replace(r, error_pct=solution_error(r.value, lookup(best, r.instance))) for r in rows]
