"""Result tables: CSV I/O and per-family / per-dimension aggregates."""

from __future__ import annotations

import io
import math
import os
import re
from pathlib import Path
from typing import Iterable, Optional

import pandas as pd

from mapsolve.bench.best_known import type_of
from mapsolve.exceptions import DomainError, InstanceFormatError
from mapsolve.types import ResultRow

COLUMNS = ["instance", "solver", "budget_s", "seed", "value", "error_pct", "generations", "evaluations", "elapsed_s"]
AGGREGATE_COLUMNS = ["solver", "budget_s", "group", "error_pct", "types"]

FAMILY_GROUPS = ("CC", "CC p.", "CQ", "CQ p.", "SR", "SR p.")
ALL_GROUP = "All avg."

_TYPE = re.compile(r"^(\d+)(cc|cq|sr)(\d+)(p?)$")


def rows_to_frame(rows: Iterable[ResultRow]) -> pd.DataFrame:
    records = [
        {
            "instance": r.instance,
            "solver": r.solver,
            "budget_s": r.budget,
            "seed": r.seed,
            "value": r.value,
            "error_pct": r.error_pct,
            "generations": r.generations,
            "evaluations": r.evaluations,
            "elapsed_s": r.elapsed,
        }
        for r in rows
    ]
    frame = pd.DataFrame.from_records(records, columns=COLUMNS)
    return frame.astype({"error_pct": "float64", "value": "float64", "elapsed_s": "float64"})


def frame_to_rows(frame: pd.DataFrame) -> list[ResultRow]:
    return [
        ResultRow(
            instance=str(rec["instance"]),
            solver=str(rec["solver"]),
            budget=str(rec["budget_s"]),
            seed=int(rec["seed"]),
            value=float(rec["value"]),
            error_pct=None if pd.isna(rec["error_pct"]) else float(rec["error_pct"]),
            generations=int(rec["generations"]),
            evaluations=int(rec["evaluations"]),
            elapsed=float(rec["elapsed_s"]),
        )
        for rec in frame.to_dict(orient="records")
    ]


def format_rows(rows: Iterable[ResultRow], *, header: bool = True) -> str:
    """CSV text; floats are written in their shortest round-trip form."""
    return rows_to_frame(rows).to_csv(index=False, header=header, lineterminator="\n")


def write_results(rows: Iterable[ResultRow], path: str | os.PathLike) -> None:
    rows_to_frame(rows).to_csv(path, index=False, lineterminator="\n")


def read_results(path_or_text: str | os.PathLike, *, text: bool = False) -> list[ResultRow]:
    """Read rows written by :func:`write_results` without losing float precision.

    Reading stops at the first blank line, so output that carries an
    aggregate block after the rows can be read back directly.
    """
    raw = str(path_or_text) if text else Path(path_or_text).read_text(encoding="utf-8")
    block = raw.split("\n\n", 1)[0]
    try:
        frame = pd.read_csv(
            io.StringIO(block),
            float_precision="round_trip",
            dtype={"instance": str, "solver": str, "budget_s": str},
        )
    except (pd.errors.ParserError, pd.errors.EmptyDataError) as e:
        raise InstanceFormatError(f"unreadable results: {e}", path=None if text else str(path_or_text)) from None
    missing = [c for c in COLUMNS if c not in frame.columns]
    if missing:
        raise InstanceFormatError(
            f"results lack columns: {', '.join(missing)}", path=None if text else str(path_or_text)
        )
    return frame_to_rows(frame[COLUMNS])


def groups_of(type_name: str) -> list[str]:
    """Aggregate groups an instance type contributes to.

    3-AP CC types count towards CQ as well, since 3-AP CQ instances are
    CC instances.
    """
    match = _TYPE.match(type_name)
    if match is None:
        return [ALL_GROUP]
    s, family, _, p = match.groups()
    suffix = " p." if p else ""
    groups = [family.upper() + suffix]
    if int(s) == 3 and family == "cc":
        groups.append("CQ" + suffix)
    groups.extend([f"{int(s)}-AP", ALL_GROUP])
    return groups


def _group_key(group: str) -> tuple[int, int]:
    if group in FAMILY_GROUPS:
        return 0, FAMILY_GROUPS.index(group)
    if group == ALL_GROUP:
        return 2, 0
    return 1, int(group.split("-")[0])


def aggregate(rows: Iterable[ResultRow]) -> pd.DataFrame:
    """Mean error per solver, budget and group.

    Errors are first averaged per instance type, then over the types in a
    group, so every type weighs the same whatever its instance count.

    Raises:
        DomainError: If a row has no error value.
    """
    frame = rows_to_frame(rows)
    if frame.empty:
        return pd.DataFrame(columns=AGGREGATE_COLUMNS)
    if frame["error_pct"].isna().any():
        raise DomainError("rows lack error_pct; attach best known values first")

    frame["type"] = frame["instance"].map(type_of)
    per_type = frame.groupby(["solver", "budget_s", "type"], sort=False)["error_pct"].mean().reset_index()
    per_type["group"] = per_type["type"].map(groups_of)
    exploded = per_type.explode("group")
    table = (
        exploded.groupby(["solver", "budget_s", "group"], sort=False)
        .agg(error_pct=("error_pct", "mean"), types=("type", "size"))
        .reset_index()
    )

    solver_rank = {name: i for i, name in enumerate(pd.unique(frame["solver"]))}
    budget_rank = {name: i for i, name in enumerate(pd.unique(frame["budget_s"]))}
    order = sorted(
        range(len(table)),
        key=lambda i: (
            solver_rank[table.at[i, "solver"]],
            budget_rank[table.at[i, "budget_s"]],
            _group_key(table.at[i, "group"]),
        ),
    )
    return table.iloc[order].reset_index(drop=True)[AGGREGATE_COLUMNS]


def format_aggregates(table: pd.DataFrame) -> str:
    return table.to_csv(index=False, lineterminator="\n")


def group_error(table: pd.DataFrame, solver: str, group: str = ALL_GROUP, budget: Optional[str] = None) -> float:
    """One aggregate cell; NaN when absent."""
    mask = (table["solver"] == solver) & (table["group"] == group)
    if budget is not None:
        mask &= table["budget_s"] == budget
    values = table.loc[mask, "error_pct"]
    return float(values.iloc[0]) if len(values) else math.nan
