"""Instance files.

Format (UTF-8, line based)::

    MAPLIB 1
    descriptor | explicit
    <family> <s> <n> <seed> [<index>]        (descriptor)
    <s> <n>, then n^s weights, row-major     (explicit)

The optional descriptor ``<index>`` is written only when the seed is not
``s + n + index``.
"""

from __future__ import annotations

import os
from pathlib import Path
from typing import Union

import numpy as np

from mapsolve.exceptions import DomainError, InstanceFormatError
from mapsolve.oracle import TensorOracle
from mapsolve.types import FAMILIES, MAX_INDEX, InstanceDescriptor, ProblemShape

MAGIC = "MAPLIB 1"
TOKENS = tuple(f + p for f in FAMILIES for p in ("", "p"))

Instance = Union[InstanceDescriptor, TensorOracle]


def write_instance(instance: Instance, path: str | os.PathLike) -> None:
    Path(path).write_text(format_instance(instance), encoding="utf-8")


def format_instance(instance: Instance) -> str:
    if isinstance(instance, InstanceDescriptor):
        fields = [instance.token, instance.shape.s, instance.shape.n, instance.seed]
        if instance.seed_overridden:
            fields.append(instance.index)
        return f"{MAGIC}\ndescriptor\n{' '.join(str(f) for f in fields)}\n"

    shape = instance.shape
    lines = [MAGIC, "explicit", f"{shape.s} {shape.n}"]
    flat = instance.weights.reshape(-1)
    for start in range(0, flat.size, shape.n):
        lines.append(" ".join(repr(float(w)) for w in flat[start:start + shape.n]))
    return "\n".join(lines) + "\n"


def read_instance(path: str | os.PathLike) -> Instance:
    """Parse an instance file into a descriptor or an explicit tensor oracle.

    Raises:
        InstanceFormatError: On any malformed line; the error carries the
            1-based line number.
    """
    path = str(path)
    return parse_instance(Path(path).read_text(encoding="utf-8"), path=path)


def parse_instance(text: str, path: str | None = None) -> Instance:
    lines = text.splitlines()

    def line(no: int) -> str:
        if no > len(lines):
            raise InstanceFormatError("unexpected end of file", line=no, path=path)
        return lines[no - 1].strip()

    if line(1) != MAGIC:
        raise InstanceFormatError(f"expected {MAGIC!r}", line=1, path=path)
    kind = line(2)
    header = line(3).split()

    if kind == "descriptor":
        if len(header) not in (4, 5):
            raise InstanceFormatError("expected '<family> <s> <n> <seed> [<index>]'", line=3, path=path)
        token = header[0]
        if token not in TOKENS:
            raise InstanceFormatError(f"unknown family {token!r}; expected one of {', '.join(TOKENS)}", line=3, path=path)
        try:
            s, n, seed = (int(t) for t in header[1:4])
            index = int(header[4]) if len(header) == 5 else seed - s - n
            if len(header) == 4 and not 1 <= index <= MAX_INDEX:
                index = 1  # seed set by hand, no index recorded
            return InstanceDescriptor.from_token(token, s, n, index=index, seed=seed)
        except (ValueError, DomainError) as exc:
            raise InstanceFormatError(f"bad descriptor: {exc}", line=3, path=path) from None

    if kind == "explicit":
        if len(header) != 2:
            raise InstanceFormatError("expected '<s> <n>'", line=3, path=path)
        try:
            shape = ProblemShape(int(header[0]), int(header[1]))
        except (ValueError, DomainError) as exc:
            raise InstanceFormatError(f"bad shape: {exc}", line=3, path=path) from None

        values: list[float] = []
        for no in range(4, len(lines) + 1):
            for tok in lines[no - 1].split():
                try:
                    values.append(float(tok))
                except ValueError:
                    raise InstanceFormatError(f"bad weight {tok!r}", line=no, path=path) from None
        expected = shape.vector_count
        if len(values) != expected:
            raise InstanceFormatError(
                f"expected {expected} weights (n^s for s={shape.s}, n={shape.n}), found {len(values)}",
                line=len(lines), path=path,
            )
        try:
            return TensorOracle(np.asarray(values).reshape((shape.n,) * shape.s))
        except DomainError as exc:
            raise InstanceFormatError(str(exc), line=4, path=path) from None

    raise InstanceFormatError(f"unknown instance kind {kind!r}; expected 'descriptor' or 'explicit'", line=2, path=path)
