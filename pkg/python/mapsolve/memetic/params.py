"""Memetic algorithm parameters and run budgets."""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Optional

from mapsolve.exceptions import DomainError

MIN_GENERATION_SIZE = 4

_DETERMINISTIC = re.compile(r"^\s*(\d+)\s*[xX]\s*(\d+)\s*$")


@dataclass(frozen=True)
class MemeticParams:
    """Tuning constants of the memetic algorithm.

    Attributes:
        p_m: Probability that a non-best member is mutated.
        mu_m: Perturbation strength used by mutation.
        mu_f: Perturbation strength used to build the first generation.
        p: How many times more candidates than survivors are produced.
        k: Bound on the per-generation size change factor.
        I: Prescribed number of generations in time mode.
        crossover_bias: Probability that a crossover pairing goes straight
            (first parent's vector to the first child).
    """
    p_m: float = 0.5
    mu_m: float = 0.1
    mu_f: float = 0.2
    p: int = 3
    k: float = 1.25
    I: int = 50
    crossover_bias: float = 0.8

    def __post_init__(self) -> None:
        problems = []
        if not 0.0 <= self.p_m <= 1.0:
            problems.append(f"p_m={self.p_m} not in [0, 1]")
        if not 0.0 <= self.crossover_bias <= 1.0:
            problems.append(f"crossover_bias={self.crossover_bias} not in [0, 1]")
        for name in ("mu_m", "mu_f"):
            value = getattr(self, name)
            if not 0.0 < value <= 1.0:
                problems.append(f"{name}={value} not in (0, 1]")
        if self.p < 1:
            problems.append(f"p={self.p} < 1")
        if not self.k > 1.0:
            problems.append(f"k={self.k} must exceed 1")
        if self.I < 1:
            problems.append(f"I={self.I} < 1")
        if problems:
            raise DomainError("invalid memetic parameters: " + "; ".join(problems))


@dataclass(frozen=True)
class Budget:
    """Either a wall-clock limit in seconds or a fixed ``generations x size`` schedule."""
    seconds: Optional[float] = None
    generations: Optional[int] = None
    size: Optional[int] = None

    def __post_init__(self) -> None:
        if self.seconds is not None:
            if self.generations is not None or self.size is not None:
                raise DomainError("a budget is either timed or deterministic, not both")
            if not self.seconds > 0:
                raise DomainError(f"time budget must be positive, got {self.seconds}")
        else:
            if self.generations is None or self.size is None:
                raise DomainError("deterministic budget needs both generations and size")
            if self.generations < 1:
                raise DomainError(f"generation count must be at least 1, got {self.generations}")
            if self.size < MIN_GENERATION_SIZE:
                raise DomainError(f"generation size must be at least {MIN_GENERATION_SIZE}, got {self.size}")

    @classmethod
    def timed(cls, seconds: float) -> Budget:
        return cls(seconds=float(seconds))

    @classmethod
    def deterministic(cls, generations: int, size: int) -> Budget:
        return cls(generations=generations, size=size)

    @classmethod
    def parse(cls, text: str) -> Budget:
        """Parse ``"<G>x<M>"`` as deterministic or a number as seconds."""
        match = _DETERMINISTIC.match(text)
        if match:
            return cls.deterministic(int(match.group(1)), int(match.group(2)))
        try:
            return cls.timed(float(text))
        except ValueError:
            raise DomainError(f"bad budget {text!r}: expected seconds or '<generations>x<size>'") from None

    @property
    def is_timed(self) -> bool:
        return self.seconds is not None

    @property
    def label(self) -> str:
        """Value written to the ``budget_s`` column."""
        if self.is_timed:
            return f"{self.seconds:g}"
        return f"{self.generations}x{self.size}"

    def __repr__(self) -> str:
        if self.is_timed:
            return f"Budget(seconds={self.seconds:g})"
        return f"Budget({self.generations}x{self.size})"
