"""Knuth's subtractive random number generator (lag 55).

Seeded exactly like the .NET ``System.Random`` class, so a seed yields the
same integer stream in any language that follows the same recipe. For seed 0
the raw stream starts 1559595546, 1755192844, 1649316166.
"""

from __future__ import annotations

from typing import MutableSequence, TypeVar

from mapsolve.exceptions import DomainError

T = TypeVar("T")

_MBIG = 2147483647
_MSEED = 161803398
_INT_MIN = -2147483648


class SubtractiveRandom:
    """Lagged-Fibonacci generator ``x[k] = x[k-55] - x[k-24] mod (2^31 - 1)``.

    Single-owner mutable state: never share one instance between concurrent
    tasks.
    """

    def __init__(self, seed: int):
        self._seed = seed
        subtraction = _MBIG if seed == _INT_MIN else abs(seed)
        # Values above 2^31 are folded in so the recipe stays well defined.
        subtraction %= _MBIG + 1
        mj = _MSEED - subtraction
        table = [0] * 56
        table[55] = mj
        mk = 1
        for i in range(1, 55):
            ii = (21 * i) % 55
            table[ii] = mk
            mk = mj - mk
            if mk < 0:
                mk += _MBIG
            mj = table[ii]
        for _ in range(4):
            for i in range(1, 56):
                table[i] -= table[1 + (i + 30) % 55]
                if table[i] < 0:
                    table[i] += _MBIG
        self._table = table
        self._inext = 0
        self._inextp = 21

    @property
    def seed(self) -> int:
        return self._seed

    def _step(self) -> int:
        inext = self._inext + 1
        if inext >= 56:
            inext = 1
        inextp = self._inextp + 1
        if inextp >= 56:
            inextp = 1
        value = self._table[inext] - self._table[inextp]
        if value == _MBIG:
            value -= 1
        if value < 0:
            value += _MBIG
        self._table[inext] = value
        self._inext = inext
        self._inextp = inextp
        return value

    def next_raw(self) -> int:
        """Next value in ``[0, 2^31 - 1)``."""
        return self._step()

    def next_double(self) -> float:
        """Uniform in ``[0, 1)``; one state step."""
        return self._step() * (1.0 / _MBIG)

    def next_int(self, lo: int, hi: int) -> int:
        """Uniform integer in ``[lo, hi)``; one state step."""
        if lo >= hi:
            raise DomainError(f"empty range [{lo}, {hi})")
        if hi - lo > _MBIG:
            raise DomainError(f"range [{lo}, {hi}) wider than 2^31 - 1")
        return int(self._step() * (1.0 / _MBIG) * (hi - lo)) + lo

    def permutation(self, size: int) -> list[int]:
        """Random permutation of ``range(size)`` (Fisher-Yates, high index first)."""
        perm = list(range(size))
        self.shuffle(perm)
        return perm

    def shuffle(self, items: MutableSequence[T]) -> None:
        for i in range(len(items) - 1, 0, -1):
            j = self.next_int(0, i + 1)
            items[i], items[j] = items[j], items[i]

    def __repr__(self) -> str:
        return f"SubtractiveRandom(seed={self._seed})"


def prng_next_int(rng: SubtractiveRandom, lo: int, hi: int) -> int:
    """Uniform integer in ``[lo, hi)`` from *rng*; one state step."""
    return rng.next_int(lo, hi)
