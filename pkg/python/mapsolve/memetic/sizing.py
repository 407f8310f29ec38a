"""Dynamic generation size control."""

from __future__ import annotations

import math

from mapsolve.exceptions import DomainError
from mapsolve.memetic.params import MIN_GENERATION_SIZE


def next_gen_size(m_real: float, T: float, t: float, delta: float, I: int, i: int, k: float) -> float:
    """Real-valued size of generation ``i + 1``.

    Before the prescribed generation count *I* is reached the size follows
    the remaining time per remaining generation, changing by at most a
    factor *k* either way; afterwards it grows by *k*.
    """
    if not delta > 0:
        raise DomainError(f"generation time must be positive, got {delta}")
    if not k > 1:
        raise DomainError(f"size change limit must exceed 1, got {k}")
    if i < I:
        ratio = (T - t) / (delta * (I - i))
        return m_real * max(min(ratio, k), 1.0 / k)
    return m_real * k


def round_gen_size(m_real: float, m_prev: int, p: int) -> int:
    """Integer size whose crossover count ``(p * m - m_prev) / 2`` is whole; at least 4."""
    if not m_real > 0:
        raise DomainError(f"generation size must be positive, got {m_real}")
    m = math.floor(m_real)
    if (p * m - m_prev) % 2 != 0:
        m += 1
    return max(MIN_GENERATION_SIZE, m)


def crossover_count(m_next: int, m: int, p: int) -> int:
    """Number of crossover calls for the next generation, unclamped."""
    return (p * m_next - m) // 2
