"""The memetic loop: first generation, then mutate, cross and select."""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Callable, Iterable, Optional

from mapsolve.core import assignment_weight
from mapsolve.heuristics.factory import create_local_search
from mapsolve.heuristics.greedy import greedy_construct
from mapsolve.heuristics.protocol import LocalSearch
from mapsolve.instances.prng import SubtractiveRandom
from mapsolve.logging import get_logger
from mapsolve.memetic.operators import crossover, perturb
from mapsolve.memetic.params import MIN_GENERATION_SIZE, Budget, MemeticParams
from mapsolve.memetic.sizing import crossover_count, next_gen_size, round_gen_size
from mapsolve.oracle import CountingOracle, WeightOracle
from mapsolve.types import Assignment, GenerationRecord, SolveReport

logger = get_logger(__name__)

Clock = Callable[[], float]

# Smallest generation time handed to the size controller.
_MIN_DELTA = 1e-6
# First generation gives up on reaching 4 distinct members after this many tries.
_FIRST_GENERATION_ATTEMPTS = 64


@dataclass(frozen=True)
class GenerationState:
    """One generation, best member first.

    Attributes:
        members: Distinct assignments sorted by weight ascending.
        weights: Weight of each member.
        m_real: Real-valued size from the size controller.
        m: Actual size, ``len(members)``.
        i: 1-based generation index.
        delta: Seconds spent producing this generation.
        clamped: True if the crossover count came out negative and was set to 0.
    """
    members: tuple[Assignment, ...]
    weights: tuple[float, ...]
    m_real: float
    m: int
    i: int
    delta: float
    clamped: bool = False

    @property
    def best(self) -> Assignment:
        return self.members[0]

    @property
    def best_weight(self) -> float:
        return self.weights[0]


def select(candidates: Iterable[tuple[float, Assignment]], size: int) -> list[tuple[float, Assignment]]:
    """The *size* lightest distinct candidates; ties broken by vector order."""
    distinct: dict[tuple, tuple[float, Assignment]] = {}
    for weight, a in candidates:
        distinct.setdefault(a.vectors, (weight, a))
    ranked = sorted(distinct.values(), key=lambda wa: (wa[0], wa[1].vectors))
    return ranked[:size]


def _state(ranked, m_real: float, i: int, delta: float, clamped: bool = False) -> GenerationState:
    return GenerationState(
        members=tuple(a for _, a in ranked),
        weights=tuple(w for w, _ in ranked),
        m_real=m_real,
        m=len(ranked),
        i=i,
        delta=max(delta, _MIN_DELTA),
        clamped=clamped,
    )


def first_generation(
    oracle: WeightOracle,
    params: MemeticParams,
    budget: Budget,
    rng: SubtractiveRandom,
    *,
    ls: LocalSearch,
    clock: Clock = time.perf_counter,
) -> GenerationState:
    """Local-search-improved perturbations of one Greedy assignment.

    Timed budgets keep producing members until ``T / I`` has elapsed and
    at least 4 distinct members exist; deterministic budgets stop at the
    configured size. Both give up after a bounded number of attempts when
    the instance has too few distinct local optima.
    """
    start = clock()
    greedy = greedy_construct(oracle)
    members: dict[tuple, tuple[float, Assignment]] = {}
    attempts = 0

    if budget.is_timed:
        slot = budget.seconds / params.I

        def done() -> bool:
            if clock() - start < slot:
                return False
            return len(members) >= MIN_GENERATION_SIZE or attempts >= _FIRST_GENERATION_ATTEMPTS
    else:
        target = budget.size
        cap = max(_FIRST_GENERATION_ATTEMPTS, 4 * target)

        def done() -> bool:
            return len(members) >= target or attempts >= cap

    while not done():
        child = ls(oracle, perturb(greedy, params.mu_f, rng))
        attempts += 1
        members.setdefault(child.vectors, (assignment_weight(oracle, child), child))

    ranked = select(members.values(), len(members))
    state = _state(ranked, float(len(ranked)), 1, clock() - start)
    logger.debug("first generation", size=state.m, attempts=attempts, best=state.best_weight)
    return state


def next_generation(
    prev: GenerationState,
    params: MemeticParams,
    oracle: WeightOracle,
    rng: SubtractiveRandom,
    budget: Budget,
    *,
    ls: LocalSearch,
    elapsed: float = 0.0,
    clock: Clock = time.perf_counter,
) -> GenerationState:
    """``selection({best} ∪ mutation(rest) ∪ crossovers)``.

    Args:
        elapsed: Seconds of the budget already used; only timed budgets
            read it.
    """
    start = clock()
    if budget.is_timed:
        m_real = next_gen_size(prev.m_real, budget.seconds, elapsed, prev.delta, params.I, prev.i, params.k)
        m_next = round_gen_size(m_real, prev.m, params.p)
    else:
        m_real = float(budget.size)
        m_next = budget.size

    pool: list[tuple[float, Assignment]] = [(prev.weights[0], prev.members[0])]
    for weight, member in zip(prev.weights[1:], prev.members[1:]):
        if rng.next_double() < params.p_m:
            mutant = ls(oracle, perturb(member, params.mu_m, rng))
            pool.append((assignment_weight(oracle, mutant), mutant))
        else:
            pool.append((weight, member))

    wanted = crossover_count(m_next, prev.m, params.p)
    clamped = wanted < 0
    if clamped:
        logger.info("crossover count clamped", generation=prev.i + 1, wanted=wanted)
    if prev.m >= 2:
        for _ in range(max(0, wanted)):
            u = rng.next_int(0, prev.m)
            v = rng.next_int(0, prev.m)
            while v == u:
                v = rng.next_int(0, prev.m)
            for child in crossover(prev.members[u], prev.members[v], rng, params.crossover_bias):
                child = ls(oracle, child)
                pool.append((assignment_weight(oracle, child), child))

    ranked = select(pool, m_next)
    if len(ranked) < m_next:
        logger.debug("too few distinct candidates", wanted=m_next, kept=len(ranked))
    return _state(ranked, m_real, prev.i + 1, clock() - start, clamped)


def run(
    oracle: WeightOracle,
    params: Optional[MemeticParams] = None,
    budget: Optional[Budget] = None,
    ls: Optional[LocalSearch] = None,
    rng: Optional[SubtractiveRandom] = None,
    *,
    seed: int = 0,
    clock: Clock = time.perf_counter,
) -> SolveReport:
    """Run the memetic algorithm and report the best assignment found.

    Timed budgets are checked between generations, so the generation in
    flight when the time runs out still completes.

    Args:
        oracle: Instance to solve.
        params: Algorithm constants; defaults to :class:`MemeticParams`.
        budget: Defaults to 3 seconds.
        ls: Local search; defaults to MDV2.
        rng: Random stream; defaults to ``SubtractiveRandom(seed)``.
    """
    params = params or MemeticParams()
    budget = budget or Budget.timed(3.0)
    ls = ls or create_local_search("mdv2")
    rng = rng or SubtractiveRandom(seed)
    counting = CountingOracle(oracle)

    start = clock()
    state = first_generation(counting, params, budget, rng, ls=ls, clock=clock)
    best, best_weight = state.best, state.best_weight
    history = [GenerationRecord(state.i, state.m, best_weight, clock() - start)]
    clamped = 0

    def more() -> bool:
        if budget.is_timed:
            return clock() - start < budget.seconds
        return state.i < budget.generations

    while more():
        state = next_generation(
            state, params, counting, rng, budget, ls=ls, elapsed=clock() - start, clock=clock
        )
        clamped += int(state.clamped)
        if state.best_weight < best_weight:
            best, best_weight = state.best, state.best_weight
        history.append(GenerationRecord(state.i, state.m, best_weight, clock() - start))
        logger.debug("generation", index=state.i, size=state.m, best=best_weight)

    elapsed = clock() - start
    logger.info(
        "memetic run finished",
        local_search=ls.name,
        budget=budget.label,
        generations=state.i,
        weight=best_weight,
        evaluations=counting.evaluations,
        elapsed=elapsed,
    )
    return SolveReport(
        best=best,
        weight=best_weight,
        generations=state.i,
        evaluations=counting.evaluations,
        elapsed=elapsed,
        history=tuple(history),
        clamped_crossovers=clamped,
    )
