"""Greedy construction and the local search ladder."""

from mapsolve.heuristics.combined import CombinedSearch, combine
from mapsolve.heuristics.dimensionwise import DV, MDV, DimensionSplit, dimension_splits, dv, mdv
from mapsolve.heuristics.factory import LOCAL_SEARCHES, create_local_search
from mapsolve.heuristics.greedy import greedy_construct
from mapsolve.heuristics.opt import ThreeOpt, TwoOpt, three_opt, two_opt
from mapsolve.heuristics.protocol import IdentitySearch, LocalSearch, improves

__all__ = [
    "CombinedSearch",
    "DV",
    "DimensionSplit",
    "IdentitySearch",
    "LOCAL_SEARCHES",
    "LocalSearch",
    "MDV",
    "ThreeOpt",
    "TwoOpt",
    "combine",
    "create_local_search",
    "dimension_splits",
    "dv",
    "greedy_construct",
    "improves",
    "mdv",
    "three_opt",
    "two_opt",
]
