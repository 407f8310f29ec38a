"""Seeded instance generation (CC, CQ, SR and perturbed families) and instance files."""

from mapsolve.instances.factory import make_instance, open_instance
from mapsolve.instances.graph import (
    EdgeGraph,
    GraphOracle,
    generate_edge_graph,
    weight_cc,
    weight_cq,
    weight_sr,
)
from mapsolve.instances.io import read_instance, write_instance
from mapsolve.instances.perturbation import PerturbedOracle, perturbed_weight
from mapsolve.instances.prng import SubtractiveRandom, prng_next_int

__all__ = [
    "EdgeGraph",
    "GraphOracle",
    "PerturbedOracle",
    "SubtractiveRandom",
    "generate_edge_graph",
    "make_instance",
    "open_instance",
    "perturbed_weight",
    "prng_next_int",
    "read_instance",
    "weight_cc",
    "weight_cq",
    "weight_sr",
    "write_instance",
]
