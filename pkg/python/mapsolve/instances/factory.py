"""Factory for generated instances."""

from __future__ import annotations

import os
from pathlib import Path

from mapsolve.instances.graph import GraphOracle, generate_edge_graph
from mapsolve.instances.io import read_instance
from mapsolve.instances.perturbation import PerturbedOracle
from mapsolve.logging import get_logger
from mapsolve.oracle import DENSE_LIMIT, WeightOracle, materialize
from mapsolve.types import InstanceDescriptor

logger = get_logger(__name__)


def make_instance(desc: InstanceDescriptor, *, dense_limit: int = DENSE_LIMIT) -> WeightOracle:
    """Build the weight oracle of a generated instance.

    The edge graph is drawn from ``desc.seed``; perturbed families add the
    per-clique offset derived from the same seed. Instances with at most
    *dense_limit* vectors are materialized into a dense tensor (pass 0 to
    keep the lazy oracle).

    Raises:
        DomainError: If the descriptor's shape is invalid.
    """
    if desc.family == "cq" and desc.shape.s == 3:
        logger.info("3-AP CQ instance is identical to CC", instance=desc.name)

    oracle: WeightOracle = GraphOracle(generate_edge_graph(desc.shape, desc.seed), desc.family)
    if desc.perturbed:
        oracle = PerturbedOracle(oracle, desc.seed)
    if desc.shape.vector_count <= dense_limit:
        oracle = materialize(oracle, dense_limit)
    logger.debug("instance built", instance=desc.name, seed=desc.seed, oracle=repr(oracle))
    return oracle


def open_instance(path: str | os.PathLike) -> tuple[str, WeightOracle]:
    """Read an instance file and return its display name and oracle.

    Generated instances are named after their descriptor (``3cc40_1``),
    explicit ones after the file stem.
    """
    instance = read_instance(path)
    if isinstance(instance, InstanceDescriptor):
        return instance.name, make_instance(instance)
    return Path(path).stem, instance
