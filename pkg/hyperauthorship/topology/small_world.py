import logging
from dataclasses import dataclass

import networkx as nx
import numpy as np

from ..config import config
from ..errors import (
    DegenerateReferenceError,
    DisconnectedGraphError,
    InvalidParameterError,
    UndefinedMetricError,
)
from ..metrics import average_clustering, path_length_estimate
from ..projection import CoauthorGraph
from ..utils import progress
from ._rewiring import double_edge_swaps, lattice_rule

logger = logging.getLogger(__name__)


def random_reference(graph: CoauthorGraph, niter: int | None = None, seed: int = 0) -> CoauthorGraph:
    """Degree-preserving randomization that keeps the graph connected."""
    if niter is None:
        niter = config.omega_niter
    return double_edge_swaps(graph, niter, seed)


def lattice_reference(graph: CoauthorGraph, niter: int | None = None, seed: int = 0) -> CoauthorGraph:
    """
    Degree-preserving latticization: a swap is kept only when it shortens the total ring distance
    of the two edges, nodes being placed on a ring in sorted author order.
    """
    if niter is None:
        niter = config.omega_niter
    return double_edge_swaps(graph, niter, seed, accept=lattice_rule(graph.n_nodes))


@dataclass(frozen=True)
class SmallWorldEstimate:
    omega: float
    clustering: float
    path_length: float
    random_path_lengths: tuple[float, ...]
    lattice_clusterings: tuple[float, ...]
    niter: int
    nrand: int
    seed: int

    @property
    def random_path_length(self) -> float:
        return float(np.mean(self.random_path_lengths))

    @property
    def lattice_clustering(self) -> float:
        return float(np.mean(self.lattice_clusterings))


def small_world(
    graph: CoauthorGraph,
    niter: int | None = None,
    nrand: int | None = None,
    seed: int = 0,
    n_jobs: int | None = None,
) -> SmallWorldEstimate:
    """
    omega = Lr / L - C / Cl on the unweighted topology, with Lr averaged over nrand random
    references and Cl over nrand lattice references. Replicate i uses seed + i.
    """
    if niter is None:
        niter = config.omega_niter
    if nrand is None:
        nrand = config.omega_nrand
    if nrand < 1:
        raise InvalidParameterError(f"nrand must be at least 1, got {nrand}.")
    if graph.n_nodes < 2:
        raise UndefinedMetricError(f"Omega needs at least 2 nodes, got {graph.n_nodes}.")
    if not nx.is_connected(graph.graph):
        raise DisconnectedGraphError("Omega is only defined on a connected graph; pass the giant component.")

    clustering = average_clustering(graph)
    path_length = path_length_estimate(graph, seed=seed, n_jobs=n_jobs).value

    random_path_lengths: list[float] = []
    lattice_clusterings: list[float] = []
    for replicate in progress(range(nrand), logger, "references", nrand):
        replicate_seed = seed + replicate
        random_graph = random_reference(graph, niter, replicate_seed)
        random_path_lengths.append(
            path_length_estimate(random_graph, seed=replicate_seed, n_jobs=n_jobs).value
        )
        lattice_clusterings.append(average_clustering(lattice_reference(graph, niter, replicate_seed)))

    lattice_clustering = float(np.mean(lattice_clusterings))
    if lattice_clustering == 0.0:
        raise DegenerateReferenceError(
            "Lattice references have zero clustering; omega is undefined for this graph."
        )

    value = float(np.mean(random_path_lengths)) / path_length - clustering / lattice_clustering
    logger.info("omega=%.4f (C=%.4f, L=%.4f, Cl=%.4f)", value, clustering, path_length, lattice_clustering)
    return SmallWorldEstimate(
        omega=value,
        clustering=clustering,
        path_length=path_length,
        random_path_lengths=tuple(random_path_lengths),
        lattice_clusterings=tuple(lattice_clusterings),
        niter=niter,
        nrand=nrand,
        seed=seed,
    )


def omega(
    graph: CoauthorGraph,
    niter: int | None = None,
    nrand: int | None = None,
    seed: int = 0,
    n_jobs: int | None = None,
) -> float:
    return small_world(graph, niter, nrand, seed, n_jobs).omega
