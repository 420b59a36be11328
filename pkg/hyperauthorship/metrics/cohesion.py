import logging
import math
from dataclasses import asdict, dataclass

import networkx as nx
import numpy as np

from ..config import config
from ..errors import DisconnectedGraphError, InvalidParameterError, UndefinedMetricError
from ..projection import CoauthorGraph
from ._kernels import distance_sums

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PathLengthEstimate:
    value: float
    sources: int
    exact: bool
    seed: int | None


@dataclass(frozen=True)
class CohesionReport:
    n_nodes: int
    n_edges: int
    density: float
    avg_clustering: float
    avg_path_length: float
    n_components: int
    giant_component_nodes: int
    giant_component_edges: int
    path_length_sources: int
    path_length_exact: bool
    seed: int | None

    def to_dict(self) -> dict:
        return asdict(self)


def density(graph: CoauthorGraph) -> float:
    """2m / (n(n - 1))."""
    n = graph.n_nodes
    if n < 2:
        raise UndefinedMetricError(f"Density needs at least 2 nodes, got {n}.")
    return 2.0 * graph.n_edges / (n * (n - 1))


def average_clustering(graph: CoauthorGraph) -> float:
    """Mean local clustering coefficient on the unweighted topology; nodes of degree < 2 count as 0."""
    if graph.n_nodes < 1:
        raise UndefinedMetricError("Average clustering of an empty graph is undefined.")
    return float(nx.average_clustering(graph.graph))


def connected_components(graph: CoauthorGraph) -> list[set[str]]:
    """Components by descending size; equal sizes are ordered by their smallest author id."""
    components = [set(c) for c in nx.connected_components(graph.graph)]
    return sorted(components, key=lambda c: (-len(c), min(c)))


def giant_component(graph: CoauthorGraph) -> CoauthorGraph:
    """Induced subgraph on the largest component (ties go to the one with the smallest author id)."""
    if graph.n_nodes < 1:
        raise UndefinedMetricError("An empty graph has no giant component.")
    return graph.subgraph(connected_components(graph)[0])


def path_length_estimate(
    graph: CoauthorGraph,
    use_weights: bool = False,
    exact_threshold: int | None = None,
    sample_size: int | None = None,
    seed: int | None = None,
    n_jobs: int | None = None,
) -> PathLengthEstimate:
    """
    Mean shortest-path distance over ordered node pairs of a connected graph.

    Exact up to `exact_threshold` nodes; above it the mean over a seeded uniform sample of
    `sample_size` source nodes.
    """
    if exact_threshold is None:
        exact_threshold = config.exact_path_threshold
    if sample_size is None:
        sample_size = config.path_sample_size

    n = graph.n_nodes
    if n < 2:
        raise UndefinedMetricError(f"Average path length needs at least 2 nodes, got {n}.")
    if not nx.is_connected(graph.graph):
        raise DisconnectedGraphError(
            "Average path length is only defined on a connected graph; pass the giant component."
        )

    csr = graph.csr
    weighted = use_weights and graph.scheme != "unweighted"
    exact = n <= exact_threshold
    if exact:
        sources = np.arange(n, dtype=np.int64)
    else:
        if seed is None:
            raise InvalidParameterError("Sampled average path length needs a seed.")
        rng = np.random.default_rng(seed)
        sources = np.sort(rng.choice(n, size=min(sample_size, n), replace=False))
        logger.info(
            "Estimating average path length from %d of %d sources (seed %d)", sources.size, n, seed
        )

    totals, _ = distance_sums(csr, sources, weighted, n_jobs)
    value = float(np.sum(totals)) / (sources.size * (n - 1))
    return PathLengthEstimate(
        value=value, sources=int(sources.size), exact=exact, seed=None if exact else seed
    )


def average_path_length(
    graph: CoauthorGraph,
    use_weights: bool = False,
    exact_threshold: int | None = None,
    sample_size: int | None = None,
    seed: int | None = None,
    n_jobs: int | None = None,
) -> float:
    return path_length_estimate(
        graph, use_weights, exact_threshold, sample_size, seed, n_jobs
    ).value


def cohesion_report(
    graph: CoauthorGraph,
    seed: int | None = None,
    use_weights: bool = False,
    exact_threshold: int | None = None,
    sample_size: int | None = None,
    n_jobs: int | None = None,
) -> CohesionReport:
    """Whole-network cohesion measures; the path length is taken on the giant component."""
    components = connected_components(graph)
    giant = graph.subgraph(components[0]) if components else graph

    if giant.n_nodes >= 2:
        path = path_length_estimate(
            giant, use_weights, exact_threshold, sample_size, seed, n_jobs
        )
    else:
        path = PathLengthEstimate(value=math.nan, sources=0, exact=True, seed=None)

    return CohesionReport(
        n_nodes=graph.n_nodes,
        n_edges=graph.n_edges,
        density=density(graph),
        avg_clustering=average_clustering(graph),
        avg_path_length=path.value,
        n_components=len(components),
        giant_component_nodes=giant.n_nodes,
        giant_component_edges=giant.n_edges,
        path_length_sources=path.sources,
        path_length_exact=path.exact,
        seed=path.seed,
    )
