import logging
from dataclasses import dataclass
from typing import Literal, Mapping

import numpy as np
import pandas as pd
from scipy.sparse import csr_array

from ..config import config
from ..errors import ConvergenceError, InvalidParameterError, UndefinedMetricError
from ..projection import CoauthorGraph, Scheme
from ._kernels import brandes_dependencies, distance_sums

logger = logging.getLogger(__name__)

Measure = Literal["degree", "betweenness", "closeness", "eigenvector"]
MEASURES: tuple[Measure, ...] = ("degree", "betweenness", "closeness", "eigenvector")

BetweennessNormalization = Literal["directed", "undirected", "none"]


@dataclass(frozen=True)
class CentralityVector:
    measure: Measure
    scheme: Scheme
    scores: Mapping[str, float]
    average: float
    ranking: tuple[str, ...]
    seed: int | None = None
    sample_size: int | None = None

    @classmethod
    def from_scores(
        cls,
        measure: Measure,
        scheme: Scheme,
        scores: Mapping[str, float],
        seed: int | None = None,
        sample_size: int | None = None,
    ) -> "CentralityVector":
        """Average over every node; ranking by descending score, ties by ascending author id."""
        ordered = dict(sorted(scores.items()))
        values = np.fromiter(ordered.values(), dtype=np.float64, count=len(ordered))
        average = float(values.mean()) if values.size else 0.0
        ranking = tuple(sorted(ordered, key=lambda author: (-ordered[author], author)))
        return cls(measure, scheme, ordered, average, ranking, seed, sample_size)

    def rank_of(self, author_id: str) -> int:
        """1-based rank."""
        return self.ranking.index(author_id) + 1

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame(
            {
                "author_id": list(self.ranking),
                "score": [self.scores[a] for a in self.ranking],
                "rank": range(1, len(self.ranking) + 1),
            }
        )


def _is_weighted(graph: CoauthorGraph, use_weights: bool) -> bool:
    return use_weights and graph.scheme != "unweighted"


def degree_centrality(graph: CoauthorGraph, normalized: bool = False) -> CentralityVector:
    """
    Degree for unweighted graphs, node strength (sum of incident weights) otherwise. Raw values by
    default; `normalized` divides by n - 1.
    """
    n = graph.n_nodes
    if normalized and n < 2:
        raise UndefinedMetricError(f"Normalized degree needs at least 2 nodes, got {n}.")

    weighted = graph.scheme != "unweighted"
    scale = 1.0 / (n - 1) if normalized else 1.0
    scores = {
        node: (graph.strength(node) if weighted else float(graph.degree(node))) * scale
        for node in graph.nodes
    }
    return CentralityVector.from_scores("degree", graph.scheme, scores)


def betweenness_centrality(
    graph: CoauthorGraph,
    use_weights: bool = False,
    sample_size: int | None = None,
    seed: int | None = None,
    normalization: BetweennessNormalization = "directed",
    n_jobs: int | None = None,
) -> CentralityVector:
    """
    Brandes betweenness, estimated from `sample_size` pivot sources drawn without replacement.

    Pivot dependencies are rescaled by n / pivots; with n <= sample_size every node is a pivot and
    the result is exact. "directed" normalization divides pair counts by (n - 1)(n - 2),
    "undirected" by (n - 1)(n - 2) / 2, "none" leaves the pair counts.
    """
    if sample_size is None:
        sample_size = config.betweenness_sample_size
    if sample_size < 1:
        raise InvalidParameterError(f"sample_size must be at least 1, got {sample_size}.")

    n = graph.n_nodes
    if n < 3:
        raise UndefinedMetricError(f"Betweenness needs at least 3 nodes, got {n}.")

    csr = graph.csr
    if n <= sample_size:
        pivots = np.arange(n, dtype=np.int64)
        used_seed = None
    else:
        if seed is None:
            raise InvalidParameterError("Sampled betweenness needs a seed.")
        rng = np.random.default_rng(seed)
        pivots = np.sort(rng.choice(n, size=sample_size, replace=False))
        used_seed = seed
        logger.info("Betweenness from %d of %d pivots (seed %d)", sample_size, n, seed)

    dependencies = brandes_dependencies(csr, pivots, _is_weighted(graph, use_weights), n_jobs)
    # Every unordered pair is reached from both of its ends.
    pair_counts = dependencies * (n / pivots.size) / 2.0

    if normalization == "directed":
        pair_counts = pair_counts / ((n - 1) * (n - 2))
    elif normalization == "undirected":
        pair_counts = pair_counts * 2.0 / ((n - 1) * (n - 2))
    elif normalization != "none":
        raise InvalidParameterError(f"Unknown betweenness normalization {normalization!r}.")

    scores = {node: float(pair_counts[i]) for i, node in enumerate(csr.nodes)}
    return CentralityVector.from_scores(
        "betweenness", graph.scheme, scores, used_seed, int(pivots.size)
    )


def closeness_centrality(
    graph: CoauthorGraph, use_weights: bool = False, n_jobs: int | None = None
) -> CentralityVector:
    """
    (k - 1) / sum of distances within the node's component of size k, scaled by (k - 1) / (n - 1)
    so nodes of small components are not overrated. Isolated nodes score 0.
    """
    n = graph.n_nodes
    if n < 2:
        raise UndefinedMetricError(f"Closeness needs at least 2 nodes, got {n}.")

    csr = graph.csr
    totals, reached = distance_sums(
        csr, np.arange(n, dtype=np.int64), _is_weighted(graph, use_weights), n_jobs
    )

    scores: dict[str, float] = {}
    for i, node in enumerate(csr.nodes):
        if totals[i] > 0.0:
            scores[node] = float((reached[i] / totals[i]) * (reached[i] / (n - 1)))
        else:
            scores[node] = 0.0
    return CentralityVector.from_scores("closeness", graph.scheme, scores)


def eigenvector_centrality(
    graph: CoauthorGraph,
    use_weights: bool = False,
    tol: float | None = None,
    max_iter: int | None = None,
) -> CentralityVector:
    """
    Power iteration on the (weighted) adjacency matrix from a uniform positive start, L2-normalised
    every step. Iterating with A + I keeps bipartite components from oscillating and has the same
    leading eigenvector. Converged when successive iterates differ by less than n * tol in L1.
    """
    if tol is None:
        tol = config.eigenvector_tol
    if max_iter is None:
        max_iter = config.eigenvector_max_iter

    n = graph.n_nodes
    if n == 0:
        raise UndefinedMetricError("Eigenvector centrality of an empty graph is undefined.")

    csr = graph.csr
    data = csr.weights if _is_weighted(graph, use_weights) else np.ones_like(csr.weights)
    adjacency = csr_array((data, csr.indices, csr.indptr), shape=(n, n))

    x = np.full(n, 1.0 / np.sqrt(n))
    residual = np.inf
    for iteration in range(1, max_iter + 1):
        previous = x
        x = previous + adjacency @ previous
        norm = np.linalg.norm(x)
        if norm == 0.0:
            x = previous
            break
        x = x / norm
        residual = float(np.abs(x - previous).sum())
        if residual < n * tol:
            logger.debug("Eigenvector centrality converged after %d iterations", iteration)
            break
    else:
        raise ConvergenceError(max_iter, residual)

    scores = {node: float(x[i]) for i, node in enumerate(csr.nodes)}
    return CentralityVector.from_scores("eigenvector", graph.scheme, scores)


def centrality(
    graph: CoauthorGraph,
    measure: Measure,
    use_weights: bool = True,
    sample_size: int | None = None,
    seed: int | None = None,
    n_jobs: int | None = None,
) -> CentralityVector:
    """Dispatch to one of the four measures with the settings the comparison tables use."""
    if measure == "degree":
        return degree_centrality(graph)
    if measure == "betweenness":
        return betweenness_centrality(graph, use_weights, sample_size, seed, n_jobs=n_jobs)
    if measure == "closeness":
        return closeness_centrality(graph, use_weights, n_jobs)
    if measure == "eigenvector":
        return eigenvector_centrality(graph, use_weights)
    raise InvalidParameterError(f"Unknown centrality measure {measure!r}.")
