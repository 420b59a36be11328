import logging
from itertools import combinations

from ..corpus import BipartiteGraph
from ..errors import InvalidParameterError
from .coauthor_graph import CoauthorGraph, Scheme

logger = logging.getLogger(__name__)


def project_full(bipartite: BipartiteGraph) -> CoauthorGraph:
    """
    Full counting: the weight of (i, j) is the number of papers i and j share.

    Papers are expanded into cliques one at a time, so memory follows the realised edges rather
    than an author x author matrix.
    """
    weights: dict[tuple[str, str], float] = {}
    for byline in bipartite.bylines.values():
        for pair in combinations(byline, 2):
            weights[pair] = weights.get(pair, 0.0) + 1.0

    graph = CoauthorGraph.from_edges(
        bipartite.author_nodes, ((u, v, w) for (u, v), w in weights.items()), "full"
    )
    logger.debug("Full-counting projection: %s", graph)
    return graph


def project_newman(bipartite: BipartiteGraph) -> CoauthorGraph:
    """
    Newman's fractional counting: each shared paper p adds 1 / (N_p - 1) to the pair's weight.
    Single-authored papers add nothing. Papers are accumulated in paper_id order.
    """
    weights: dict[tuple[str, str], float] = {}
    for byline in bipartite.bylines.values():
        if len(byline) < 2:
            continue
        credit = 1.0 / (len(byline) - 1)
        for pair in combinations(byline, 2):
            weights[pair] = weights.get(pair, 0.0) + credit

    graph = CoauthorGraph.from_edges(
        bipartite.author_nodes, ((u, v, w) for (u, v), w in weights.items()), "newman"
    )
    logger.debug("Newman projection: %s", graph)
    return graph


def reweight_jaccard(graph: CoauthorGraph) -> CoauthorGraph:
    """
    Jaccard reweighting of an existing co-authorship graph: |N(i) & N(j)| / |N(i) | N(j)| over open
    neighborhoods. Pairs with no common co-author keep their edge with weight 0.
    """
    if graph.scheme not in ("full", "unweighted"):
        raise InvalidParameterError(
            f"Jaccard weights are computed from a full or unweighted projection, got {graph.scheme}."
        )

    neighborhoods = {node: graph.neighbors(node) for node in graph.nodes}
    weights: dict[tuple[str, str], float] = {}
    for u, v, _ in graph.edges():
        shared = len(neighborhoods[u] & neighborhoods[v])
        union = len(neighborhoods[u]) + len(neighborhoods[v]) - shared
        weights[(u, v)] = shared / union

    return graph.with_scheme(weights, "jaccard")


def strip_weights(graph: CoauthorGraph) -> CoauthorGraph:
    """Same topology with every weight set to 1."""
    return graph.with_scheme({(u, v): 1.0 for u, v, _ in graph.edges()}, "unweighted")


def project(bipartite: BipartiteGraph, scheme: Scheme) -> CoauthorGraph:
    if scheme == "full":
        return project_full(bipartite)
    if scheme == "newman":
        return project_newman(bipartite)
    if scheme == "jaccard":
        return reweight_jaccard(project_full(bipartite))
    if scheme == "unweighted":
        return strip_weights(project_full(bipartite))
    raise InvalidParameterError(f"Unknown weighting scheme {scheme!r}.")
