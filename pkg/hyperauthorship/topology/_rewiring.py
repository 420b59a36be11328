import logging
import warnings
from typing import Callable

import networkx as nx
import numpy as np

from ..errors import DisconnectedGraphError, InvalidParameterError, RewiringWarning
from ..projection import CoauthorGraph

logger = logging.getLogger(__name__)

# accept(a, b, c, d) decides whether edges (a, b), (c, d) may become (a, d), (c, b)
SwapRule = Callable[[int, int, int, int], bool]


def _ring_distance(n: int) -> Callable[[int, int], int]:
    def distance(i: int, j: int) -> int:
        gap = abs(i - j)
        return min(gap, n - gap)

    return distance


def _indexed_topology(graph: CoauthorGraph) -> tuple[nx.Graph, list[tuple[int, int]]]:
    """Unweighted copy of the graph on integer nodes 0..n-1, in sorted author order."""
    index = graph.csr.index
    topology = nx.Graph()
    topology.add_nodes_from(range(graph.n_nodes))
    edges = [(index[u], index[v]) for u, v, _ in graph.edges()]
    topology.add_edges_from(edges)
    return topology, edges


def _as_coauthor_graph(graph: CoauthorGraph, topology: nx.Graph) -> CoauthorGraph:
    nodes = graph.nodes
    return CoauthorGraph.from_edges(
        nodes, ((nodes[u], nodes[v], 1) for u, v in topology.edges), "unweighted"
    )


def double_edge_swaps(
    graph: CoauthorGraph,
    niter: int,
    seed: int,
    accept: SwapRule | None = None,
    connectivity: bool = True,
) -> CoauthorGraph:
    """
    Attempt niter * m double-edge swaps (a, b), (c, d) -> (a, d), (c, b) and return the result as an
    unweighted graph with the same degree sequence.

    Swaps that would create a self-loop or a parallel edge are rejected, as are swaps that `accept`
    refuses. With `connectivity`, a swap that disconnects a from b is reverted; that is enough to
    keep a connected graph connected since the new edges tie c to b and d to a.
    """
    if niter < 1:
        raise InvalidParameterError(f"niter must be at least 1, got {niter}.")
    if connectivity and graph.n_nodes > 0 and not nx.is_connected(graph.graph):
        raise DisconnectedGraphError("Connectivity-preserving rewiring needs a connected graph.")

    topology, edges = _indexed_topology(graph)
    m = len(edges)
    if m < 2:
        warnings.warn(
            f"Cannot rewire a graph with {m} edges; returning it unchanged.", RewiringWarning
        )
        return _as_coauthor_graph(graph, topology)

    attempts = niter * m
    rng = np.random.default_rng(seed)
    picks = rng.integers(0, m, size=(attempts, 2))
    flips = rng.random(attempts) < 0.5

    swapped = 0
    for (i, j), flip in zip(picks, flips):
        if i == j:
            continue
        a, b = edges[i]
        c, d = edges[j]
        if flip:
            c, d = d, c
        if len({a, b, c, d}) < 4:
            continue
        if topology.has_edge(a, d) or topology.has_edge(c, b):
            continue
        if accept is not None and not accept(a, b, c, d):
            continue

        topology.remove_edge(a, b)
        topology.remove_edge(c, d)
        topology.add_edge(a, d)
        topology.add_edge(c, b)
        if connectivity and not nx.has_path(topology, a, b):
            topology.remove_edge(a, d)
            topology.remove_edge(c, b)
            topology.add_edge(a, b)
            topology.add_edge(c, d)
            continue

        edges[i] = (a, d)
        edges[j] = (c, b)
        swapped += 1

    logger.debug("%d of %d swaps accepted (seed %d)", swapped, attempts, seed)
    return _as_coauthor_graph(graph, topology)


def lattice_rule(n: int) -> SwapRule:
    """Accept a swap only if it strictly shortens the rewired edges on the ring 0..n-1."""
    distance = _ring_distance(n)

    def accept(a: int, b: int, c: int, d: int) -> bool:
        return distance(a, d) + distance(c, b) < distance(a, b) + distance(c, d)

    return accept
