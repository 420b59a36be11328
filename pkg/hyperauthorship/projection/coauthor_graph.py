from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Literal, Mapping

import networkx as nx
import numpy as np

Scheme = Literal["unweighted", "full", "newman", "jaccard"]

SCHEMES: tuple[Scheme, ...] = ("unweighted", "full", "newman", "jaccard")


@dataclass(frozen=True)
class CSRView:
    """Compressed adjacency of a CoauthorGraph; node i of the arrays is nodes[i]."""

    nodes: tuple[str, ...]
    index: Mapping[str, int]
    indptr: np.ndarray
    indices: np.ndarray
    weights: np.ndarray

    @property
    def n(self) -> int:
        return len(self.nodes)


class CoauthorGraph:
    """
    Undirected weighted author-author graph tagged with the scheme its weights were computed under.

    The wrapped networkx graph stores weights in the "weight" edge attribute and nodes in sorted
    order. Treat it as read-only; every transformation returns a new CoauthorGraph.
    """

    def __init__(self, graph: nx.Graph, scheme: Scheme, validate=True):
        if scheme not in SCHEMES:
            raise ValueError(f"Unknown weighting scheme {scheme!r}.")
        self._graph = graph
        self._scheme: Scheme = scheme
        if validate:
            self._validate()

    @classmethod
    def from_edges(
        cls,
        nodes: Iterable[str],
        edges: Iterable[tuple[str, str, float]],
        scheme: Scheme,
    ) -> "CoauthorGraph":
        """Build a graph with nodes and edges inserted in sorted order."""
        edge_list = sorted((min(u, v), max(u, v), w) for u, v, w in edges)
        all_nodes = set(nodes)
        for u, v, _ in edge_list:
            all_nodes.update((u, v))

        graph = nx.Graph()
        graph.add_nodes_from(sorted(all_nodes))
        graph.add_weighted_edges_from(edge_list)
        return cls(graph, scheme)

    def _validate(self):
        for u, v, w in self._graph.edges(data="weight"):
            if u == v:
                raise ValueError(f"Self-loop on {u} in a co-authorship graph.")
            if w is None:
                raise ValueError(f"Edge ({u}, {v}) has no weight.")
            if self._scheme == "unweighted" and w != 1:
                raise ValueError(f"Unweighted edge ({u}, {v}) has weight {w}.")
            if self._scheme == "full" and (w < 1 or float(w) != int(w)):
                raise ValueError(f"Full-counting edge ({u}, {v}) has non-integer weight {w}.")
            if self._scheme == "newman" and not w > 0:
                raise ValueError(f"Newman edge ({u}, {v}) has non-positive weight {w}.")
            if self._scheme == "jaccard" and not 0 <= w <= 1:
                raise ValueError(f"Jaccard edge ({u}, {v}) has weight {w} outside [0, 1].")

    @property
    def graph(self) -> nx.Graph:
        return self._graph

    @property
    def scheme(self) -> Scheme:
        return self._scheme

    @cached_property
    def nodes(self) -> tuple[str, ...]:
        return tuple(sorted(self._graph.nodes))

    @property
    def n_nodes(self) -> int:
        return self._graph.number_of_nodes()

    @property
    def n_edges(self) -> int:
        return self._graph.number_of_edges()

    def __contains__(self, node: object) -> bool:
        return node in self._graph

    def __len__(self) -> int:
        return self.n_nodes

    def weight(self, u: str, v: str) -> float:
        return self._graph[u][v]["weight"]

    def neighbors(self, node: str) -> set[str]:
        return set(self._graph[node])

    def degree(self, node: str) -> int:
        return self._graph.degree[node]

    def strength(self, node: str) -> float:
        return float(sum(w for _, _, w in self._graph.edges(node, data="weight")))

    def edges(self) -> Iterator[tuple[str, str, float]]:
        """Edges as (u, v, weight) with u < v, in lexicographic order."""
        for u, v, w in sorted(
            (min(u, v), max(u, v), w) for u, v, w in self._graph.edges(data="weight")
        ):
            yield u, v, w

    def isolated_nodes(self) -> list[str]:
        return [node for node in self.nodes if self._graph.degree[node] == 0]

    def subgraph(self, nodes: Iterable[str]) -> "CoauthorGraph":
        """Induced subgraph as an independent copy, weights inherited."""
        keep = set(nodes)
        return CoauthorGraph.from_edges(
            keep,
            (
                (u, v, w)
                for u, v, w in self._graph.subgraph(keep).edges(data="weight")
            ),
            self._scheme,
        )

    def with_scheme(self, weights: Mapping[tuple[str, str], float], scheme: Scheme) -> "CoauthorGraph":
        """Same topology with new weights keyed by (u, v), u < v."""
        return CoauthorGraph.from_edges(
            self.nodes,
            ((u, v, weights[(u, v)]) for u, v, _ in self.edges()),
            scheme,
        )

    @cached_property
    def csr(self) -> CSRView:
        nodes = self.nodes
        index = {node: i for i, node in enumerate(nodes)}
        n = len(nodes)

        edge_data = [(index[u], index[v], float(w)) for u, v, w in self._graph.edges(data="weight")]
        if edge_data:
            heads = np.array([e[0] for e in edge_data], dtype=np.int64)
            tails = np.array([e[1] for e in edge_data], dtype=np.int64)
            values = np.array([e[2] for e in edge_data], dtype=np.float64)
        else:
            heads = tails = np.empty(0, dtype=np.int64)
            values = np.empty(0, dtype=np.float64)

        sources = np.concatenate([heads, tails])
        targets = np.concatenate([tails, heads])
        weights = np.concatenate([values, values])
        order = np.lexsort((targets, sources))

        indptr = np.zeros(n + 1, dtype=np.int64)
        np.cumsum(np.bincount(sources, minlength=n), out=indptr[1:])

        return CSRView(
            nodes=nodes,
            index=index,
            indptr=indptr,
            indices=np.ascontiguousarray(targets[order]),
            weights=np.ascontiguousarray(weights[order]),
        )

    def __repr__(self) -> str:
        return f"CoauthorGraph(scheme={self._scheme}, nodes={self.n_nodes}, edges={self.n_edges})"
