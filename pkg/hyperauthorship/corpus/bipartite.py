from functools import cached_property
from typing import Mapping

import networkx as nx

from .corpus import Corpus

PAPER = 0
AUTHOR = 1


class BipartiteGraph:
    """
    Two-mode paper x author graph. Nodes are tagged tuples ("paper", id) / ("author", id) so a paper
    and an author sharing an identifier never collide, and carry the networkx `bipartite` attribute.
    """

    def __init__(self, graph: nx.Graph):
        self._graph = graph

    @property
    def graph(self) -> nx.Graph:
        return self._graph

    @cached_property
    def paper_nodes(self) -> frozenset[str]:
        return frozenset(
            node[1] for node, side in self._graph.nodes(data="bipartite") if side == PAPER
        )

    @cached_property
    def author_nodes(self) -> frozenset[str]:
        return frozenset(
            node[1] for node, side in self._graph.nodes(data="bipartite") if side == AUTHOR
        )

    @cached_property
    def edges(self) -> frozenset[tuple[str, str]]:
        """(paper_id, author_id) pairs."""
        edges = set()
        for u, v in self._graph.edges():
            paper, author = (u, v) if u[0] == "paper" else (v, u)
            edges.add((paper[1], author[1]))
        return frozenset(edges)

    @cached_property
    def bylines(self) -> Mapping[str, tuple[str, ...]]:
        """Sorted author ids of every paper, in paper_id order."""
        return {
            paper_id: tuple(sorted(author[1] for author in self._graph[("paper", paper_id)]))
            for paper_id in sorted(self.paper_nodes)
        }

    def paper_degree(self, paper_id: str) -> int:
        return self._graph.degree[("paper", paper_id)]

    def author_degree(self, author_id: str) -> int:
        return self._graph.degree[("author", author_id)]

    @property
    def n_edges(self) -> int:
        return self._graph.number_of_edges()


def build_bipartite(corpus: Corpus) -> BipartiteGraph:
    """One paper node per paper, one author node per author, one edge per authorship."""
    graph = nx.Graph()
    for paper in corpus:
        graph.add_node(("paper", paper.paper_id), bipartite=PAPER)
        for author_id in paper.author_ids:
            graph.add_node(("author", author_id), bipartite=AUTHOR)
            graph.add_edge(("paper", paper.paper_id), ("author", author_id))
    return BipartiteGraph(graph)
