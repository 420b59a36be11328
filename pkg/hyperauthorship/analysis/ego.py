import logging
from dataclasses import asdict, dataclass
from functools import cached_property
from typing import Literal, Mapping, Sequence

from ..config import config
from ..corpus import Corpus
from ..errors import ComputationError, NotFoundError
from ..metrics import MEASURES, CentralityVector, Measure, centrality
from ..projection import CoauthorGraph, Scheme
from ..utils import derive_seed
from .comparison import ComparisonReport, centrality_rows

logger = logging.getLogger(__name__)

Side = Literal["without", "with"]
Quadrant = Literal["HH", "HL", "LH", "LL"]
QUADRANTS: tuple[Quadrant, ...] = ("HH", "HL", "LH", "LL")
_QUADRANT_OF: dict[tuple[bool, bool], Quadrant] = {
    (True, True): "HH",
    (True, False): "HL",
    (False, True): "LH",
    (False, False): "LL",
}


@dataclass(frozen=True)
class EgoNetwork:
    ego: str
    graph: CoauthorGraph
    provenance: Side | None = None

    @property
    def alters(self) -> tuple[str, ...]:
        return tuple(node for node in self.graph.nodes if node != self.ego)


def extract_ego(graph: CoauthorGraph, ego: str, provenance: Side | None = None) -> EgoNetwork:
    """Induced subgraph on the ego and its neighbours, weights taken from the parent."""
    if ego not in graph:
        raise NotFoundError(f"Author {ego!r} is not in the {graph.scheme} graph.")
    return EgoNetwork(ego, graph.subgraph(graph.neighbors(ego) | {ego}), provenance)


class Ranking:
    """Authors in rank order; rank 1 is the first."""

    def __init__(self, order: Sequence[str]):
        self._order = tuple(order)

    @property
    def order(self) -> tuple[str, ...]:
        return self._order

    @cached_property
    def _ranks(self) -> dict[str, int]:
        return {author: i + 1 for i, author in enumerate(self._order)}

    def rank(self, author: str) -> int | None:
        return self._ranks.get(author)

    def __contains__(self, author: object) -> bool:
        return author in self._ranks

    def __len__(self) -> int:
        return len(self._order)

    def __repr__(self) -> str:
        return f"Ranking({len(self._order)} authors)"


def rank_by_degree(graph: CoauthorGraph) -> Ranking:
    """Descending raw degree, ties broken by ascending author id."""
    return Ranking(sorted(graph.nodes, key=lambda node: (-graph.degree(node), node)))


@dataclass(frozen=True)
class CaseStudyGrid:
    """
    Authors split by whether they rank high without and with hyperauthored papers, e.g. "HL" is
    high without, low with.
    """

    quadrants: Mapping[Quadrant, tuple[str, ...]]
    quantile: float

    def representatives(self) -> dict[Quadrant, str | None]:
        """The best-ranked author of each quadrant, None for an empty quadrant."""
        return {q: (self.quadrants[q][0] if self.quadrants[q] else None) for q in QUADRANTS}

    def quadrant_of(self, author: str) -> Quadrant | None:
        for quadrant in QUADRANTS:
            if author in self.quadrants[quadrant]:
                return quadrant
        return None

    def to_dict(self) -> dict:
        return {
            "quantile": self.quantile,
            "quadrants": {q: list(self.quadrants[q]) for q in QUADRANTS},
            "representatives": self.representatives(),
        }


def select_case_studies(
    rank_without: Ranking, rank_with: Ranking, quantile: float | None = None
) -> CaseStudyGrid:
    """
    An author is High in a ranking when its rank is at most quantile * (ranking size); absent authors
    are Low. Within a quadrant authors are ordered by the sum of their two ranks, an absent author
    counting as one past the end of that ranking.
    """
    if quantile is None:
        quantile = config.case_study_quantile
    if not 0 < quantile <= 1:
        raise ValueError(f"quantile must be in (0, 1], got {quantile}.")

    def placed(ranking: Ranking, author: str) -> tuple[bool, int]:
        rank = ranking.rank(author)
        if rank is None:
            return False, len(ranking) + 1
        return rank <= quantile * len(ranking), rank

    members: dict[Quadrant, list[tuple[int, str]]] = {q: [] for q in QUADRANTS}
    for author in set(rank_without.order) | set(rank_with.order):
        high_without, rank_a = placed(rank_without, author)
        high_with, rank_b = placed(rank_with, author)
        members[_QUADRANT_OF[(high_without, high_with)]].append((rank_a + rank_b, author))

    return CaseStudyGrid(
        quadrants={q: tuple(author for _, author in sorted(members[q])) for q in QUADRANTS},
        quantile=quantile,
    )


def ego_centralities(
    parents: Mapping[Scheme, CoauthorGraph],
    ego: str,
    seed: int = 0,
    sample_size: int | None = None,
) -> dict[tuple[Measure, Scheme], CentralityVector | None]:
    """Every measure on the ego's network under every scheme; None where undefined or absent."""
    vectors: dict[tuple[Measure, Scheme], CentralityVector | None] = {}
    for scheme, parent in parents.items():
        if ego not in parent:
            for measure in MEASURES:
                vectors[(measure, scheme)] = None
            continue

        network = extract_ego(parent, ego).graph
        for measure in MEASURES:
            try:
                vectors[(measure, scheme)] = centrality(
                    network,
                    measure,
                    sample_size=sample_size,
                    seed=derive_seed(seed, f"ego:{ego}:{measure}:{scheme}"),
                )
            except ComputationError as error:
                logger.debug("Ego %s %s/%s undefined: %s", ego, measure, scheme, error)
                vectors[(measure, scheme)] = None
    return vectors


def ego_centrality_suite(
    parents_without: Mapping[Scheme, CoauthorGraph],
    parents_with: Mapping[Scheme, CoauthorGraph],
    ego: str,
    seed: int = 0,
    sample_size: int | None = None,
) -> ComparisonReport:
    """
    Average centralities inside the ego's network, for every measure and scheme, without and with
    hyperauthored papers. A side where the ego does not appear yields undefined rows.
    """
    present = [
        side
        for side, parents in (("without", parents_without), ("with", parents_with))
        if any(ego in graph for graph in parents.values())
    ]
    if not present:
        raise NotFoundError(f"Author {ego!r} is in neither network.")

    rows = centrality_rows(
        "ego",
        ego_centralities(parents_without, ego, seed, sample_size),
        ego_centralities(parents_with, ego, seed, sample_size),
    )
    return ComparisonReport(tuple(rows), {"ego": ego, "present_in": present})


@dataclass(frozen=True)
class EgoProfile:
    ego: str
    n_papers: int
    n_hyperauthored: int
    hyperauthored_sizes: tuple[int, ...]
    rank_without: int | None
    rank_with: int | None
    nodes_without: int
    edges_without: int
    nodes_with: int
    edges_with: int

    def to_dict(self) -> dict:
        data = asdict(self)
        data["hyperauthored_sizes"] = list(self.hyperauthored_sizes)
        return data


def ego_profile(
    corpus_with: Corpus,
    cutoff: float,
    graph_without: CoauthorGraph,
    graph_with: CoauthorGraph,
    ego: str,
    rank_without: Ranking | None = None,
    rank_with: Ranking | None = None,
) -> EgoProfile:
    """Papers, hyperauthored paper sizes, degree ranks and egonetwork sizes of one author."""
    if ego not in graph_with and ego not in graph_without:
        raise NotFoundError(f"Author {ego!r} is in neither network.")

    papers = corpus_with.papers_of(ego)
    sizes = tuple(sorted(p.n_authors for p in papers if p.n_authors > cutoff))

    if rank_without is None:
        rank_without = rank_by_degree(graph_without)
    if rank_with is None:
        rank_with = rank_by_degree(graph_with)

    def size(graph: CoauthorGraph) -> tuple[int, int]:
        if ego not in graph:
            return 0, 0
        network = extract_ego(graph, ego).graph
        return network.n_nodes, network.n_edges

    nodes_without, edges_without = size(graph_without)
    nodes_with, edges_with = size(graph_with)
    return EgoProfile(
        ego=ego,
        n_papers=len(papers),
        n_hyperauthored=len(sizes),
        hyperauthored_sizes=sizes,
        rank_without=rank_without.rank(ego),
        rank_with=rank_with.rank(ego),
        nodes_without=nodes_without,
        edges_without=edges_without,
        nodes_with=nodes_with,
        edges_with=edges_with,
    )

