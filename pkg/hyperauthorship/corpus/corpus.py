import logging
from functools import cached_property
from typing import Iterable, Iterator, Mapping, TypedDict

from .distribution import AuthorCountDistribution
from .paper_record import PaperRecord

logger = logging.getLogger(__name__)


class RejectedRecord(TypedDict):
    line_number: int | None
    paper_id: str
    reason: str


class Corpus:
    """
    The paper/author universe. Papers are held sorted by paper_id, so the order records were read in
    never shows through. Treat instances as immutable.
    """

    def __init__(
        self,
        papers: Iterable[PaperRecord],
        rejected: Iterable[RejectedRecord] = (),
    ):
        by_id: dict[str, PaperRecord] = {}
        for paper in papers:
            if paper.paper_id in by_id:
                raise ValueError(f"Paper {paper.paper_id} appears twice in the corpus.")
            by_id[paper.paper_id] = paper

        self._papers = tuple(by_id[paper_id] for paper_id in sorted(by_id))
        self._by_id = {paper.paper_id: paper for paper in self._papers}
        self.rejected: tuple[RejectedRecord, ...] = tuple(rejected)

    @property
    def papers(self) -> tuple[PaperRecord, ...]:
        return self._papers

    @cached_property
    def author_index(self) -> Mapping[str, tuple[str, ...]]:
        """Inverse of the paper -> author relation: author_id to the sorted ids of their papers."""
        index: dict[str, list[str]] = {}
        for paper in self._papers:
            for author_id in paper.author_ids:
                index.setdefault(author_id, []).append(paper.paper_id)
        return {author_id: tuple(index[author_id]) for author_id in sorted(index)}

    @property
    def authors(self) -> tuple[str, ...]:
        return tuple(self.author_index.keys())

    @property
    def n_papers(self) -> int:
        return len(self._papers)

    @property
    def n_authors(self) -> int:
        return len(self.author_index)

    def paper(self, paper_id: str) -> PaperRecord:
        return self._by_id[paper_id]

    def papers_of(self, author_id: str) -> tuple[PaperRecord, ...]:
        return tuple(self._by_id[paper_id] for paper_id in self.author_index.get(author_id, ()))

    def __iter__(self) -> Iterator[PaperRecord]:
        return iter(self._papers)

    def __len__(self) -> int:
        return len(self._papers)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Corpus):
            return NotImplemented
        return self._papers == other._papers

    def __repr__(self) -> str:
        return f"Corpus(papers={self.n_papers}, authors={self.n_authors})"


def author_count_distribution(corpus: Corpus) -> AuthorCountDistribution:
    """Distribution of the number of authors per paper."""
    if corpus.n_papers == 0:
        raise ValueError("The corpus has no papers.")
    return AuthorCountDistribution.from_counts(paper.n_authors for paper in corpus)


def filter_hyperauthored(
    corpus: Corpus, cutoff: float
) -> tuple[Corpus, list[PaperRecord]]:
    """
    Split the corpus at the hyperauthorship cutoff.

    A paper is hyperauthored when it has more than `cutoff` authors. Returns the retained corpus and
    the removed papers. Authors who only appear on removed papers are gone from the retained corpus.
    """
    if cutoff < 1:
        raise ValueError(f"The cutoff must be at least 1, got {cutoff}.")

    retained: list[PaperRecord] = []
    removed: list[PaperRecord] = []
    for paper in corpus:
        if paper.n_authors <= cutoff:
            retained.append(paper)
        else:
            removed.append(paper)

    logger.info(
        "Cutoff %s keeps %d papers and removes %d hyperauthored papers",
        cutoff,
        len(retained),
        len(removed),
    )
    return Corpus(retained, corpus.rejected), removed


def removed_summary(removed: Iterable[PaperRecord]) -> AuthorCountDistribution | None:
    """Distribution of the author counts of the removed papers, or None when nothing was removed."""
    counts = [paper.n_authors for paper in removed]
    if not counts:
        return None
    return AuthorCountDistribution.from_counts(counts)
