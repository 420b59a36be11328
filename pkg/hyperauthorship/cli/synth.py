import logging
from dataclasses import dataclass

import numpy as np

from ..corpus import Corpus, PaperRecord
from ..errors import ConfigurationError

logger = logging.getLogger(__name__)

MAX_COLLISION_RETRIES = 32


@dataclass(frozen=True)
class SynthParams:
    """
    Parameters of the synthetic corpus generator.

    Parameters:
    - n_papers: number of papers
    - n_authors: size of the author pool
    - mu, sigma: lognormal parameters of the baseline authors-per-paper count
    - hyper_rate: fraction of papers whose author count is drawn from [hyper_min, hyper_max]
    - novelty: chance that a baseline author slot goes to an author never seen before
    - collaboration: members of the large collaboration that signs every hyperauthored paper,
      3 * hyper_max (capped at n_authors) when None
    - seed: generator seed
    """

    n_papers: int = 20000
    n_authors: int = 30000
    mu: float = 1.35
    sigma: float = 0.75
    hyper_rate: float = 0.01
    hyper_min: int = 30
    hyper_max: int = 160
    novelty: float = 0.25
    collaboration: int | None = None
    seed: int = 0

    def __post_init__(self):
        if self.n_papers < 1 or self.n_authors < 1:
            raise ConfigurationError("--papers and --authors must be positive.")
        if self.sigma < 0:
            raise ConfigurationError(f"--sigma must be non-negative, got {self.sigma}.")
        if not 0 <= self.hyper_rate <= 1:
            raise ConfigurationError(f"--hyper-rate must be in [0, 1], got {self.hyper_rate}.")
        if not 0 <= self.novelty <= 1:
            raise ConfigurationError(f"--novelty must be in [0, 1], got {self.novelty}.")
        if not 2 <= self.hyper_min <= self.hyper_max:
            raise ConfigurationError(
                f"Need 2 <= hyper_min <= hyper_max, got {self.hyper_min} and {self.hyper_max}."
            )
        if self.hyper_rate > 0 and self.hyper_max > self.n_authors:
            raise ConfigurationError(
                f"Hyperauthored papers of up to {self.hyper_max} authors need at least that many "
                f"authors, got {self.n_authors}."
            )
        if self.collaboration is not None and not (
            self.hyper_max <= self.collaboration <= self.n_authors
        ):
            raise ConfigurationError(
                f"--collaboration must be in [{self.hyper_max}, {self.n_authors}], "
                f"got {self.collaboration}."
            )
        if self.seed < 0:
            raise ConfigurationError(f"--seed must be non-negative, got {self.seed}.")

    @property
    def collaboration_size(self) -> int:
        if self.collaboration is not None:
            return self.collaboration
        return min(3 * self.hyper_max, self.n_authors)


class _AuthorPool:
    """
    Hands out author ids with preferential repetition: a slot goes to a new author with probability
    `novelty` while the pool lasts, otherwise to the author of a uniformly chosen earlier slot.
    """

    def __init__(self, params: SynthParams, rng: np.random.Generator):
        self._rng = rng
        self._novelty = params.novelty
        self._size = params.n_authors
        self._width = max(6, len(str(params.n_authors)))
        self._created = 0
        self._slots: list[int] = []

    @property
    def n_created(self) -> int:
        return self._created

    def _new(self) -> int:
        self._created += 1
        return self._created - 1

    def _draw(self, taken: set[int]) -> int:
        can_create = self._created < self._size
        if can_create and (not self._slots or self._rng.random() < self._novelty):
            return self._new()

        for _ in range(MAX_COLLISION_RETRIES if self._slots else 0):
            author = self._slots[int(self._rng.integers(len(self._slots)))]
            if author not in taken:
                return author
        if can_create:
            return self._new()
        free = np.setdiff1d(np.arange(self._size), np.fromiter(taken, dtype=np.int64))
        return int(self._rng.choice(free))

    def _label(self, authors) -> tuple[str, ...]:
        return tuple(f"A{int(author) + 1:0{self._width}d}" for author in authors)

    def byline(self, n_authors: int) -> tuple[str, ...]:
        taken: set[int] = set()
        authors: list[int] = []
        for _ in range(n_authors):
            author = self._draw(taken)
            taken.add(author)
            authors.append(author)
        self._slots.extend(authors)
        return self._label(authors)

    def collaboration(self, size: int) -> np.ndarray:
        """
        A uniform sample of the authors created so far, topped up with new authors when fewer
        than `size` exist.
        """
        existing = min(size, self._created)
        members = list(self._rng.choice(self._created, size=existing, replace=False))
        members.extend(self._new() for _ in range(size - existing))
        return np.asarray(members, dtype=np.int64)

    def member_byline(self, members: np.ndarray, n_authors: int) -> tuple[str, ...]:
        return self._label(self._rng.choice(members, size=n_authors, replace=False))


def generate_corpus(params: SynthParams) -> Corpus:
    """
    Deterministic synthetic corpus. Baseline author counts are a rounded lognormal clipped to
    [1, hyper_min - 1]; a hyper_rate fraction of papers instead draws its count uniformly from
    [hyper_min, hyper_max].

    Baseline bylines are drawn first, in paper order. Hyperauthored bylines are then drawn from one
    collaboration of existing authors, so those papers add edges between people already in the
    network instead of adding people.
    """
    rng = np.random.default_rng(params.seed)

    upper = min(params.hyper_min - 1, params.n_authors)
    counts = np.clip(np.rint(rng.lognormal(params.mu, params.sigma, params.n_papers)), 1, upper)
    hyper = rng.random(params.n_papers) < params.hyper_rate
    counts[hyper] = rng.integers(params.hyper_min, params.hyper_max + 1, size=int(hyper.sum()))

    pool = _AuthorPool(params, rng)
    bylines: dict[int, tuple[str, ...]] = {
        i: pool.byline(int(counts[i])) for i in np.flatnonzero(~hyper)
    }
    if hyper.any():
        members = pool.collaboration(params.collaboration_size)
        for i in np.flatnonzero(hyper):
            bylines[i] = pool.member_byline(members, int(counts[i]))

    width = max(6, len(str(params.n_papers)))
    papers = [PaperRecord(f"P{i + 1:0{width}d}", bylines[i]) for i in range(params.n_papers)]

    logger.info(
        "Generated %d papers (%d hyperauthored) over %d authors",
        params.n_papers,
        int(hyper.sum()),
        pool.n_created,
    )
    return Corpus(papers)
