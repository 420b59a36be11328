import numpy as np
import pytest

from hyperauthorship.cli import SynthParams, generate_corpus
from hyperauthorship.corpus import author_count_distribution
from hyperauthorship.errors import ConfigurationError


def test_same_seed_same_corpus():
    params = SynthParams(n_papers=300, n_authors=900, seed=11)
    assert generate_corpus(params) == generate_corpus(params)
    assert generate_corpus(params) != generate_corpus(SynthParams(n_papers=300, n_authors=900, seed=12))


def test_identifiers():
    corpus = generate_corpus(SynthParams(n_papers=50, n_authors=200, seed=1))
    assert corpus.papers[0].paper_id == "P000001"
    assert corpus.papers[-1].paper_id == "P000050"
    assert all(author.startswith("A") and len(author) == 7 for author in corpus.authors)


def test_no_hyperauthored_papers_without_a_rate():
    corpus = generate_corpus(SynthParams(n_papers=2000, n_authors=5000, hyper_rate=0, seed=2))
    assert author_count_distribution(corpus).maximum < 30


def test_hyperauthored_papers_fall_in_range():
    params = SynthParams(n_papers=2000, n_authors=5000, hyper_rate=0.05, hyper_min=40, hyper_max=60, seed=3)
    counts = np.array([paper.n_authors for paper in generate_corpus(params)])
    large = counts[counts >= 40]
    assert large.size > 0
    assert large.max() <= 60
    assert large.size == pytest.approx(0.05 * counts.size, rel=0.4)


def test_default_shape_has_a_long_tail():
    baseline = author_count_distribution(
        generate_corpus(SynthParams(n_papers=19000, hyper_rate=0, seed=4))
    )
    assert 4.8 <= baseline.mean <= 5.4

    mixed = author_count_distribution(generate_corpus(SynthParams(n_papers=19000, seed=4)))
    assert 5.6 <= mixed.mean <= 6.6
    assert mixed.skewness > 0.5


def test_hyperauthored_papers_reuse_one_collaboration():
    params = SynthParams(n_papers=3000, n_authors=8000, hyper_rate=0.02, hyper_min=30, hyper_max=60, seed=6)
    corpus = generate_corpus(params)
    hyper_authors = {a for paper in corpus if paper.n_authors >= 30 for a in paper.author_ids}
    baseline_authors = {a for paper in corpus if paper.n_authors < 30 for a in paper.author_ids}
    assert params.collaboration_size == 180
    assert 60 <= len(hyper_authors) <= 180
    assert hyper_authors <= baseline_authors


def test_small_author_pool_keeps_bylines_distinct():
    corpus = generate_corpus(
        SynthParams(n_papers=100, n_authors=40, hyper_rate=0.1, hyper_min=30, hyper_max=40, seed=5)
    )
    assert corpus.n_authors <= 40
    for paper in corpus:
        assert len(set(paper.author_ids)) == paper.n_authors


@pytest.mark.parametrize(
    "overrides",
    [
        {"n_papers": 0},
        {"sigma": -1.0},
        {"hyper_rate": 1.5},
        {"novelty": -0.1},
        {"hyper_min": 1},
        {"hyper_min": 50, "hyper_max": 40},
        {"n_authors": 100, "hyper_max": 160},
        {"seed": -1},
        {"collaboration": 100},
        {"n_authors": 500, "collaboration": 600},
    ],
)
def test_infeasible_parameters(overrides):
    with pytest.raises(ConfigurationError):
        SynthParams(**overrides)
