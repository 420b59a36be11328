import io
import math

import numpy as np
import pytest

from hyperauthorship.corpus import (
    Corpus,
    PaperRecord,
    author_count_distribution,
    build_bipartite,
    filter_hyperauthored,
    log_binned,
    parse_corpus,
    removed_summary,
    write_corpus,
)
from hyperauthorship.errors import CorpusParseError, InputError


def test_long_csv_groups_rows_into_papers(parse):
    corpus = parse(
        "paper_id,author_id\n"
        "p2,b\n"
        "p1,a\n"
        "p1,b\n"
        "p2,a\n"
        "p2,a\n"
        "p3,\n"
    )
    assert [paper.paper_id for paper in corpus] == ["p1", "p2"]
    assert corpus.paper("p2").author_ids == ("a", "b")
    assert corpus.n_authors == 2
    assert len(corpus.rejected) == 1
    assert corpus.rejected[0]["paper_id"] == "p3"
    assert corpus.rejected[0]["line_number"] == 7


def test_long_csv_reports_the_malformed_line(parse):
    with pytest.raises(CorpusParseError) as info:
        parse("paper_id,author_id\np1,a\np2,b,extra\n")
    assert info.value.line_number == 3


def test_long_csv_short_row_is_a_parse_error(parse):
    with pytest.raises(CorpusParseError) as info:
        parse("paper_id,author_id\np1,a\np2\np3,b\n")
    assert info.value.line_number == 3

    corpus = parse("paper_id,author_id\np1,a\np3,\n")
    assert [paper.paper_id for paper in corpus] == ["p1"]
    assert corpus.rejected[0]["paper_id"] == "p3"


def test_long_csv_rejects_a_wrong_header(parse):
    with pytest.raises(CorpusParseError) as info:
        parse("paper,author\np1,a\n")
    assert info.value.line_number == 1


def test_json_lines_keeps_byline_order(parse):
    corpus = parse(
        '{"paper_id": "p1", "authors": ["z", "a", "z", "m"], "year": 2019, "title": "T"}\n'
        "\n"
        '{"paper_id": "p0", "authors": []}\n',
        "jsonl",
    )
    paper = corpus.paper("p1")
    assert paper.author_ids == ("z", "a", "m")
    assert paper.year == 2019
    assert paper.title == "T"
    assert corpus.n_papers == 1
    assert corpus.rejected[0]["line_number"] == 3


def test_json_lines_strips_and_deduplicates_authors(parse):
    corpus = parse('{"paper_id": "p1", "authors": [" a ", "b", "a", "  "]}\n', "jsonl")
    assert corpus.paper("p1") == PaperRecord.from_byline("p1", ["a", "b"])


def test_json_lines_duplicate_paper_id_is_an_error(parse):
    with pytest.raises(CorpusParseError) as info:
        parse('{"paper_id": "p1", "authors": ["a"]}\n{"paper_id": "p1", "authors": ["b"]}\n', "jsonl")
    assert info.value.line_number == 2


def test_json_lines_invalid_json(parse):
    with pytest.raises(CorpusParseError) as info:
        parse('{"paper_id": "p1", "authors": ["a"]}\n{"paper_id": \n', "jsonl")
    assert info.value.line_number == 2


def test_unknown_format_is_an_input_error(parse):
    with pytest.raises(InputError):
        parse("paper_id,author_id\n", "xml")


@pytest.mark.parametrize("format", ["long-csv", "jsonl"])
def test_written_corpus_parses_back(small_corpus, format):
    sink = io.BytesIO()
    write_corpus(small_corpus, sink, format)
    sink.seek(0)
    parsed = parse_corpus(sink, format)
    assert [p.paper_id for p in parsed] == [p.paper_id for p in small_corpus]
    for paper in parsed:
        assert set(paper.author_ids) == set(small_corpus.paper(paper.paper_id).author_ids)


def test_duplicate_authors_and_empty_bylines_are_invalid():
    with pytest.raises(ValueError):
        PaperRecord("p1", ("a", "a"))
    with pytest.raises(ValueError):
        PaperRecord("p1", ())
    assert PaperRecord.from_byline("p1", ["a", "b", "a"]).author_ids == ("a", "b")


def test_corpus_rejects_duplicate_papers():
    with pytest.raises(ValueError):
        Corpus([PaperRecord("p1", ("a",)), PaperRecord("p1", ("b",))])


def test_author_count_distribution():
    corpus = Corpus(
        PaperRecord(f"p{i}", tuple(f"a{j}" for j in range(count)))
        for i, count in enumerate([1, 2, 3, 4, 10])
    )
    distribution = author_count_distribution(corpus)
    assert distribution.histogram == {1: 1, 2: 1, 3: 1, 4: 1, 10: 1}
    assert distribution.n == 5
    assert distribution.mean == 4.0
    assert distribution.median == 3.0
    assert distribution.sd == pytest.approx(math.sqrt(12.5))
    assert distribution.skewness > 0
    assert (distribution.minimum, distribution.maximum) == (1, 10)


def test_single_paper_has_zero_spread():
    distribution = author_count_distribution(Corpus([PaperRecord("p1", ("a", "b"))]))
    assert distribution.sd == 0.0
    assert distribution.skewness == 0.0


def test_filter_removes_papers_above_the_cutoff(small_corpus):
    retained, removed = filter_hyperauthored(small_corpus, 3)
    assert [paper.paper_id for paper in removed] == ["p4"]
    assert retained.n_papers == 3
    assert "h00" not in retained.authors
    assert "a" in retained.authors

    summary = removed_summary(removed)
    assert summary is not None
    assert summary.minimum == summary.maximum == 9


def test_filter_with_a_high_cutoff_keeps_everything(small_corpus):
    retained, removed = filter_hyperauthored(small_corpus, math.inf)
    assert retained == small_corpus
    assert removed == []
    assert removed_summary(removed) is None


def test_filter_rejects_a_cutoff_below_one(small_corpus):
    with pytest.raises(ValueError):
        filter_hyperauthored(small_corpus, 0)


def test_bipartite_graph(small_corpus):
    bipartite = build_bipartite(small_corpus)
    assert bipartite.paper_nodes == {"p1", "p2", "p3", "p4"}
    assert bipartite.n_edges == sum(paper.n_authors for paper in small_corpus)
    assert bipartite.paper_degree("p4") == 9
    assert bipartite.author_degree("a") == 2
    assert bipartite.bylines["p1"] == ("a", "b", "c")


def test_paper_and_author_ids_do_not_collide():
    bipartite = build_bipartite(Corpus([PaperRecord("x", ("x", "y"))]))
    assert bipartite.paper_nodes == {"x"}
    assert bipartite.author_nodes == {"x", "y"}
    assert bipartite.edges == {("x", "x"), ("x", "y")}


def test_log_binned_drops_zeros_and_keeps_every_positive_value():
    values = [0, 0, 1, 1, 2, 3, 5, 8, 13, 100]
    bins = log_binned(values, n_bins=5)
    assert len(bins) == 5
    assert sum(b["count"] for b in bins) == 8
    assert bins[0]["bin_low"] == pytest.approx(1.0)
    assert all(b["bin_low"] < b["bin_high"] for b in bins)
    assert log_binned([0, 0]) == []


def random_corpus(rng: np.random.Generator, n_papers: int = 60) -> Corpus:
    return Corpus(
        PaperRecord.from_byline(
            f"p{i:03d}",
            [f"a{j:03d}" for j in rng.integers(0, 80, size=int(rng.integers(1, 40)))],
        )
        for i in range(n_papers)
    )


def test_long_csv_row_order_does_not_matter(parse):
    rng = np.random.default_rng(11)
    rows = [f"p{rng.integers(0, 15)},a{rng.integers(0, 30)}" for _ in range(200)]
    reference = parse("paper_id,author_id\n" + "\n".join(rows) + "\n")
    for _ in range(5):
        shuffled = list(rng.permutation(rows))
        assert parse("paper_id,author_id\n" + "\n".join(shuffled) + "\n") == reference


def test_filter_partitions_the_corpus():
    rng = np.random.default_rng(5)
    for _ in range(10):
        corpus = random_corpus(rng)
        for cutoff in (1, 5, 17, 39):
            retained, removed = filter_hyperauthored(corpus, cutoff)
            assert retained.n_papers + len(removed) == corpus.n_papers
            assert all(paper.n_authors <= cutoff for paper in retained)
            assert all(paper.n_authors > cutoff for paper in removed)


def test_raising_the_cutoff_never_drops_papers():
    rng = np.random.default_rng(6)
    for _ in range(10):
        corpus = random_corpus(rng)
        kept = [
            {paper.paper_id for paper in filter_hyperauthored(corpus, cutoff)[0]}
            for cutoff in range(1, 41)
        ]
        for lower, higher in zip(kept, kept[1:]):
            assert lower <= higher
