import numpy as np
import pytest

from hyperauthorship.corpus import Corpus, PaperRecord, build_bipartite
from hyperauthorship.errors import InputError, InvalidParameterError
from hyperauthorship.projection import (
    CoauthorGraph,
    project,
    project_full,
    project_newman,
    read_edge_list,
    reweight_jaccard,
    sidecar_path,
    strip_weights,
    write_edge_list,
)

from oracles import graph_of, jaccard_weights, multi_authored_papers, random_corpus, shared_paper_counts


@pytest.fixture
def two_papers() -> Corpus:
    return Corpus([PaperRecord("p1", ("a", "b", "c")), PaperRecord("p2", ("a", "b"))])


def test_full_counting_counts_shared_papers(two_papers):
    graph = project_full(build_bipartite(two_papers))
    assert graph.scheme == "full"
    assert graph.weight("a", "b") == 2
    assert graph.weight("a", "c") == 1
    assert graph.n_edges == 3


def test_newman_weights(two_papers):
    graph = project_newman(build_bipartite(two_papers))
    assert graph.weight("a", "b") == pytest.approx(1.5)
    assert graph.weight("b", "c") == pytest.approx(0.5)


def test_single_author_papers_leave_isolated_nodes():
    corpus = Corpus([PaperRecord("p1", ("a",)), PaperRecord("p2", ("b", "c"))])
    for scheme in ("full", "newman", "jaccard", "unweighted"):
        graph = project(build_bipartite(corpus), scheme)
        assert graph.nodes == ("a", "b", "c")
        assert graph.isolated_nodes() == ["a"]


def test_jaccard_of_a_path():
    graph = reweight_jaccard(graph_of([("a", "b"), ("b", "c")], "full"))
    # N(a) = {b}, N(b) = {a, c}: nothing shared
    assert graph.weight("a", "b") == 0.0


def test_jaccard_of_a_triangle(triangle):
    graph = reweight_jaccard(triangle)
    # N(a) = {b, c}, N(b) = {a, c}: shared {c} over {a, b, c}
    assert graph.weight("a", "b") == pytest.approx(1 / 3)


def test_jaccard_needs_counts_not_fractions(two_papers):
    with pytest.raises(InvalidParameterError):
        reweight_jaccard(project_newman(build_bipartite(two_papers)))


def test_strip_weights(two_papers):
    graph = strip_weights(project_full(build_bipartite(two_papers)))
    assert graph.scheme == "unweighted"
    assert {w for _, _, w in graph.edges()} == {1.0}


def test_projections_match_brute_force():
    rng = np.random.default_rng(11)
    for _ in range(200):
        corpus = random_corpus(rng)
        bipartite = build_bipartite(corpus)

        full = project_full(bipartite)
        assert {(u, v): w for u, v, w in full.edges()} == shared_paper_counts(corpus)

        newman = project_newman(bipartite)
        for author in corpus.authors:
            assert newman.strength(author) == pytest.approx(
                multi_authored_papers(corpus, author), abs=1e-9
            )

        jaccard = reweight_jaccard(full)
        assert {(u, v): w for u, v, w in jaccard.edges()} == jaccard_weights(full.graph)


def test_graph_rejects_invalid_weights():
    with pytest.raises(ValueError):
        graph_of([("a", "b", 0.5)], "full")
    with pytest.raises(ValueError):
        graph_of([("a", "b", 2)], "unweighted")
    with pytest.raises(ValueError):
        graph_of([("a", "b", 1.5)], "jaccard")
    with pytest.raises(ValueError):
        graph_of([("a", "a")])


def test_csr_view_is_sorted_and_symmetric():
    graph = graph_of([("c", "a", 2), ("b", "a", 3)], "full")
    csr = graph.csr
    assert csr.nodes == ("a", "b", "c")
    assert csr.indptr.tolist() == [0, 2, 3, 4]
    assert csr.indices.tolist() == [1, 2, 0, 0]
    assert csr.weights.tolist() == [3.0, 2.0, 3.0, 2.0]


def test_subgraph_inherits_weights():
    graph = graph_of([("a", "b", 2), ("b", "c", 3), ("c", "d", 1)], "full")
    sub = graph.subgraph({"a", "b", "c"})
    assert sub.nodes == ("a", "b", "c")
    assert sub.weight("b", "c") == 3
    assert "d" not in sub


@pytest.mark.parametrize("scheme", ["full", "newman", "jaccard", "unweighted"])
def test_edge_list_reads_back(tmp_path, scheme):
    corpus = Corpus(
        [
            PaperRecord("p1", ("a", "b", "c")),
            PaperRecord("p2", ("a", "b")),
            PaperRecord("p3", ("c", "d", "e", "f")),
            PaperRecord("p4", ("solo",)),
        ]
    )
    graph = project(build_bipartite(corpus), scheme)
    path = tmp_path / f"edges_{scheme}.csv"
    write_edge_list(graph, path)

    assert sidecar_path(path).name == f"graph_{scheme}.json"
    loaded = read_edge_list(path)
    assert loaded.scheme == scheme
    assert loaded.nodes == graph.nodes
    assert loaded.n_edges == graph.n_edges
    for (u1, v1, w1), (u2, v2, w2) in zip(loaded.edges(), graph.edges()):
        assert (u1, v1) == (u2, v2)
        assert w1 == w2


def test_edge_list_count_mismatch_is_an_input_error(tmp_path):
    graph = graph_of([("a", "b"), ("b", "c")])
    path = tmp_path / "edges_unweighted.csv"
    write_edge_list(graph, path)
    path.write_text("author_i,author_j,weight\na,b,1\n", "utf-8")
    with pytest.raises(InputError):
        read_edge_list(path)


def test_graph_is_a_container(triangle):
    assert isinstance(triangle, CoauthorGraph)
    assert "a" in triangle
    assert len(triangle) == 3
    assert triangle.neighbors("a") == {"b", "c"}
