import math

import numpy as np
import pytest

from hyperauthorship.errors import DisconnectedGraphError, InvalidParameterError, UndefinedMetricError
from hyperauthorship.metrics import (
    average_clustering,
    average_path_length,
    cohesion_report,
    connected_components,
    density,
    giant_component,
    path_length_estimate,
)

from oracles import distance_matrix, graph_of, random_graph


def connected_random_graphs(seed: int, count: int, weighted=False):
    rng = np.random.default_rng(seed)
    for _ in range(count):
        n = int(rng.integers(3, 31))
        graph = random_graph(rng, n, float(rng.uniform(0.1, 0.5)), weighted)
        if graph.n_edges:
            yield giant_component(graph)


def test_density(triangle, path3):
    assert density(triangle) == 1.0
    assert density(path3) == pytest.approx(2 / 3)


@pytest.mark.parametrize("n", range(2, 21))
def test_complete_graph_density_is_one(n):
    nodes = [f"n{i:02d}" for i in range(n)]
    edges = [(nodes[i], nodes[j]) for i in range(n) for j in range(i + 1, n)]
    assert density(graph_of(edges)) == 1.0


def test_density_needs_two_nodes():
    with pytest.raises(UndefinedMetricError):
        density(graph_of([], nodes=["a"]))


def test_average_clustering(triangle, star):
    assert average_clustering(triangle) == 1.0
    assert average_clustering(star) == 0.0


def test_connected_components():
    graph = graph_of([("c", "d"), ("a", "b")])
    assert connected_components(graph) == [{"a", "b"}, {"c", "d"}]
    assert connected_components(graph_of([])) == []


def test_giant_component_prefers_the_largest_then_the_smallest_id():
    graph = graph_of([("x", "y"), ("y", "z"), ("x", "z"), ("a", "b")])
    assert giant_component(graph).nodes == ("x", "y", "z")
    assert giant_component(graph_of([("c", "d"), ("a", "b")])).nodes == ("a", "b")


def test_giant_component_of_a_connected_graph_is_the_graph(path3):
    assert giant_component(path3).nodes == path3.nodes
    assert giant_component(path3).n_edges == path3.n_edges


def test_average_path_length_of_a_path(path3):
    assert average_path_length(path3) == pytest.approx(4 / 3)


def test_weights_are_distances():
    graph = graph_of([("a", "b", 0.5)], "newman")
    assert average_path_length(graph, use_weights=True) == pytest.approx(0.5)
    assert average_path_length(graph, use_weights=False) == 1.0


def test_path_length_needs_a_connected_graph():
    with pytest.raises(DisconnectedGraphError):
        average_path_length(graph_of([("a", "b"), ("c", "d")]))


@pytest.mark.parametrize("weighted", [False, True])
def test_average_path_length_matches_floyd_warshall(weighted):
    for graph in connected_random_graphs(5, 30, weighted):
        if graph.n_nodes < 2:
            continue
        distances = distance_matrix(graph, weighted)
        n = graph.n_nodes
        expected = distances.sum() / (n * (n - 1))
        assert average_path_length(graph, use_weights=weighted) == pytest.approx(expected, abs=1e-9)


def test_sampled_path_length_is_seeded():
    graph = next(g for g in connected_random_graphs(9, 50) if g.n_nodes >= 20)
    exact = path_length_estimate(graph)
    assert exact.exact and exact.sources == graph.n_nodes and exact.seed is None

    first = path_length_estimate(graph, exact_threshold=5, sample_size=10, seed=3)
    second = path_length_estimate(graph, exact_threshold=5, sample_size=10, seed=3, n_jobs=4)
    assert not first.exact
    assert first.sources == 10
    assert first.seed == 3
    assert first.value == second.value

    everything = path_length_estimate(graph, exact_threshold=5, sample_size=graph.n_nodes, seed=3)
    assert everything.value == pytest.approx(exact.value, abs=1e-12)

    with pytest.raises(InvalidParameterError):
        path_length_estimate(graph, exact_threshold=5, sample_size=10)


def test_cohesion_report():
    graph = graph_of([("a", "b"), ("b", "c"), ("a", "c"), ("d", "e")])
    report = cohesion_report(graph, seed=1)
    assert report.n_nodes == 5
    assert report.n_edges == 4
    assert report.density == pytest.approx(0.4)
    assert report.avg_clustering == pytest.approx(0.6)
    assert report.avg_path_length == 1.0
    assert report.n_components == 2
    assert report.giant_component_nodes == 3
    assert report.giant_component_edges == 3
    assert report.path_length_exact
    assert report.to_dict()["giant_component_edges"] == 3


def test_cohesion_report_without_edges():
    report = cohesion_report(graph_of([], nodes=["a", "b"]))
    assert math.isnan(report.avg_path_length)
    assert report.n_components == 2
    assert report.density == 0.0
