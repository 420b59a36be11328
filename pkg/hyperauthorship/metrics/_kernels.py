"""
Shortest-path kernels over CSR adjacency arrays.

The kernels are compiled with numba and release the GIL, so map_chunks can spread sources over
threads. Edge weights are used directly as distances. A node u is a shortest-path predecessor of w
when u was settled before w and dist[u] + weight(u, w) == dist[w]; settle order breaks the ties
zero-weight edges would otherwise create.
"""

import heapq

import numpy as np
from numba import njit

from ..projection import CSRView
from ..utils import map_chunks


@njit(nogil=True)
def _bfs_paths(indptr, indices, source):
    n = indptr.size - 1
    dist = np.full(n, np.inf)
    sigma = np.zeros(n)
    order = np.empty(n, dtype=np.int64)

    dist[source] = 0.0
    sigma[source] = 1.0
    order[0] = source
    head = 0
    tail = 1
    while head < tail:
        v = order[head]
        head += 1
        next_dist = dist[v] + 1.0
        for k in range(indptr[v], indptr[v + 1]):
            w = indices[k]
            if dist[w] == np.inf:
                dist[w] = next_dist
                order[tail] = w
                tail += 1
            if dist[w] == next_dist:
                sigma[w] += sigma[v]
    return dist, sigma, order, tail


@njit(nogil=True)
def _dijkstra_paths(indptr, indices, weights, source):
    n = indptr.size - 1
    dist = np.full(n, np.inf)
    sigma = np.zeros(n)
    order = np.empty(n, dtype=np.int64)
    settled = np.zeros(n, dtype=np.bool_)

    dist[source] = 0.0
    heap = [(0.0, source)]
    count = 0
    while len(heap) > 0:
        d, v = heapq.heappop(heap)
        if settled[v] or d > dist[v]:
            continue
        settled[v] = True
        order[count] = v
        count += 1

        if v == source:
            sigma[v] = 1.0
        else:
            paths = 0.0
            for k in range(indptr[v], indptr[v + 1]):
                u = indices[k]
                if settled[u] and u != v and dist[u] + weights[k] == d:
                    paths += sigma[u]
            sigma[v] = paths

        for k in range(indptr[v], indptr[v + 1]):
            w = indices[k]
            if settled[w]:
                continue
            candidate = d + weights[k]
            if candidate < dist[w]:
                dist[w] = candidate
                heapq.heappush(heap, (candidate, w))
    return dist, sigma, order, count


@njit(nogil=True)
def _single_source(indptr, indices, weights, source, weighted):
    if weighted:
        return _dijkstra_paths(indptr, indices, weights, source)
    return _bfs_paths(indptr, indices, source)


@njit(nogil=True)
def _brandes_chunk(indptr, indices, weights, sources, weighted):
    n = indptr.size - 1
    betweenness = np.zeros(n)
    delta = np.zeros(n)
    position = np.full(n, -1, dtype=np.int64)

    for source in sources:
        dist, sigma, order, count = _single_source(indptr, indices, weights, source, weighted)
        for i in range(count):
            position[order[i]] = i
            delta[order[i]] = 0.0

        for i in range(count - 1, -1, -1):
            w = order[i]
            coefficient = (1.0 + delta[w]) / sigma[w]
            for k in range(indptr[w], indptr[w + 1]):
                v = indices[k]
                p = position[v]
                if p >= 0 and p < i:
                    step = weights[k] if weighted else 1.0
                    if dist[v] + step == dist[w]:
                        delta[v] += sigma[v] * coefficient
            if w != source:
                betweenness[w] += delta[w]

        for i in range(count):
            position[order[i]] = -1
    return betweenness


@njit(nogil=True)
def _distance_sums_chunk(indptr, indices, weights, sources, weighted):
    m = sources.size
    totals = np.zeros(m)
    reached = np.zeros(m, dtype=np.int64)
    for i in range(m):
        source = sources[i]
        dist, _, order, count = _single_source(indptr, indices, weights, source, weighted)
        total = 0.0
        for j in range(count):
            node = order[j]
            if node != source:
                total += dist[node]
        totals[i] = total
        reached[i] = count - 1
    return totals, reached


def brandes_dependencies(
    csr: CSRView, sources: np.ndarray, weighted: bool, n_jobs: int | None = None
) -> np.ndarray:
    """Sum of Brandes dependencies over `sources`, reduced in source-chunk order."""
    sources = np.ascontiguousarray(sources, dtype=np.int64)
    parts = map_chunks(
        lambda chunk: _brandes_chunk(csr.indptr, csr.indices, csr.weights, chunk, weighted),
        sources,
        n_jobs=n_jobs,
        desc="betweenness",
    )
    total = np.zeros(csr.n)
    for part in parts:
        total += part
    return total


def distance_sums(
    csr: CSRView, sources: np.ndarray, weighted: bool, n_jobs: int | None = None
) -> tuple[np.ndarray, np.ndarray]:
    """
    For every source: the sum of shortest-path distances to the nodes it reaches, and how many
    nodes (itself excluded) it reaches.
    """
    sources = np.ascontiguousarray(sources, dtype=np.int64)
    if sources.size == 0:
        return np.zeros(0), np.zeros(0, dtype=np.int64)
    parts = map_chunks(
        lambda chunk: _distance_sums_chunk(csr.indptr, csr.indices, csr.weights, chunk, weighted),
        sources,
        n_jobs=n_jobs,
        desc="shortest paths",
    )
    totals = np.concatenate([part[0] for part in parts])
    reached = np.concatenate([part[1] for part in parts])
    return totals, reached
