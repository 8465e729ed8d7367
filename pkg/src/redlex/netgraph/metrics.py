"""Structural metrics and centralities for semantic graphs.

All summary metrics (degrees, density, transitivity, assortativity, clique
number, distances, cores) are computed on the unweighted skeleton; edge
weights enter only the eigenvector centrality when requested.
"""

from __future__ import annotations

import math
import warnings
from collections import deque
from dataclasses import dataclass
from typing import Optional

import numpy as np
from scipy import sparse

from .graph import SemanticGraph, connected_components


@dataclass(frozen=True)
class NetworkSummary:
    mean_distance: float
    mean_degree: float
    degree_sd: float
    clique_number: int
    density: float
    transitivity: float
    assortativity: Optional[float]


def mean_distance(g: SemanticGraph) -> float:
    """Average unweighted shortest-path length over connected vertex pairs.

    Computed over the largest component when the graph is disconnected.
    """
    comp = max(connected_components(g), key=len) if g.n_vertices else []
    k = len(comp)
    if k < 2:
        raise ValueError("mean distance needs a component with >= 2 vertices")
    members = set(comp)
    total = 0
    for source in comp:
        dist = {source: 0}
        queue = deque([source])
        while queue:
            u = queue.popleft()
            for v in g.neighbors(u):
                if v in members and v not in dist:
                    dist[v] = dist[u] + 1
                    queue.append(v)
        total += sum(dist.values())
    return total / (k * (k - 1))


def density(g: SemanticGraph) -> float:
    n = g.n_vertices
    if n < 2:
        raise ValueError("density needs at least 2 vertices")
    return 2.0 * g.n_edges / (n * (n - 1))


def transitivity(g: SemanticGraph) -> float:
    """3 * triangles / connected triples (0.0 when there are no triples)."""
    neighbor_sets = [set(g.neighbors(v)) for v in range(g.n_vertices)]
    closed = sum(
        len(neighbor_sets[u] & neighbor_sets[v]) for u, v, _ in g.edges()
    )  # counts each triangle three times, once per edge
    triples = sum(d * (d - 1) // 2 for d in g.degrees())
    return closed / triples if triples else 0.0


def assortativity(g: SemanticGraph) -> Optional[float]:
    """Pearson correlation of end-point degrees over edges (both orientations).

    None when either endpoint degree sequence is constant (zero variance).
    """
    if g.n_edges == 0:
        return None
    deg = g.degrees()
    xs = np.empty(2 * g.n_edges)
    ys = np.empty(2 * g.n_edges)
    for i, (u, v, _) in enumerate(g.edges()):
        xs[2 * i], ys[2 * i] = deg[u], deg[v]
        xs[2 * i + 1], ys[2 * i + 1] = deg[v], deg[u]
    if np.all(xs == xs[0]):
        return None
    with np.errstate(invalid="ignore"):
        r = float(np.corrcoef(xs, ys)[0, 1])
    return None if math.isnan(r) else r


def clique_number(g: SemanticGraph) -> int:
    """Size of a maximum clique, by Bron-Kerbosch search with pivoting."""
    n = g.n_vertices
    if n == 0:
        return 0
    adj = [frozenset(g.neighbors(v)) for v in range(n)]
    best = 1

    def expand(size: int, candidates: set[int], excluded: set[int]) -> None:
        nonlocal best
        if not candidates and not excluded:
            best = max(best, size)
            return
        if size + len(candidates) <= best:
            return
        pivot = max(candidates | excluded, key=lambda u: len(adj[u] & candidates))
        for v in sorted(candidates - adj[pivot]):
            expand(size + 1, candidates & adj[v], excluded & adj[v])
            candidates.remove(v)
            excluded.add(v)

    expand(0, set(range(n)), set())
    return best


def network_summary(g: SemanticGraph) -> NetworkSummary:
    """The descriptive measures table for a graph with >= 2 vertices."""
    if g.n_vertices < 2:
        raise ValueError("network_summary needs at least 2 vertices")
    deg = np.array(g.degrees(), dtype=float)
    return NetworkSummary(
        mean_distance=mean_distance(g),
        mean_degree=float(deg.mean()),
        degree_sd=float(deg.std(ddof=1)),
        clique_number=clique_number(g),
        density=density(g),
        transitivity=transitivity(g),
        assortativity=assortativity(g),
    )


def eigenvector_centrality(
    g: SemanticGraph,
    use_weights: bool = False,
    tol: float = 1e-10,
    max_iter: int = 1_000_000,
) -> dict[str, float]:
    """Dominant adjacency eigenvector by power iteration, max-normalized.

    The graph must be connected.  Iteration runs on A + I, which has the
    same dominant eigenvector as A but converges on bipartite graphs too.
    Absolute values are taken and the vector is scaled so its maximum is 1.
    """
    if tol <= 0.0:
        raise ValueError("tol must be > 0")
    n = g.n_vertices
    if n == 0:
        raise ValueError("eigenvector centrality undefined on the empty graph")
    if len(connected_components(g)) > 1:
        raise ValueError("graph must be connected (run on the giant component)")
    if n == 1:
        return {g.label_of(0): 1.0}

    rows, cols, vals = [], [], []
    for u, v, w in g.edges():
        weight = float(w) if use_weights else 1.0
        rows.extend((u, v))
        cols.extend((v, u))
        vals.extend((weight, weight))
    a = sparse.csr_matrix((vals, (rows, cols)), shape=(n, n))

    x = np.full(n, 1.0 / math.sqrt(n))
    for _ in range(max_iter):
        y = a.dot(x) + x
        y /= np.linalg.norm(y)
        if np.max(np.abs(y - x)) < tol:
            x = y
            break
        x = y
    else:
        raise RuntimeError(f"power iteration did not converge in {max_iter} iterations")

    x = np.abs(x)
    x /= x.max()
    return {g.label_of(i): float(x[i]) for i in range(n)}


def betweenness_centrality(g: SemanticGraph) -> dict[str, float]:
    """Unweighted shortest-path betweenness (Brandes accumulation).

    Unordered vertex pairs are counted once; path endpoints are excluded.
    """
    n = g.n_vertices
    score = [0.0] * n
    for source in range(n):
        # BFS from source, recording shortest-path counts and predecessors.
        sigma = [0.0] * n
        dist = [-1] * n
        preds: list[list[int]] = [[] for _ in range(n)]
        sigma[source] = 1.0
        dist[source] = 0
        order: list[int] = []
        queue = deque([source])
        while queue:
            u = queue.popleft()
            order.append(u)
            for v in g.neighbors(u):
                if dist[v] < 0:
                    dist[v] = dist[u] + 1
                    queue.append(v)
                if dist[v] == dist[u] + 1:
                    sigma[v] += sigma[u]
                    preds[v].append(u)
        # Dependency accumulation in reverse BFS order.
        delta = [0.0] * n
        for w in reversed(order):
            for u in preds[w]:
                delta[u] += sigma[u] / sigma[w] * (1.0 + delta[w])
            if w != source:
                score[w] += delta[w]
    return {g.label_of(v): score[v] / 2.0 for v in range(n)}


def k_core_decomposition(g: SemanticGraph) -> dict[str, int]:
    """Core number per vertex via the standard peeling order."""
    n = g.n_vertices
    if n == 0:
        return {}
    degree = g.degrees()
    max_deg = max(degree)
    buckets: list[list[int]] = [[] for _ in range(max_deg + 1)]
    for v, d in enumerate(degree):
        buckets[d].append(v)
    core = [0] * n
    removed = [False] * n
    current = 0
    for _ in range(n):
        d = current
        while not buckets[d]:
            d += 1
        v = buckets[d].pop()
        current = d
        core[v] = current
        removed[v] = True
        for u in g.neighbors(v):
            if not removed[u] and degree[u] > current:
                buckets[degree[u]].remove(u)
                degree[u] -= 1
                buckets[degree[u]].append(u)
    return {g.label_of(v): core[v] for v in range(n)}


def k_core_filter_below_median(g: SemanticGraph) -> SemanticGraph:
    """Vertices whose core number is below the (lower) median core number.

    Intended for visualization exports, where the most connected cores
    dominate the picture.  Warns and returns the empty graph when no vertex
    falls below the median (e.g. all cores equal).
    """
    cores = k_core_decomposition(g)
    if not cores:
        return g
    values = sorted(cores.values())
    median = values[(len(values) - 1) // 2]
    kept = [g.index_of(label) for label, c in cores.items() if c < median]
    if not kept:
        warnings.warn("no vertex has core number below the median; result is empty")
    return g.induced_subgraph(kept)
