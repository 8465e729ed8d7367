"""Community detection with max-modularity method selection.

Four agglomerative/heuristic methods are provided: greedy modularity
agglomeration (fast greedy), Louvain, label propagation, and the optional
random-walk-based Walktrap.  Each runs per connected component (isolated
vertices get their own community), the resulting partition's modularity is
recomputed with the standard Newman formula, and the best method is the one
with the highest modularity (ties broken by a fixed method order).

Every method is deterministic given its seed: vertex visit orders and tie
breaks are drawn from a seeded generator.
"""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Optional

import numpy as np

from .graph import SemanticGraph, connected_components
from .metrics import eigenvector_centrality


class CommunityMethod(str, Enum):
    FAST_GREEDY = "fast_greedy"
    LOUVAIN = "louvain"
    LABEL_PROPAGATION = "label_propagation"
    WALKTRAP = "walktrap"


#: Fixed tie-break order for best-method selection.
METHOD_ORDER = (
    CommunityMethod.FAST_GREEDY,
    CommunityMethod.LOUVAIN,
    CommunityMethod.LABEL_PROPAGATION,
    CommunityMethod.WALKTRAP,
)

DEFAULT_METHODS = frozenset(
    (CommunityMethod.FAST_GREEDY, CommunityMethod.LOUVAIN, CommunityMethod.LABEL_PROPAGATION)
)


@dataclass(frozen=True)
class Partition:
    """Community assignment: vertex label -> community id in 0..k-1."""

    assignment: dict[str, int]

    @property
    def k(self) -> int:
        return max(self.assignment.values()) + 1 if self.assignment else 0

    def communities(self) -> list[list[str]]:
        groups: list[list[str]] = [[] for _ in range(self.k)]
        for label, c in self.assignment.items():
            groups[c].append(label)
        return [sorted(group) for group in groups]


@dataclass(frozen=True)
class CommunityResult:
    method: CommunityMethod
    partition: Partition
    modularity: float


@dataclass(frozen=True)
class DetectionResult:
    best: CommunityResult
    results: tuple[CommunityResult, ...]


def modularity(g: SemanticGraph, p: Partition, use_weights: bool = True) -> float:
    """Newman modularity Q = (1/2m) sum_ij (A_ij - d_i d_j / 2m) delta(c_i, c_j).

    The diagonal i = j is included, which makes the all-in-one partition
    score exactly zero.  With ``use_weights`` the A entries are edge weights
    and d the weighted degrees; otherwise everything is unweighted.
    """
    if set(p.assignment) != set(g.labels):
        raise ValueError("partition must cover exactly the graph's vertices")
    comm = [p.assignment[g.label_of(v)] for v in range(g.n_vertices)]
    n_comm = max(comm) + 1 if comm else 0
    internal = [0.0] * n_comm
    strength = [0.0] * n_comm
    m = 0.0
    for u, v, w in g.edges():
        weight = float(w) if use_weights else 1.0
        m += weight
        if comm[u] == comm[v]:
            internal[comm[u]] += weight
        strength[comm[u]] += weight
        strength[comm[v]] += weight
    if m == 0.0:
        raise ValueError("modularity undefined on a graph with no edges")
    return sum(
        internal[c] / m - (strength[c] / (2.0 * m)) ** 2 for c in range(n_comm)
    )


def _edge_weight(w: float, use_weights: bool) -> float:
    return float(w) if use_weights else 1.0


# --- fast greedy (greedy modularity agglomeration) ---------------------------


def _fast_greedy(g: SemanticGraph, use_weights: bool, rng) -> list[int]:
    """Merge the community pair with the largest modularity gain until one
    community remains; return the assignment with the best modularity seen."""
    n = g.n_vertices
    m = sum(_edge_weight(w, use_weights) for _, _, w in g.edges())
    # community state: inter-community weights, normalized strengths a_c
    links: list[dict[int, float]] = [{} for _ in range(n)]
    a = [0.0] * n
    for u, v, w in g.edges():
        weight = _edge_weight(w, use_weights)
        links[u][v] = links[u].get(v, 0.0) + weight
        links[v][u] = links[v].get(u, 0.0) + weight
        a[u] += weight / (2.0 * m)
        a[v] += weight / (2.0 * m)

    members: list[list[int]] = [[v] for v in range(n)]
    version = [0] * n
    alive = n

    heap: list[tuple[float, int, int, int, int]] = []

    def push(c: int, d: int) -> None:
        gain = links[c][d] / m - 2.0 * a[c] * a[d]
        lo, hi = (c, d) if c < d else (d, c)
        heapq.heappush(heap, (-gain, lo, hi, version[lo], version[hi]))

    for c in range(n):
        for d in links[c]:
            if c < d:
                push(c, d)

    q = -sum(x * x for x in a)
    best_q = q
    best_assignment = list(range(n))

    while alive > 1 and heap:
        neg_gain, c, d, ver_c, ver_d = heapq.heappop(heap)
        if version[c] != ver_c or version[d] != ver_d or d not in links[c]:
            continue
        q += -neg_gain
        # merge d into c
        members[c].extend(members[d])
        members[d] = []
        a[c] += a[d]
        for e, w in links[d].items():
            if e == c:
                continue
            links[e].pop(d, None)
            links[c][e] = links[c].get(e, 0.0) + w
            links[e][c] = links[c][e]
        links[c].pop(d, None)
        links[d] = {}
        version[c] += 1
        version[d] += 1
        alive -= 1
        if q > best_q + 1e-15:
            best_q = q
            best_assignment = [0] * n
            for root in range(n):
                for v in members[root]:
                    best_assignment[v] = root
        for e in links[c]:
            push(c, e)
    return best_assignment


# --- Louvain -------------------------------------------------------------------


def _louvain(g: SemanticGraph, use_weights: bool, rng) -> list[int]:
    n = g.n_vertices
    # level-0 working copy: adjacency dicts, no self loops yet
    adj: list[dict[int, float]] = [
        {v: _edge_weight(w, use_weights) for v, w in g.neighbors(u).items()}
        for u in range(n)
    ]
    loops = [0.0] * n
    node_of = list(range(n))  # original vertex -> current supernode
    m2 = sum(sum(nbrs.values()) for nbrs in adj)  # = 2m

    while True:
        size = len(adj)
        strength = [sum(adj[i].values()) + 2.0 * loops[i] for i in range(size)]
        comm = list(range(size))
        s_tot = strength.copy()

        improved = False
        # tie-moves keep Q constant, so cap the sweeps to guarantee termination
        for _sweep in range(100):
            moved = False
            for i in rng.permutation(size):
                i = int(i)
                old = comm[i]
                # weights from i to each neighboring community
                neigh: dict[int, float] = {old: 0.0}
                for j, w in adj[i].items():
                    neigh[comm[j]] = neigh.get(comm[j], 0.0) + w
                s_tot[old] -= strength[i]
                best_comm, best_gain = old, neigh[old] - s_tot[old] * strength[i] / m2
                for c, w_ic in neigh.items():
                    if c == old:
                        continue
                    gain = w_ic - s_tot[c] * strength[i] / m2
                    if gain > best_gain + 1e-12 or (
                        abs(gain - best_gain) <= 1e-12 and c < best_comm
                    ):
                        best_comm, best_gain = c, gain
                s_tot[best_comm] += strength[i]
                comm[i] = best_comm
                if best_comm != old:
                    moved = True
                    improved = True
            if not moved:
                break

        if not improved:
            break
        # aggregate communities into supernodes
        ids = sorted(set(comm))
        remap = {c: k for k, c in enumerate(ids)}
        new_size = len(ids)
        new_adj: list[dict[int, float]] = [{} for _ in range(new_size)]
        new_loops = [0.0] * new_size
        for i in range(size):
            ci = remap[comm[i]]
            new_loops[ci] += loops[i]
            for j, w in adj[i].items():
                cj = remap[comm[j]]
                if ci == cj:
                    if i < j:
                        new_loops[ci] += w
                else:
                    new_adj[ci][cj] = new_adj[ci].get(cj, 0.0) + w
        node_of = [remap[comm[s]] for s in node_of]
        adj, loops = new_adj, new_loops
        if new_size == size:
            break
    return node_of


# --- label propagation -----------------------------------------------------------


def _partition_quality(g: SemanticGraph, labels: list[int], use_weights: bool) -> float:
    """Modularity of an assignment given as a per-vertex label list."""
    internal: dict[int, float] = {}
    strength: dict[int, float] = {}
    m = 0.0
    for u, v, w in g.edges():
        weight = _edge_weight(w, use_weights)
        m += weight
        if labels[u] == labels[v]:
            internal[labels[u]] = internal.get(labels[u], 0.0) + weight
        strength[labels[u]] = strength.get(labels[u], 0.0) + weight
        strength[labels[v]] = strength.get(labels[v], 0.0) + weight
    if m == 0.0:
        return 0.0
    return sum(
        internal.get(c, 0.0) / m - (s / (2.0 * m)) ** 2 for c, s in strength.items()
    )


def _label_propagation_once(g: SemanticGraph, use_weights: bool, rng, max_sweeps: int) -> list[int]:
    n = g.n_vertices
    labels = list(range(n))
    for _ in range(max_sweeps):
        changed = False
        for i in rng.permutation(n):
            i = int(i)
            tally: dict[int, float] = {}
            for j, w in g.neighbors(i).items():
                tally[labels[j]] = tally.get(labels[j], 0.0) + _edge_weight(w, use_weights)
            if not tally:
                continue
            top = max(tally.values())
            candidates = sorted(lab for lab, w in tally.items() if w == top)
            if labels[i] in candidates:
                continue
            labels[i] = candidates[int(rng.integers(len(candidates)))]
            changed = True
        if not changed:
            break
    return labels


def _label_propagation(
    g: SemanticGraph,
    use_weights: bool,
    rng,
    max_sweeps: int = 1000,
    restarts: int = 7,
) -> list[int]:
    """Asynchronous label propagation, best of several seeded restarts.

    A single propagation run is cheap but noisy; keeping the restart with the
    highest modularity makes the outcome stable without changing the update
    rule itself.
    """
    best: Optional[list[int]] = None
    best_q = -math.inf
    for _ in range(restarts):
        labels = _label_propagation_once(g, use_weights, rng, max_sweeps)
        q = _partition_quality(g, labels, use_weights)
        if q > best_q + 1e-15:
            best_q = q
            best = labels
    assert best is not None
    return best


# --- walktrap ---------------------------------------------------------------------


def _walktrap(g: SemanticGraph, use_weights: bool, rng, steps: int = 4) -> list[int]:
    """Random-walk agglomeration: merge adjacent communities with the smallest
    walk-distance increase, keep the cut with the best modularity."""
    n = g.n_vertices
    if n > 4000:
        raise ValueError("walktrap implementation is dense; refusing > 4000 vertices")
    a = np.zeros((n, n))
    for u, v, w in g.edges():
        weight = _edge_weight(w, use_weights)
        a[u, v] = weight
        a[v, u] = weight
    deg = a.sum(axis=1)
    p = a / deg[:, None]
    pt = np.linalg.matrix_power(p, steps)
    inv_sqrt_deg = 1.0 / np.sqrt(deg)

    m = float(deg.sum()) / 2.0
    prob = pt.copy()               # community-averaged walk profiles
    sizes = [1] * n
    a_norm = [float(d) / (2.0 * m) for d in deg]
    links: list[dict[int, float]] = [{} for _ in range(n)]
    for u, v, w in g.edges():
        weight = _edge_weight(w, use_weights)
        links[u][v] = links[u].get(v, 0.0) + weight
        links[v][u] = links[v].get(u, 0.0) + weight

    members: list[list[int]] = [[v] for v in range(n)]
    alive = set(range(n))

    def merge_cost(c: int, d: int) -> float:
        diff = (prob[c] - prob[d]) * inv_sqrt_deg
        r2 = float(np.dot(diff, diff))
        return sizes[c] * sizes[d] / (sizes[c] + sizes[d]) * r2 / n

    q = -sum(x * x for x in a_norm)
    best_q = q
    best_assignment = list(range(n))

    while len(alive) > 1:
        best_pair: Optional[tuple[int, int]] = None
        best_cost = float("inf")
        for c in sorted(alive):
            for d in sorted(links[c]):
                if c < d:
                    cost = merge_cost(c, d)
                    if cost < best_cost - 1e-15:
                        best_cost = cost
                        best_pair = (c, d)
        if best_pair is None:
            break
        c, d = best_pair
        q += links[c][d] / m - 2.0 * a_norm[c] * a_norm[d]
        prob[c] = (sizes[c] * prob[c] + sizes[d] * prob[d]) / (sizes[c] + sizes[d])
        sizes[c] += sizes[d]
        a_norm[c] += a_norm[d]
        members[c].extend(members[d])
        members[d] = []
        for e, w in links[d].items():
            if e == c:
                continue
            links[e].pop(d, None)
            links[c][e] = links[c].get(e, 0.0) + w
            links[e][c] = links[c][e]
        links[c].pop(d, None)
        links[d] = {}
        alive.remove(d)
        if q > best_q + 1e-15:
            best_q = q
            best_assignment = [0] * n
            for root in range(n):
                for v in members[root]:
                    best_assignment[v] = root
    return best_assignment


_RUNNERS = {
    CommunityMethod.FAST_GREEDY: _fast_greedy,
    CommunityMethod.LOUVAIN: _louvain,
    CommunityMethod.LABEL_PROPAGATION: _label_propagation,
    CommunityMethod.WALKTRAP: _walktrap,
}


def _method_rng(seed: int, method: CommunityMethod):
    return np.random.default_rng([seed, METHOD_ORDER.index(method)])


def _run_method(
    g: SemanticGraph, method: CommunityMethod, seed: int, use_weights: bool
) -> Partition:
    """Run one method per component and assemble a dense global partition.

    Communities are renumbered by their smallest vertex index, so the ids in
    the result are reproducible.
    """
    rng = _method_rng(seed, method)
    runner = _RUNNERS[method]
    raw: dict[int, tuple[int, int]] = {}  # vertex -> (component id, local community)
    for comp_id, comp in enumerate(connected_components(g)):
        if len(comp) == 1:
            raw[comp[0]] = (comp_id, 0)
            continue
        sub = g.induced_subgraph(comp)
        local = runner(sub, use_weights, rng)
        for local_v, vertex in enumerate(comp):
            raw[vertex] = (comp_id, local[local_v])

    first_seen: dict[tuple[int, int], int] = {}
    assignment: dict[str, int] = {}
    for v in range(g.n_vertices):
        key = raw[v]
        if key not in first_seen:
            first_seen[key] = len(first_seen)
        assignment[g.label_of(v)] = first_seen[key]
    return Partition(assignment=assignment)


def detect_communities(
    g: SemanticGraph,
    methods: Optional[Iterable[CommunityMethod]] = None,
    seed: int = 0,
    use_weights: bool = True,
) -> DetectionResult:
    """Run the requested methods and pick the highest-modularity partition.

    Ties are broken by the fixed order fast greedy < Louvain < label
    propagation < walktrap.  The stored modularity is always recomputed from
    the final partition with :func:`modularity`.
    """
    if g.n_vertices == 0:
        raise ValueError("detect_communities needs a non-empty graph")
    selected = DEFAULT_METHODS if methods is None else frozenset(methods)
    if not selected:
        raise ValueError("at least one method is required")
    results = []
    for method in METHOD_ORDER:
        if method not in selected:
            continue
        partition = _run_method(g, method, seed, use_weights)
        results.append(
            CommunityResult(method, partition, modularity(g, partition, use_weights))
        )
    best = max(results, key=lambda r: (r.modularity, -METHOD_ORDER.index(r.method)))
    return DetectionResult(best=best, results=tuple(results))


def optimal_partition(
    g: SemanticGraph, use_weights: bool = True, max_vertices: int = 12
) -> tuple[Partition, float]:
    """Exhaustive max-modularity partition for very small graphs.

    Enumerates every set partition of the vertices (Bell-number growth), so
    it refuses graphs above ``max_vertices`` (hard cap 12).  Intended as a
    test oracle, not for analysis runs.
    """
    n = g.n_vertices
    if n == 0:
        raise ValueError("optimal_partition needs a non-empty graph")
    if n > min(max_vertices, 12):
        raise ValueError(f"optimal_partition is exhaustive; refusing n > {min(max_vertices, 12)}")
    m = sum(_edge_weight(w, use_weights) for _, _, w in g.edges())
    if m == 0.0:
        raise ValueError("modularity undefined on a graph with no edges")
    strength = [0.0] * n
    for u, v, w in g.edges():
        weight = _edge_weight(w, use_weights)
        strength[u] += weight
        strength[v] += weight

    best_q = -math.inf
    best: Optional[list[int]] = None
    assignment = [0] * n
    # incremental per-community totals: internal weight and strength sums
    internal = [0.0] * n
    s_tot = [0.0] * n

    def q_value(k: int) -> float:
        return sum(internal[c] / m - (s_tot[c] / (2.0 * m)) ** 2 for c in range(k))

    def place(v: int, k: int) -> None:
        nonlocal best_q, best
        if v == n:
            q = q_value(k)
            if q > best_q + 1e-15:
                best_q = q
                best = assignment.copy()
            return
        w_to = {}
        for u, w in g.neighbors(v).items():
            if u < v:
                c = assignment[u]
                w_to[c] = w_to.get(c, 0.0) + _edge_weight(w, use_weights)
        for c in range(k + 1):  # existing communities plus one new
            assignment[v] = c
            gained = w_to.get(c, 0.0)
            internal[c] += gained
            s_tot[c] += strength[v]
            place(v + 1, max(k, c + 1))
            internal[c] -= gained
            s_tot[c] -= strength[v]

    place(0, 0)
    assert best is not None
    ids: dict[int, int] = {}
    dense = [ids.setdefault(c, len(ids)) for c in best]
    partition = Partition(assignment={g.label_of(v): dense[v] for v in range(n)})
    return partition, best_q


def community_top_terms(
    g: SemanticGraph,
    result: CommunityResult,
    n: int = 10,
    centrality: Optional[dict[str, float]] = None,
) -> dict[int, list[tuple[str, float]]]:
    """Top-n vertices per community, ranked by eigenvector centrality.

    When no centrality map is given it is computed per connected component.
    Ties are broken lexicographically.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if centrality is None:
        centrality = {}
        for comp in connected_components(g):
            centrality.update(eigenvector_centrality(g.induced_subgraph(comp)))
    top: dict[int, list[tuple[str, float]]] = {}
    for community_id, labels in enumerate(result.partition.communities()):
        ranked = sorted(labels, key=lambda lab: (-centrality.get(lab, 0.0), lab))
        top[community_id] = [(lab, centrality.get(lab, 0.0)) for lab in ranked[:n]]
    return top
