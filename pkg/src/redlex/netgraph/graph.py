"""Weighted undirected word graph built from co-occurrence pair counts."""

from __future__ import annotations

from typing import Iterable, Iterator, Sequence

from ..ngram import PairCounts


class SemanticGraph:
    """Undirected graph with string-labelled vertices and positive weights.

    Vertices are indexed 0..n-1 in construction order; no self-loops, no
    duplicate edges.  The structure is treated as immutable once built.
    """

    __slots__ = ("_labels", "_index", "_adj", "_n_edges")

    def __init__(self, labels: Sequence[str], edges: Iterable[tuple[int, int, float]] = ()):
        self._labels: tuple[str, ...] = tuple(labels)
        self._index: dict[str, int] = {lab: i for i, lab in enumerate(self._labels)}
        if len(self._index) != len(self._labels):
            raise ValueError("duplicate vertex labels")
        self._adj: tuple[dict[int, float], ...] = tuple({} for _ in self._labels)
        self._n_edges = 0
        for u, v, w in edges:
            self._add_edge(u, v, w)

    def _add_edge(self, u: int, v: int, w: float) -> None:
        if u == v:
            raise ValueError(f"self-loop at vertex {u}")
        if w <= 0:
            raise ValueError("edge weights must be positive")
        if v in self._adj[u]:
            raise ValueError(f"duplicate edge ({u}, {v})")
        self._adj[u][v] = w
        self._adj[v][u] = w
        self._n_edges += 1

    # -- basic accessors --

    @property
    def n_vertices(self) -> int:
        return len(self._labels)

    @property
    def n_edges(self) -> int:
        return self._n_edges

    @property
    def labels(self) -> tuple[str, ...]:
        return self._labels

    def label_of(self, v: int) -> str:
        return self._labels[v]

    def index_of(self, label: str) -> int:
        return self._index[label]

    def __contains__(self, label: str) -> bool:
        return label in self._index

    def neighbors(self, v: int) -> dict[int, float]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def strength(self, v: int) -> float:
        return sum(self._adj[v].values())

    def degrees(self) -> list[int]:
        return [len(nbrs) for nbrs in self._adj]

    def total_weight(self) -> float:
        return sum(self.strength(v) for v in range(self.n_vertices)) / 2.0

    def edges(self) -> Iterator[tuple[int, int, float]]:
        for u in range(self.n_vertices):
            for v, w in self._adj[u].items():
                if u < v:
                    yield u, v, w

    def edge_labels(self) -> Iterator[tuple[str, str, float]]:
        for u, v, w in self.edges():
            yield self._labels[u], self._labels[v], w

    def induced_subgraph(self, vertices: Iterable[int]) -> "SemanticGraph":
        """Subgraph on the given vertices, keeping their relative order."""
        kept = sorted(set(vertices))
        remap = {old: new for new, old in enumerate(kept)}
        labels = [self._labels[v] for v in kept]
        edges = [
            (remap[u], remap[v], w)
            for u, v, w in self.edges()
            if u in remap and v in remap
        ]
        return SemanticGraph(labels, edges)

    @classmethod
    def from_edge_labels(cls, edges: Iterable[tuple[str, str, float]]) -> "SemanticGraph":
        """Build from (label, label, weight) triples, vertices in first-seen order."""
        edges = list(edges)
        labels: list[str] = []
        seen: set[str] = set()
        for a, b, _ in edges:
            for lab in (a, b):
                if lab not in seen:
                    seen.add(lab)
                    labels.append(lab)
        g = cls(labels)
        for a, b, w in edges:
            g._add_edge(g._index[a], g._index[b], w)
        return g


def build_graph(pc: PairCounts) -> SemanticGraph:
    """One vertex per distinct lemma, one edge per pair with weight = count.

    Vertices are ordered lexicographically for reproducibility.  Self-pairs
    (possible only when extraction allowed them) are not representable as
    edges and are skipped.
    """
    words: set[str] = set()
    for a, b in pc.counts:
        if a != b:
            words.add(a)
            words.add(b)
    g = SemanticGraph(sorted(words))
    for (a, b), c in pc.counts.items():
        if a != b:
            g._add_edge(g._index[a], g._index[b], c)
    return g


def connected_components(g: SemanticGraph) -> list[list[int]]:
    """Vertex index lists per component, each sorted, largest first.

    Ties on size are broken by the smallest contained vertex index.
    """
    seen = [False] * g.n_vertices
    components: list[list[int]] = []
    for start in range(g.n_vertices):
        if seen[start]:
            continue
        stack = [start]
        seen[start] = True
        comp = []
        while stack:
            u = stack.pop()
            comp.append(u)
            for v in g.neighbors(u):
                if not seen[v]:
                    seen[v] = True
                    stack.append(v)
        components.append(sorted(comp))
    components.sort(key=lambda comp: (-len(comp), comp[0]))
    return components


def giant_component(g: SemanticGraph) -> SemanticGraph:
    """Induced subgraph on the largest connected vertex set."""
    if g.n_vertices == 0:
        return g
    return g.induced_subgraph(connected_components(g)[0])
