"""Simple graphs with provenance labels and the algebra used by the constructions.

Vertices are dense integer indices 0..n-1.  Every vertex additionally carries a
unique structured label; the construction pipeline addresses vertices by label
(labels survive products, splittings and identifications), while serialization
and the oracles work on indices.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Hashable, Iterable, Sequence

from .errors import NotAClique, SizeMismatch


@dataclass(frozen=True)
class Split:
    """Label for a vertex created by splitting `owner` at a face; `position`
    is the 1-based index along the replacement path.  Deliberately not a
    tuple so it can never collide with ordinary tuple labels."""

    owner: Hashable
    position: int


def label_sort_key(label):
    """Total order over the heterogeneous label universe (ints, strings,
    nested tuples, Split records)."""
    if isinstance(label, Split):
        return (3, label_sort_key(label.owner), label.position)
    if isinstance(label, tuple):
        return (2, tuple(label_sort_key(x) for x in label))
    if isinstance(label, str):
        return (1, label)
    return (0, label)


@dataclass(frozen=True)
class SimpleGraph:
    """Undirected simple graph.  Immutable after construction."""

    n: int
    adj: tuple[frozenset[int], ...]
    labels: tuple[Hashable, ...]

    def __post_init__(self):
        if len(self.adj) != self.n or len(self.labels) != self.n:
            raise ValueError("adjacency/label length mismatch")
        if len(set(self.labels)) != self.n:
            raise ValueError("labels not unique")
        for u, nbrs in enumerate(self.adj):
            if u in nbrs:
                raise ValueError(f"loop at vertex {u}")
            for v in nbrs:
                if not 0 <= v < self.n or u not in self.adj[v]:
                    raise ValueError(f"adjacency not symmetric at {u}-{v}")

    @cached_property
    def label_index(self) -> dict:
        return {lab: i for i, lab in enumerate(self.labels)}

    def index_of(self, label) -> int:
        return self.label_index[label]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in sorted(self.adj[u]) if u < v]

    @property
    def m(self) -> int:
        return sum(len(a) for a in self.adj) // 2

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def relabel(self, labels: Sequence[Hashable]) -> "SimpleGraph":
        return SimpleGraph(self.n, self.adj, tuple(labels))


def from_edges(n: int, edges: Iterable[tuple[int, int]], labels=None) -> SimpleGraph:
    adj = [set() for _ in range(n)]
    for u, v in edges:
        if u == v:
            raise ValueError(f"loop at {u}")
        adj[u].add(v)
        adj[v].add(u)
    if labels is None:
        labels = tuple(range(n))
    return SimpleGraph(n, tuple(frozenset(a) for a in adj), tuple(labels))


def complete_graph(m: int) -> SimpleGraph:
    return from_edges(m, combinations(range(m), 2))


def cycle_graph(m: int) -> SimpleGraph:
    if m < 3:
        raise ValueError("cycle needs at least 3 vertices")
    return from_edges(m, [(i, (i + 1) % m) for i in range(m)])


def grid_graph(n: int) -> SimpleGraph:
    """The n-by-n grid; vertex (x, y) with x, y in [1, n], edges between
    vertices at L1 distance 1.  Labels carry the (x, y) coordinates."""
    if n < 1:
        raise ValueError("side length must be positive")

    def idx(x, y):
        return (x - 1) * n + (y - 1)

    edges = []
    for x in range(1, n + 1):
        for y in range(1, n + 1):
            if x < n:
                edges.append((idx(x, y), idx(x + 1, y)))
            if y < n:
                edges.append((idx(x, y), idx(x, y + 1)))
    labels = tuple((x, y) for x in range(1, n + 1) for y in range(1, n + 1))
    return from_edges(n * n, edges, labels)


def lex_product(g: SimpleGraph, k: int) -> SimpleGraph:
    """Blow every vertex up to a k-clique; adjacency inherited completely.
    Vertex (v, i) gets label (label(v), i) with i in [1, k]."""
    if k < 1:
        raise ValueError("k must be >= 1")

    def idx(v, i):
        return v * k + (i - 1)

    edges = []
    for v in range(g.n):
        edges.extend((idx(v, i), idx(v, j)) for i, j in combinations(range(1, k + 1), 2))
    for u, v in g.edges():
        edges.extend(
            (idx(u, i), idx(v, j)) for i in range(1, k + 1) for j in range(1, k + 1)
        )
    labels = tuple((g.labels[v], i) for v in range(g.n) for i in range(1, k + 1))
    return from_edges(g.n * k, edges, labels)


def add_apex(g: SimpleGraph, a: int) -> SimpleGraph:
    """Add `a` dominant vertices, adjacent to everything (including each other).
    Apex j is labeled ("apex", j), j in [1, a]."""
    if a < 0:
        raise ValueError("a must be >= 0")
    if a == 0:
        return g
    n = g.n + a
    edges = list(g.edges())
    for j in range(a):
        w = g.n + j
        edges.extend((u, w) for u in range(w))
    labels = g.labels + tuple(("apex", j) for j in range(1, a + 1))
    return from_edges(n, edges, labels)


def min_degree(g: SimpleGraph) -> int:
    if g.n == 0:
        return 0
    return min(g.degree(v) for v in range(g.n))


def is_clique(g: SimpleGraph, vertices: Iterable[int]) -> bool:
    vs = list(vertices)
    return all(g.has_edge(u, v) for u, v in combinations(vs, 2))


def clique_sum_with_embeddings(
    g1: SimpleGraph,
    c1: Sequence[int],
    g2: SimpleGraph,
    c2: Sequence[int],
    drop: Iterable[tuple[int, int]] = (),
):
    """Clique-sum identifying c1[i] with c2[i], then deleting the `drop` edges
    (given as index pairs into c1/c2 positions).

    Returns (sum graph, map1, map2) where map_i sends a vertex of g_i to its
    vertex in the sum.  Identified vertices keep g1's labels.
    """
    c1 = list(c1)
    c2 = list(c2)
    if len(c1) != len(c2):
        raise SizeMismatch(f"|C1|={len(c1)} != |C2|={len(c2)}")
    if len(set(c1)) != len(c1) or len(set(c2)) != len(c2):
        raise ValueError("clique vertex lists contain repeats")
    if not is_clique(g1, c1):
        raise NotAClique("C1 is not a clique in G1")
    if not is_clique(g2, c2):
        raise NotAClique("C2 is not a clique in G2")

    map1 = list(range(g1.n))
    map2 = [None] * g2.n
    for pos, w in enumerate(c2):
        map2[w] = c1[pos]
    next_id = g1.n
    labels = list(g1.labels)
    c2_set = set(c2)
    for w in range(g2.n):
        if w in c2_set:
            continue
        map2[w] = next_id
        labels.append(g2.labels[w])
        next_id += 1
    if len(set(labels)) != len(labels):
        raise ValueError("label collision between summands")

    edges = set()
    for u, v in g1.edges():
        edges.add((min(u, v), max(u, v)))
    for u, v in g2.edges():
        a, b = map2[u], map2[v]
        edges.add((min(a, b), max(a, b)))
    for i, j in drop:
        a, b = c1[i], c1[j]
        edges.discard((min(a, b), max(a, b)))
    g = from_edges(next_id, sorted(edges), labels)
    return g, tuple(map1), tuple(map2)


def clique_sum(g1, c1, g2, c2, drop=()) -> SimpleGraph:
    return clique_sum_with_embeddings(g1, c1, g2, c2, drop)[0]


def disjoint_union(g1: SimpleGraph, g2: SimpleGraph) -> SimpleGraph:
    """Degenerate clique-sum over the empty clique."""
    return clique_sum(g1, [], g2, [])


def induced_subgraph(g: SimpleGraph, vertices: Iterable[int]) -> SimpleGraph:
    vs = sorted(set(vertices))
    pos = {v: i for i, v in enumerate(vs)}
    edges = [(pos[u], pos[v]) for u, v in g.edges() if u in pos and v in pos]
    return from_edges(len(vs), edges, tuple(g.labels[v] for v in vs))


def is_connected_subset(g: SimpleGraph, vertices: Iterable[int]) -> bool:
    vs = set(vertices)
    if not vs:
        return False
    start = next(iter(vs))
    seen = {start}
    stack = [start]
    while stack:
        u = stack.pop()
        for w in g.adj[u]:
            if w in vs and w not in seen:
                seen.add(w)
                stack.append(w)
    return seen == vs


def is_connected(g: SimpleGraph) -> bool:
    if g.n == 0:
        return True
    return is_connected_subset(g, range(g.n))


def union_by_labels(parts: Sequence[SimpleGraph]) -> SimpleGraph:
    """Union of several graphs glued on equal labels; multi-edges collapse.
    Vertex order: first occurrence across `parts` in order."""
    labels: list = []
    index: dict = {}
    for part in parts:
        for lab in part.labels:
            if lab not in index:
                index[lab] = len(labels)
                labels.append(lab)
    edges = set()
    for part in parts:
        for u, v in part.edges():
            a = index[part.labels[u]]
            b = index[part.labels[v]]
            edges.add((min(a, b), max(a, b)))
    return from_edges(len(labels), sorted(edges), tuple(labels))
