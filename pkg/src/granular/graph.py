"""Graphs, hop distances and the small-scale automorphism oracle.

Vertices are indices ``0..n-1`` everywhere inside the library; labels are
only consulted when reading or writing text.
"""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence

from .errors import GranularError, resolve_cap

Partition = tuple[tuple[int, ...], ...]

AUTOMORPHISM_CAP = 8


@dataclass(frozen=True)
class Graph:
    labels: tuple[str, ...]
    adjacency: tuple[frozenset[int], ...]

    def __post_init__(self):
        if not self.labels:
            raise GranularError("empty_graph", "empty graph")
        if len(set(self.labels)) != len(self.labels):
            raise GranularError("duplicate_label", "vertex labels must be distinct")
        if len(self.adjacency) != len(self.labels):
            raise GranularError("invalid_graph", "adjacency size does not match label count")
        for i, nbrs in enumerate(self.adjacency):
            if i in nbrs:
                raise GranularError("self_loop", f"self-loop at {self.labels[i]!r}")
            for j in nbrs:
                if not 0 <= j < self.n or i not in self.adjacency[j]:
                    raise GranularError("invalid_graph", "adjacency must be symmetric")

    @classmethod
    def from_edges(cls, labels: Sequence[str], edges: Iterable[tuple[int, int]]) -> Graph:
        nbrs: list[set[int]] = [set() for _ in labels]
        for i, j in edges:
            if i == j:
                raise GranularError("self_loop", f"self-loop at {labels[i]!r}")
            nbrs[i].add(j)
            nbrs[j].add(i)
        return cls(tuple(labels), tuple(frozenset(s) for s in nbrs))

    @property
    def n(self) -> int:
        return len(self.labels)

    def index(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise GranularError("unknown_label", f"unknown vertex label {label!r}") from None

    def edges(self) -> list[tuple[int, int]]:
        return sorted((i, j) for i in range(self.n) for j in self.adjacency[i] if i < j)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def to_edge_list(self) -> str:
        """Serialize in the edge-list text format read by :func:`parse_edge_list`.

        Every vertex is declared first so that re-reading keeps the vertex order.
        """
        lines = list(self.labels)
        lines += [f"{self.labels[i]} {self.labels[j]}" for i, j in self.edges()]
        return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class DistanceMatrix:
    """Hop-count matrix; validated on construction.

    Doubles as the information table: row ``v`` is the object, column ``a``
    the attribute, and the cell is the distance between them.
    """

    labels: tuple[str, ...]
    rows: tuple[tuple[int, ...], ...]
    _diameter: int = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        n = len(self.labels)
        if n == 0 or len(self.rows) != n or any(len(r) != n for r in self.rows):
            raise GranularError("invalid_distance_matrix", "invalid distance matrix: not square")
        for i in range(n):
            if self.rows[i][i] != 0:
                raise GranularError(
                    "invalid_distance_matrix",
                    f"invalid distance matrix: non-zero diagonal at {self.labels[i]!r}",
                )
            for j in range(i + 1, n):
                if self.rows[i][j] != self.rows[j][i]:
                    raise GranularError(
                        "invalid_distance_matrix",
                        f"invalid distance matrix: asymmetric at ({self.labels[i]!r}, {self.labels[j]!r})",
                    )
                if self.rows[i][j] < 1:
                    raise GranularError(
                        "invalid_distance_matrix",
                        f"invalid distance matrix: non-positive entry at ({self.labels[i]!r}, {self.labels[j]!r})",
                    )
        object.__setattr__(self, "_diameter", max(max(r) for r in self.rows))

    @property
    def n(self) -> int:
        return len(self.labels)

    @property
    def diameter(self) -> int:
        return self._diameter

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.rows[i][j]

    def triangle_violations(self) -> list[tuple[int, int, int]]:
        """Triples (i, j, k) with d(i,k) > d(i,j) + d(j,k)."""
        d = self.rows
        n = self.n
        return [
            (i, j, k)
            for i in range(n)
            for j in range(n)
            for k in range(n)
            if d[i][k] > d[i][j] + d[j][k]
        ]


def parse_edge_list(text: str) -> Graph:
    """Read the edge-list format: ``A B`` per line, ``#`` comments, lone token = isolated vertex."""
    labels: list[str] = []
    where: dict[str, int] = {}
    edges: set[tuple[int, int]] = set()

    def vertex(tok: str) -> int:
        if tok not in where:
            where[tok] = len(labels)
            labels.append(tok)
        return where[tok]

    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        toks = line.split()
        if len(toks) == 1:
            vertex(toks[0])
        elif len(toks) == 2:
            a, b = toks
            if a == b:
                raise GranularError("self_loop", f"self-loop on line {lineno}: {a!r}")
            i, j = vertex(a), vertex(b)
            edges.add((min(i, j), max(i, j)))
        else:
            raise GranularError("parse_error", f"line {lineno}: expected one or two labels, got {len(toks)}")
    if not labels:
        raise GranularError("empty_graph", "empty graph")
    return Graph.from_edges(labels, sorted(edges))


def make_family(family: str, params: Sequence[int]) -> Graph:
    """Standard constructions: ``path``, ``cycle``, ``complete``, ``complete_bipartite``."""
    if family in ("path", "cycle", "complete"):
        if len(params) != 1 or params[0] < 1:
            raise GranularError("bad_family", f"{family} takes one positive parameter")
        n = params[0]
        labels = [f"v{i + 1}" for i in range(n)]
        if family == "path":
            edges = [(i, i + 1) for i in range(n - 1)]
        elif family == "cycle":
            if n < 3:
                raise GranularError("degenerate_cycle", f"degenerate cycle: n={n} < 3")
            edges = [(i, (i + 1) % n) for i in range(n)]
        else:
            edges = list(combinations(range(n), 2))
        return Graph.from_edges(labels, edges)
    if family == "complete_bipartite":
        if len(params) != 2 or min(params) < 1:
            raise GranularError("bad_family", "complete_bipartite takes two positive parameters")
        m, n = params
        labels = [f"a{i + 1}" for i in range(m)] + [f"b{j + 1}" for j in range(n)]
        return Graph.from_edges(labels, [(i, m + j) for i in range(m) for j in range(n)])
    raise GranularError("bad_family", f"unknown family {family!r}")


def bfs_distances(g: Graph, source: int) -> list[int | None]:
    dist: list[int | None] = [None] * g.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for w in g.adjacency[u]:
            if dist[w] is None:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def all_pairs_distances(g: Graph) -> DistanceMatrix:
    rows = []
    for s in range(g.n):
        dist = bfs_distances(g, s)
        if any(x is None for x in dist):
            raise GranularError("disconnected", "disconnected graph: distances undefined")
        rows.append(tuple(dist))
    return DistanceMatrix(g.labels, tuple(rows))


def graph_from_matrix(dm: DistanceMatrix) -> Graph:
    """Recover the graph whose edges are the distance-1 entries."""
    return Graph.from_edges(
        dm.labels, [(i, j) for i in range(dm.n) for j in range(i + 1, dm.n) if dm.rows[i][j] == 1]
    )


def max_degree(g: Graph) -> int:
    return max(g.degree(v) for v in range(g.n))


def diameter(dm: DistanceMatrix) -> int:
    return dm.diameter


def enumerate_automorphisms(g: Graph, cap: int | None = None) -> list[tuple[int, ...]]:
    """Every adjacency-preserving permutation, lexicographically sorted.

    Exhaustive search over the permutation tree; a partial assignment is
    abandoned as soon as it breaks adjacency with an already-placed vertex.
    """
    cap = resolve_cap(cap, AUTOMORPHISM_CAP)
    n = g.n
    if n > cap:
        raise GranularError("automorphism_cap", f"automorphism cap exceeded: n={n} > {cap}")
    adj = g.adjacency
    image = [-1] * n
    used = [False] * n
    found: list[tuple[int, ...]] = []

    def extend(v: int) -> None:
        if v == n:
            found.append(tuple(image))
            return
        for w in range(n):
            if used[w] or len(adj[w]) != len(adj[v]):
                continue
            if all((u in adj[v]) == (image[u] in adj[w]) for u in range(v)):
                image[v] = w
                used[w] = True
                extend(v + 1)
                used[w] = False
        image[v] = -1

    extend(0)
    return found


def canonical_partition(blocks: Iterable[Iterable[int]]) -> Partition:
    return tuple(sorted((tuple(sorted(b)) for b in blocks), key=lambda b: b[0]))


def distance_similar_classes(dm: DistanceMatrix) -> Partition:
    """Group vertices that agree on every third vertex: d(i,w) = d(j,w) for all w not in {i, j}."""
    n = dm.n
    d = dm.rows
    owner = list(range(n))
    for i in range(n):
        if owner[i] != i:
            continue
        for j in range(i + 1, n):
            if owner[j] == j and all(d[i][w] == d[j][w] for w in range(n) if w != i and w != j):
                owner[j] = i
    blocks: dict[int, list[int]] = {}
    for v in range(n):
        blocks.setdefault(owner[v], []).append(v)
    return canonical_partition(blocks.values())


def random_connected_graph(n: int, rng: random.Random, density: float | None = None) -> Graph:
    """Random spanning tree plus independently sampled extra edges."""
    if density is None:
        density = rng.uniform(0.0, 0.6)
    order = list(range(n))
    rng.shuffle(order)
    edges = set()
    for k in range(1, n):
        a, b = order[k], order[rng.randrange(k)]
        edges.add((min(a, b), max(a, b)))
    for i, j in combinations(range(n), 2):
        if (i, j) not in edges and rng.random() < density:
            edges.add((i, j))
    return Graph.from_edges([f"v{i + 1}" for i in range(n)], sorted(edges))
