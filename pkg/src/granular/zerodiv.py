"""Zero-divisor graphs of Z_n and of the Boolean ring Z_2^k."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import gcd
from typing import Iterable

from .errors import GranularError
from .graph import Graph, Partition, canonical_partition
from .metric_table import InformationTable, VertexSubset, is_discrete, partition


def totient(n: int) -> int:
    return sum(1 for k in range(1, n + 1) if gcd(k, n) == 1)


@dataclass(frozen=True)
class ZnGraphMeta:
    n: int
    elements: tuple[int, ...]
    # divisor d -> vertex indices v with gcd(element, n) = d
    divisor_classes: dict[int, VertexSubset]
    trivial: bool

    @property
    def class_sizes(self) -> dict[int, int]:
        return {d: len(vs) for d, vs in self.divisor_classes.items()}

    def class_partition(self) -> Partition:
        return canonical_partition(self.divisor_classes.values())

    def index(self, element: int) -> int:
        try:
            return self.elements.index(element)
        except ValueError:
            raise GranularError("not_zero_divisor", f"{element} is not a vertex of Gamma(Z_{self.n})") from None


def gamma_zn(n: int) -> tuple[Graph, ZnGraphMeta]:
    """Vertices are the non-zero zero-divisors of Z_n; u ~ v iff u*v = 0 mod n."""
    if n < 4 or totient(n) == n - 1:
        raise GranularError("no_zero_divisor_graph", f"no zero-divisor graph: n={n} is not a composite >= 4")
    elements = tuple(v for v in range(2, n - 1) if gcd(v, n) > 1)
    edges = [
        (i, j)
        for i, j in combinations(range(len(elements)), 2)
        if elements[i] * elements[j] % n == 0
    ]
    g = Graph.from_edges([str(v) for v in elements], edges)
    classes: dict[int, list[int]] = {}
    for i, v in enumerate(elements):
        classes.setdefault(gcd(v, n), []).append(i)
    meta = ZnGraphMeta(
        n=n,
        elements=elements,
        divisor_classes={d: tuple(vs) for d, vs in sorted(classes.items())},
        trivial=len(elements) == 1,
    )
    return g, meta


@dataclass(frozen=True)
class BooleanRingMeta:
    k: int
    words: tuple[int, ...]
    # layers[i - 1] holds the indices of weight-i vertices, i = 1..k-1
    layers: tuple[VertexSubset, ...]

    @property
    def weights(self) -> dict[int, int]:
        return {i: w.bit_count() for i, w in enumerate(self.words)}

    def layer(self, i: int) -> VertexSubset:
        return self.layers[i - 1]

    def bitstring(self, index: int) -> str:
        return format(self.words[index], f"0{self.k}b")

    def index(self, word: str | int) -> int:
        value = int(word, 2) if isinstance(word, str) else word
        try:
            return self.words.index(value)
        except ValueError:
            raise GranularError("bad_vector", f"{word!r} is not a vertex of Gamma(Z_2^{self.k})") from None

    def complement(self, index: int) -> int:
        return self.index(self.words[index] ^ ((1 << self.k) - 1))


def gamma_boolean(k: int) -> tuple[Graph, BooleanRingMeta]:
    """Vertices: k-bit vectors other than 0...0 and 1...1; u ~ v iff u AND v = 0.

    Vertices are ordered by weight, then by bitstring descending, so for k = 3
    the order is 100, 010, 001, 110, 101, 011.
    """
    if k < 2:
        raise GranularError("bad_family", f"Boolean ring needs k >= 2, got {k}")
    full = (1 << k) - 1
    words = tuple(sorted(range(1, full), key=lambda w: (w.bit_count(), -w)))
    edges = [(i, j) for i, j in combinations(range(len(words)), 2) if words[i] & words[j] == 0]
    g = Graph.from_edges([format(w, f"0{k}b") for w in words], edges)
    layers = tuple(
        tuple(i for i, w in enumerate(words) if w.bit_count() == t) for t in range(1, k)
    )
    return g, BooleanRingMeta(k, words, layers)


def layer_partition_check(t: InformationTable, meta: BooleanRingMeta) -> dict[int, bool]:
    """For each layer T_i, whether its distances alone separate every vertex."""
    return {i: is_discrete(partition(t, layer)) for i, layer in enumerate(meta.layers, 1)}


@dataclass(frozen=True)
class HPartition:
    partition: Partition
    singletons: VertexSubset
    # distance -> vertices outside A at that distance from every member of A
    h_sets: dict[int, VertexSubset]
    decomposes: bool


def h_partition_zn(t: InformationTable, meta: ZnGraphMeta, attrs: Iterable[int]) -> HPartition:
    """Partition induced by a subset of one divisor class, split into A's singletons and H_1, H_2, H_3."""
    attrs = t.subset(attrs)
    if not attrs:
        raise GranularError("empty_attribute_set", "empty attribute set")
    home = {v: d for d, vs in meta.divisor_classes.items() for v in vs}
    if len({home[a] for a in attrs}) != 1:
        raise GranularError("not_class_contained", "not class-contained: attributes span several divisor classes")
    rows = t.dm.rows
    h_sets: dict[int, list[int]] = {1: [], 2: [], 3: []}
    uniform = True
    for v in range(t.n):
        if v in attrs:
            continue
        dists = {rows[v][a] for a in attrs}
        if len(dists) == 1 and dists.pop() in h_sets:
            h_sets[rows[v][attrs[0]]].append(v)
        else:
            uniform = False
    p = partition(t, attrs)
    expected = canonical_partition([[a] for a in attrs] + [vs for vs in h_sets.values() if vs])
    return HPartition(
        partition=p,
        singletons=attrs,
        h_sets={d: tuple(vs) for d, vs in h_sets.items()},
        decomposes=uniform and p == expected,
    )
