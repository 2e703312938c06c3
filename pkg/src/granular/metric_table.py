"""Distance information table and its indiscernibility partitions.

An attribute set ``A`` is a sorted tuple of vertex indices. Two objects are
``A``-indiscernible when their distance vectors to ``A`` coincide; the
resulting partition is written in canonical form (members ascending, blocks
ordered by their smallest member).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from .errors import GranularError, resolve_cap
from .graph import DistanceMatrix, Graph, Partition, all_pairs_distances, canonical_partition

VertexSubset = tuple[int, ...]

PARTITIONER_CAP = 16


@dataclass(frozen=True)
class InformationTable:
    """Objects and attributes are both the vertex set; the value map is the hop distance."""

    dm: DistanceMatrix

    @classmethod
    def from_graph(cls, g: Graph) -> InformationTable:
        return cls(all_pairs_distances(g))

    @property
    def n(self) -> int:
        return self.dm.n

    @property
    def labels(self) -> tuple[str, ...]:
        return self.dm.labels

    @property
    def values(self) -> range:
        return range(self.dm.diameter + 1)

    def value(self, obj: int, attr: int) -> int:
        return self.dm.rows[obj][attr]

    def subset(self, members: Iterable[int]) -> VertexSubset:
        """Canonicalize and bounds-check a vertex subset."""
        s = tuple(sorted(set(members)))
        if s and not (0 <= s[0] and s[-1] < self.n):
            raise GranularError("bad_subset", f"vertex index out of range for n={self.n}")
        return s

    def subset_of_labels(self, labels: Iterable[str]) -> VertexSubset:
        where = {lab: i for i, lab in enumerate(self.labels)}
        try:
            return self.subset(where[lab] for lab in labels)
        except KeyError as exc:
            raise GranularError("unknown_label", f"unknown vertex label {exc.args[0]!r}") from None

    def names(self, members: Iterable[int]) -> list[str]:
        return [self.labels[v] for v in members]


def representation(t: InformationTable, v: int, attrs: Sequence[int]) -> tuple[int, ...]:
    if not attrs:
        raise GranularError("empty_attribute_set", "empty attribute set: representation undefined")
    row = t.dm.rows[v]
    return tuple(row[a] for a in sorted(attrs))


def partition(t: InformationTable, attrs: Iterable[int]) -> Partition:
    attrs = sorted(set(attrs))
    rows = t.dm.rows
    groups: dict[tuple[int, ...], list[int]] = {}
    for v in range(t.n):
        groups.setdefault(tuple(rows[v][a] for a in attrs), []).append(v)
    # vertices are visited in order, so each block is sorted and first-seen order is min order
    return tuple(tuple(b) for b in groups.values())


def granule(t: InformationTable, v: int, attrs: Iterable[int]) -> VertexSubset:
    for block in partition(t, attrs):
        if v in block:
            return block
    raise GranularError("bad_subset", f"vertex index {v} out of range")


def is_discrete(p: Partition) -> bool:
    return all(len(b) == 1 for b in p)


def _ground(p: Partition) -> frozenset[int]:
    return frozenset(v for b in p for v in b)


def _check_same_ground(p: Partition, q: Partition) -> None:
    if _ground(p) != _ground(q):
        raise GranularError("ground_set_mismatch", "partitions are over different ground sets")


def refines(p: Partition, q: Partition) -> bool:
    """True when ``p`` is finer than or equal to ``q`` (every block of p sits inside a block of q)."""
    _check_same_ground(p, q)
    home = {v: i for i, b in enumerate(q) for v in b}
    return all(len({home[v] for v in b}) == 1 for b in p)


def meet(p: Partition, q: Partition) -> Partition:
    _check_same_ground(p, q)
    blocks = []
    for a in p:
        sa = set(a)
        for b in q:
            common = sa.intersection(b)
            if common:
                blocks.append(common)
    return canonical_partition(blocks)


def join(p: Partition, q: Partition) -> Partition:
    _check_same_ground(p, q)
    parent = {v: v for v in _ground(p)}

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for block in (*p, *q):
        root = find(block[0])
        for v in block[1:]:
            r = find(v)
            if r != root:
                parent[r] = root
    classes: dict[int, list[int]] = {}
    for v in parent:
        classes.setdefault(find(v), []).append(v)
    return canonical_partition(classes.values())


def equivalent(t: InformationTable, a: Iterable[int], b: Iterable[int]) -> bool:
    return partition(t, a) == partition(t, b)


@dataclass(frozen=True)
class PartitionerReport:
    """Maximum/minimum partitioners of an attribute set.

    ``maximum`` is the union of every subset inducing the same partition;
    ``union_equivalent`` records whether that union itself induces it.
    """

    attrs: VertexSubset
    maximum: VertexSubset
    union_equivalent: bool
    minimum: tuple[VertexSubset, ...]
    class_size: int


def _subsets(n: int):
    for k in range(n + 1):
        yield from combinations(range(n), k)


def partitioners(t: InformationTable, attrs: Iterable[int], cap: int | None = None) -> PartitionerReport:
    cap = resolve_cap(cap, PARTITIONER_CAP)
    if t.n > cap:
        raise GranularError("enumeration_cap", f"enumeration cap exceeded: n={t.n} > {cap}")
    attrs = t.subset(attrs)
    target = partition(t, attrs)
    members = [s for s in _subsets(t.n) if partition(t, s) == target]
    union = t.subset(v for s in members for v in s)
    # members come in increasing size, so a set is minimal iff no earlier member is inside it
    minimal: list[VertexSubset] = []
    for s in members:
        ss = set(s)
        if not any(ss.issuperset(m) for m in minimal):
            minimal.append(s)
    return PartitionerReport(
        attrs=attrs,
        maximum=union,
        union_equivalent=partition(t, union) == target,
        minimum=tuple(sorted(minimal, key=lambda s: (len(s), s))),
        class_size=len(members),
    )


def max_partitioner(t: InformationTable, attrs: Iterable[int], cap: int | None = None) -> VertexSubset:
    return partitioners(t, attrs, cap).maximum


def min_partitioners(t: InformationTable, attrs: Iterable[int], cap: int | None = None) -> tuple[VertexSubset, ...]:
    return partitioners(t, attrs, cap).minimum
