"""Resolving sets and exhaustive reduct enumeration.

A reduct of the distance table is exactly a minimal resolving set. The
enumerator walks subsets by increasing size and prunes with a twin-class
quota to skip candidates: a reduct keeps at least ``|B| - 1`` members of
every distance-similar class ``B``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from .errors import GranularError, resolve_cap
from .graph import DistanceMatrix, Graph, Partition, distance_similar_classes, max_degree
from .metric_table import InformationTable, VertexSubset

REDUCT_CAP = 20


def is_resolving(t: InformationTable, attrs: Iterable[int]) -> bool:
    attrs = sorted(set(attrs))
    rows = t.dm.rows
    seen = {tuple(rows[v][a] for a in attrs) for v in range(t.n)}
    return len(seen) == t.n


@dataclass(frozen=True)
class ReductReport:
    n: int
    reducts: tuple[VertexSubset, ...]

    @property
    def metric_dimension(self) -> int:
        return min(len(r) for r in self.reducts)

    @property
    def upper_dimension(self) -> int:
        return max(len(r) for r in self.reducts)

    @property
    def core(self) -> VertexSubset:
        common = set(self.reducts[0])
        for r in self.reducts[1:]:
            common.intersection_update(r)
        return tuple(sorted(common))

    @property
    def void(self) -> VertexSubset:
        used = {v for r in self.reducts for v in r}
        return tuple(v for v in range(self.n) if v not in used)


def sort_subsets(subsets: Iterable[VertexSubset]) -> tuple[VertexSubset, ...]:
    return tuple(sorted(set(subsets), key=lambda s: (len(s), s)))


def enumerate_reducts(
    t: InformationTable,
    twin_classes: Partition | None = None,
    cap: int | None = None,
) -> ReductReport:
    """All minimal resolving sets, ordered by size then lexicographically.

    ``twin_classes`` enables pruning; pass ``None`` to compute them from the
    table or ``()`` to disable pruning.
    """
    cap = resolve_cap(cap, REDUCT_CAP)
    n = t.n
    if n > cap:
        raise GranularError("enumeration_cap", f"enumeration cap exceeded: n={n} > {cap}")
    if twin_classes is None:
        twin_classes = distance_similar_classes(t.dm)
    quotas = [(sum(1 << v for v in b), len(b) - 1) for b in twin_classes if len(b) > 1]
    rows = t.dm.rows
    found: list[int] = []
    reducts: list[VertexSubset] = []
    for k in range(n + 1):
        for cand in combinations(range(n), k):
            mask = 0
            for v in cand:
                mask |= 1 << v
            if any((mask & cls).bit_count() < need for cls, need in quotas):
                continue
            if any(mask & r == r for r in found):
                continue
            if len({tuple(rows[v][a] for a in cand) for v in range(n)}) == n:
                found.append(mask)
                reducts.append(cand)
    return ReductReport(n, tuple(reducts))


@dataclass(frozen=True)
class BoundCheck:
    reduct: VertexSubset
    name: str
    low: int | None
    high: int | None
    # None when the bound does not apply to this graph
    passed: bool | None


def check_bounds(g: Graph, dm: DistanceMatrix, report: ReductReport) -> list[BoundCheck]:
    """Evaluate the cardinality bounds for every reduct; failures are reported, not raised."""
    n = g.n
    log_low = _ceil_log3(max_degree(g) + 1)
    high = n - dm.diameter
    classes = distance_similar_classes(dm)
    k = len(classes)
    twins_present = any(len(b) > 1 for b in classes)
    dim, dim_plus = report.metric_dimension, report.upper_dimension
    out: list[BoundCheck] = []
    for r in report.reducts:
        size = len(r)
        out.append(BoundCheck(r, "log3_degree", log_low, None, size >= log_low))
        out.append(BoundCheck(r, "n_minus_diameter", None, high, size <= high))
        out.append(BoundCheck(r, "dimension_range", dim, dim_plus, dim <= size <= dim_plus))
        if twins_present:
            out.append(BoundCheck(r, "n_minus_classes", None, n - k, size <= n - k))
        else:
            out.append(BoundCheck(r, "n_minus_classes", None, n - k, None))
        rs = set(r)
        twin_ok = all(len(rs.intersection(b)) >= len(b) - 1 for b in classes)
        out.append(BoundCheck(r, "twin_class_quota", None, None, twin_ok))
    return out


def _ceil_log3(x: int) -> int:
    # exact integer ceiling of log base 3
    k, p = 0, 1
    while p < x:
        p *= 3
        k += 1
    return k


def log3_lower_bound(g: Graph) -> int:
    return _ceil_log3(max_degree(g) + 1)


def twin_pairs(classes: Partition) -> list[tuple[int, int]]:
    return [pair for b in classes for pair in combinations(b, 2)]

