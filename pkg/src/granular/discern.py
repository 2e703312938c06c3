"""Distance-based discernibility matrix, essential sets and transversal reducts.

Entry ``{i, j}`` of the matrix is the set of vertices whose distances to
``i`` and ``j`` differ. Minimal resolving sets are the minimal hitting sets
(prime implicants of the CNF) of the distinct entries.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import gcd
from typing import Iterable, Mapping

from .errors import GranularError
from .metric_table import InformationTable, VertexSubset, is_discrete, partition
from .resolving import sort_subsets

Pair = tuple[int, int]


@dataclass(frozen=True)
class DiscernibilityMatrix:
    n: int
    entries: Mapping[Pair, VertexSubset]

    def entry(self, i: int, j: int) -> VertexSubset:
        if i == j:
            return ()
        return self.entries[(i, j) if i < j else (j, i)]

    def pairs(self) -> list[Pair]:
        return sorted(self.entries)


def discernibility_matrix(t: InformationTable, cross_check: bool = True) -> DiscernibilityMatrix:
    rows = t.dm.rows
    n = t.n
    entries = {
        (i, j): tuple(w for w in range(n) if rows[i][w] != rows[j][w])
        for i, j in combinations(range(n), 2)
    }
    if cross_check:
        layered = discernibility_by_distance_layers(t)
        if layered.entries != entries:
            raise GranularError("internal", "distance-layer formulation disagrees with the pairwise definition")
    return DiscernibilityMatrix(n, entries)


def discernibility_by_distance_layers(t: InformationTable) -> DiscernibilityMatrix:
    """Same matrix via V minus the union over t of X_t(i) & X_t(j), X_t(v) = vertices at distance t from v."""
    n = t.n
    layers: list[dict[int, set[int]]] = []
    for v in range(n):
        by_dist: dict[int, set[int]] = {}
        for w, d in enumerate(t.dm.rows[v]):
            by_dist.setdefault(d, set()).add(w)
        layers.append(by_dist)
    entries = {}
    for i, j in combinations(range(n), 2):
        agree: set[int] = set()
        for dist, ring in layers[i].items():
            agree |= ring & layers[j].get(dist, set())
        entries[(i, j)] = tuple(w for w in range(n) if w not in agree)
    return DiscernibilityMatrix(n, entries)


def numerical_matrix(dm: DiscernibilityMatrix) -> dict[Pair, int]:
    return {pair: len(entry) for pair, entry in dm.entries.items()}


def distinct_entries(dm: DiscernibilityMatrix) -> tuple[VertexSubset, ...]:
    """DISC: the distinct non-empty entries, by size then lexicographically."""
    return sort_subsets(e for e in dm.entries.values() if e)


def minimal_sets(family: Iterable[VertexSubset]) -> tuple[VertexSubset, ...]:
    """Inclusion-minimal members (absorption), streamed in increasing cardinality."""
    kept: list[frozenset[int]] = []
    out: list[VertexSubset] = []
    for s in sort_subsets(family):
        fs = frozenset(s)
        if not any(k <= fs for k in kept):
            kept.append(fs)
            out.append(s)
    return tuple(out)


@dataclass(frozen=True)
class EssentialSetReport:
    essential_sets: tuple[VertexSubset, ...]

    @property
    def essential_dimension(self) -> int | None:
        return min((len(e) for e in self.essential_sets), default=None)

    @property
    def counts_by_size(self) -> dict[int, int]:
        counts: dict[int, int] = {}
        for e in self.essential_sets:
            counts[len(e)] = counts.get(len(e), 0) + 1
        return dict(sorted(counts.items()))


def essential_sets(t: InformationTable, dm: DiscernibilityMatrix | None = None) -> EssentialSetReport:
    """Essential sets read off as the minimal entries of the discernibility matrix."""
    if dm is None:
        dm = discernibility_matrix(t)
    return EssentialSetReport(minimal_sets(distinct_entries(dm)))


def essential_sets_by_definition(t: InformationTable) -> EssentialSetReport:
    """Brute force over column removals: E is essential when dropping E coarsens the
    full partition while dropping any proper subset does not.

    Removal-coarsening is upward closed, so checking the one-element-smaller
    subsets of E covers every proper subset.
    """
    n = t.n
    everything = set(range(n))
    coarsens: set[VertexSubset] = set()
    found: list[VertexSubset] = []
    for k in range(1, n + 1):
        for e in combinations(range(n), k):
            if is_discrete(partition(t, everything.difference(e))):
                continue
            coarsens.add(e)
            if all(e[:i] + e[i + 1:] not in coarsens for i in range(k)):
                found.append(e)
    return EssentialSetReport(tuple(found))


def enumerate_reducts_transversal(disc: Iterable[VertexSubset]) -> tuple[VertexSubset, ...]:
    """Minimal hitting sets of the clause family, i.e. the prime implicants of the
    discernibility function.

    After absorption, depth-first search branches on the lexicographically
    least uncovered clause. Branch ``i`` takes the clause's ``i``-th vertex and
    forbids the earlier ones, so each transversal is produced once; a branch
    dies as soon as some chosen vertex no longer has a clause that only it
    covers, so every leaf is minimal.
    """
    clauses = list(disc)
    if any(len(c) == 0 for c in clauses):
        raise GranularError("unresolvable_pair", "unresolvable pair: empty discernibility clause")
    clauses = [frozenset(c) for c in minimal_sets(clauses)]
    if not clauses:
        return ((),)
    results: list[VertexSubset] = []

    def search(chosen: list[int], forbidden: frozenset[int]) -> None:
        uncovered = [c for c in clauses if not c.intersection(chosen)]
        if not uncovered:
            results.append(tuple(sorted(chosen)))
            return
        clause = min(uncovered, key=lambda c: (len(c), sorted(c)))
        blocked = set(forbidden)
        for v in sorted(clause):
            if v in blocked:
                continue
            trial = chosen + [v]
            if _all_critical(trial):
                search(trial, frozenset(blocked))
            blocked.add(v)

    def _all_critical(trial: list[int]) -> bool:
        chosen = set(trial)
        for v in trial:
            others = chosen - {v}
            if not any(v in c and not c.intersection(others) for c in clauses):
                return False
        return True

    search([], frozenset())
    return sort_subsets(results)


def closed_form_delta_zn(n: int, a: int, b: int) -> tuple[int, ...]:
    """Closed-form entry for Gamma(Z_n), as ring elements.

    Same divisor class -> {a, b}; a == b -> empty; otherwise
    (V minus {w : gcd(w,a) != 1 and gcd(w,b) != 1}) union {u : u*a = 0 or u*b = 0} union {a, b}.
    """
    vertices = [v for v in range(2, n - 1) if gcd(v, n) > 1]
    for x in (a, b):
        if x not in vertices:
            raise GranularError("not_zero_divisor", f"{x} is not a non-zero zero-divisor of Z_{n}")
    if a == b:
        return ()
    if gcd(a, n) == gcd(b, n):
        return tuple(sorted((a, b)))
    shared = {w for w in vertices if gcd(w, a) != 1 and gcd(w, b) != 1}
    annihilating = {u for u in vertices if u * a % n == 0 or u * b % n == 0}
    return tuple(sorted((set(vertices) - shared) | annihilating | {a, b}))


def _bits(k: int, word: str | int) -> int:
    if isinstance(word, str):
        if len(word) != k or set(word) - {"0", "1"}:
            raise GranularError("bad_vector", f"expected a {k}-bit string, got {word!r}")
        return int(word, 2)
    return word


def closed_form_delta_boolean(k: int, u: str | int, v: str | int) -> tuple[str, ...]:
    """Closed-form entry for the zero-divisor graph of Z_2^k, by weight layer.

    Both layer-1 -> N(u) sym-diff N(v); both layer k-1 -> N(~u) sym-diff N(~v);
    both in one middle layer -> the union of those two plus {u xor v, ~u xor ~v}.
    Pairs from different layers are outside the formula and raise.
    """
    full = (1 << k) - 1
    x, y = _bits(k, u), _bits(k, v)
    for w in (x, y):
        if w == 0 or w == full:
            raise GranularError("bad_vector", "all-zero and all-one vectors are not vertices")
    if x == y:
        return ()
    wx, wy = x.bit_count(), y.bit_count()
    if wx != wy:
        raise GranularError("pair_spans_layers", f"no closed form for a pair from layers {wx} and {wy}")

    def nbrs(w: int) -> set[int]:
        if w == 0 or w == full:
            return set()
        return {z for z in range(1, full) if z & w == 0}

    cx, cy = full ^ x, full ^ y
    if wx == 1:
        out = nbrs(x) ^ nbrs(y)
    elif wx == k - 1:
        out = nbrs(cx) ^ nbrs(cy)
    else:
        out = (nbrs(x) ^ nbrs(y)) | (nbrs(cx) ^ nbrs(cy)) | ({x ^ y, cx ^ cy} - {0, full})
    return tuple(format(z, f"0{k}b") for z in sorted(out, key=lambda z: (z.bit_count(), -z)))
