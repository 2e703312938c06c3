"""Rough approximations, positive regions and dependency degrees."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .metric_table import InformationTable, VertexSubset, partition


@dataclass(frozen=True)
class ApproximationPair:
    lower: VertexSubset
    upper: VertexSubset

    @property
    def exact(self) -> bool:
        return self.lower == self.upper

    @property
    def boundary(self) -> VertexSubset:
        lower = set(self.lower)
        return tuple(v for v in self.upper if v not in lower)


def approximate(t: InformationTable, attrs: Iterable[int], target: Iterable[int]) -> ApproximationPair:
    x = set(target)
    lower: list[int] = []
    upper: list[int] = []
    for block in partition(t, attrs):
        inside = x.intersection(block)
        if inside:
            upper.extend(block)
            if len(inside) == len(block):
                lower.extend(block)
    return ApproximationPair(tuple(sorted(lower)), tuple(sorted(upper)))


def positive_region(t: InformationTable, condition: Iterable[int], target: Iterable[int]) -> VertexSubset:
    """POS_B(A): vertices whose granule under ``condition`` (B) fits inside their granule under ``target`` (A).

    Argument order follows the subscript: the conditioning set comes first.
    """
    home = {}
    for i, block in enumerate(partition(t, target)):
        for v in block:
            home[v] = i
    pos: list[int] = []
    for block in partition(t, condition):
        if len({home[v] for v in block}) == 1:
            pos.extend(block)
    return tuple(sorted(pos))


def dependency(t: InformationTable, condition: Iterable[int], target: Iterable[int]) -> Fraction:
    """Degree kappa_B(A) = |POS_B(A)| / |V| as an exact fraction."""
    return Fraction(len(positive_region(t, condition, target)), t.n)
