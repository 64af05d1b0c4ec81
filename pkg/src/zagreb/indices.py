"""Exact multiplicative and classical Zagreb indices.

All values are computed in unbounded integer arithmetic; the base-2
logarithm carried by :class:`IndexValue` is a display/ordering shadow only.
"""

from __future__ import annotations

import math
from collections.abc import Sequence
from dataclasses import dataclass

from .trees import DegreeSequence, Tree

__all__ = ["IndexValue", "pi1", "pi2_vertex", "pi2_edge", "m1", "m2"]


@dataclass(frozen=True)
class IndexValue:
    """Exact index value plus its base-2 logarithm."""

    exact: int
    log2: float

    @classmethod
    def of(cls, exact: int) -> "IndexValue":
        return cls(exact, math.log2(exact) if exact > 0 else float("-inf"))

    def __str__(self) -> str:
        return str(self.exact)


def _multiplicities(d: DegreeSequence | Sequence[int]) -> dict[int, int]:
    if isinstance(d, DegreeSequence):
        return d.multiplicities()
    counts: dict[int, int] = {}
    for value in d:
        counts[value] = counts.get(value, 0) + 1
    return counts


def pi1(d: DegreeSequence | Sequence[int]) -> IndexValue:
    """First multiplicative Zagreb index: product of squared degrees."""
    exact = 1
    for deg, count in _multiplicities(d).items():
        exact *= deg ** (2 * count)
    return IndexValue.of(exact)


def pi2_vertex(d: DegreeSequence | Sequence[int]) -> IndexValue:
    """Second multiplicative Zagreb index from degrees: product of d^d."""
    exact = 1
    for deg, count in _multiplicities(d).items():
        exact *= deg ** (deg * count)
    return IndexValue.of(exact)


def pi2_edge(t: Tree) -> IndexValue:
    """Second multiplicative Zagreb index as a product over edges of d(u)d(v).

    Equals ``pi2_vertex`` of the tree's degree sequence.
    """
    degs = [len(nbrs) for nbrs in t.adj]
    exact = 1
    for u, v in t.edges():
        exact *= degs[u] * degs[v]
    return IndexValue.of(exact)


def m1(d: DegreeSequence | Sequence[int]) -> int:
    """First Zagreb index: sum of squared degrees."""
    return sum(deg * deg * count for deg, count in _multiplicities(d).items())


def m2(t: Tree) -> int:
    """Second Zagreb index: sum over edges of d(u)d(v)."""
    degs = [len(nbrs) for nbrs in t.adj]
    return sum(degs[u] * degs[v] for u, v in t.edges())
