"""Executable edge-rotation transformations and monotone ratio functions.

The two proof moves:

* DEGREE_SHIFT acts on degree sequences: one degree goes up by 1, another
  down by 1 (the sequence sum is preserved).
* LEAF_REATTACH acts on trees: cut the edge u-u2 at a maximum-degree vertex
  u and reattach u2 to a pendent vertex z1 in another branch of u.  Only
  d(u) and d(z1) change, so the index ratio depends on delta alone.

All ratio predicates use exact rational arithmetic; the monotone helpers
f and g are the only floating-point functions here.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .errors import DomainError
from .extremal import Index
from .trees import Tree

__all__ = [
    "MoveKind",
    "RotationMove",
    "f_ratio",
    "g_ratio",
    "edge_rotating_capacity",
    "leaf_reattach",
    "leaf_reattach_ratio",
    "degree_shift_ratio",
    "pair_shift_ratio",
    "leaf_reattach_chain",
]


class MoveKind(Enum):
    DEGREE_SHIFT = "degree_shift"
    LEAF_REATTACH = "leaf_reattach"


@dataclass(frozen=True)
class RotationMove:
    """One applied transformation step.

    For LEAF_REATTACH, ``source`` is the maximum-degree vertex u, ``donor``
    the detached neighbour u2 and ``receiver`` the pendent vertex z1.  For
    DEGREE_SHIFT, ``source`` is the position whose degree rises and
    ``donor`` the position whose degree falls.
    """

    kind: MoveKind
    source: int
    donor: int
    receiver: int = -1


def f_ratio(x: float, m: float) -> float:
    """x / (x + m); strictly increasing in x for fixed m > 0."""
    if x <= 0 or m <= 0:
        raise DomainError("f_ratio needs x > 0 and m > 0")
    return x / (x + m)


def g_ratio(x: float, m: float) -> float:
    """x^x / (x+m)^(x+m); strictly decreasing in x for fixed m > 0.

    Evaluated in the log domain and exponentiated.
    """
    if x <= 0 or m <= 0:
        raise DomainError("g_ratio needs x > 0 and m > 0")
    return math.exp(x * math.log(x) - (x + m) * math.log(x + m))


def edge_rotating_capacity(t: Tree) -> int:
    """Sum of d(v) - 1 over vertices with 2 <= d(v) <= max_degree - 1."""
    degs = [len(nbrs) for nbrs in t.adj]
    delta = max(degs)
    return sum(d - 1 for d in degs if 2 <= d <= delta - 1)


def _branch_neighbour(t: Tree, u: int, target: int) -> int:
    """The neighbour of u through which target is reached (target != u)."""
    parent = {u: -1}
    stack = [u]
    while stack:
        v = stack.pop()
        for w in t.adj[v]:
            if w not in parent:
                parent[w] = v
                stack.append(w)
    v = target
    while parent[v] != u:
        v = parent[v]
    return v


def leaf_reattach(t: Tree, u: int, u2: int, z1: int) -> Tree:
    """The move T - uu2 + u2z1: detach u2 from a maximum-degree vertex u and
    hang it on a pendent vertex z1 in a different branch of u.

    Degrees afterwards: d(u) - 1, d(z1) + 1 (1 -> 2), all others unchanged.
    """
    delta = max(len(nbrs) for nbrs in t.adj)
    if t.degree(u) != delta or delta < 4:
        raise DomainError("u must be a maximum-degree vertex with degree >= 4")
    if u2 not in t.adj[u]:
        raise DomainError("u2 must be adjacent to u")
    if t.degree(z1) != 1:
        raise DomainError("z1 must be a pendent vertex")
    if z1 == u2 or _branch_neighbour(t, u, z1) == u2:
        raise DomainError("z1 must not lie in u2's branch (it would be cut off)")
    edges = [(a, b) for a, b in t.edges() if {a, b} != {u, u2}]
    edges.append((u2, z1))
    return Tree.from_edges(t.n, edges)


def leaf_reattach_ratio(delta: int, index: Index) -> Fraction:
    """Exact index ratio after/before a leaf reattach at a degree-delta vertex.

    PI1: 4 (delta-1)^2 / delta^2  (> 1 for delta >= 3)
    PI2: 4 (delta-1)^(delta-1) / delta^delta  (< 1 for delta >= 4)
    """
    if delta < 3:
        raise DomainError("leaf reattach ratio needs delta >= 3")
    if index is Index.PI1:
        return Fraction(4 * (delta - 1) ** 2, delta**2)
    return Fraction(4 * (delta - 1) ** (delta - 1), delta**delta)


def degree_shift_ratio(delta: int, d_i: int, index: Index) -> Fraction:
    """Exact index ratio of the shift delta -> delta+1, d_i -> d_i-1.

    Requires 2 <= d_i <= delta - 1.  PI1 ratio is < 1, PI2 ratio > 1.
    """
    if not 2 <= d_i <= delta - 1:
        raise DomainError(f"need 2 <= d_i <= delta-1, got d_i={d_i}, delta={delta}")
    if index is Index.PI1:
        return Fraction((delta + 1) ** 2 * (d_i - 1) ** 2, delta**2 * d_i**2)
    return Fraction(
        (delta + 1) ** (delta + 1) * (d_i - 1) ** (d_i - 1),
        delta**delta * d_i**d_i,
    )


def pair_shift_ratio(i: int, j: int, index: Index) -> Fraction:
    """Exact ratio of the shift d_j -> d_j+1, d_i -> d_i-1 for 2 <= i <= j.

    PI1 ratio is < 1, PI2 ratio > 1.
    """
    if not 2 <= i <= j:
        raise DomainError(f"need 2 <= i <= j, got i={i}, j={j}")
    if index is Index.PI1:
        return Fraction((j + 1) ** 2 * (i - 1) ** 2, j**2 * i**2)
    return Fraction((j + 1) ** (j + 1) * (i - 1) ** (i - 1), j**j * i**i)


def _pendent_in_branch(t: Tree, u: int, u1: int) -> int:
    """Smallest pendent vertex in u1's branch of u (u1 itself if a leaf)."""
    seen = {u, u1}
    stack = [u1]
    pendents = []
    while stack:
        v = stack.pop()
        if t.degree(v) == 1:
            pendents.append(v)
        for w in t.adj[v]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return min(pendents)


def leaf_reattach_chain(t: Tree) -> tuple[list[Tree], list[RotationMove]]:
    """Apply leaf reattaches until no vertex of the original maximum degree
    remains; returns the intermediate trees and the moves taken.

    Requires max degree >= 4.  Donor choices are the lowest-indexed valid
    vertices; any valid choice yields the same index ratios, this pins a
    deterministic one.  Terminates because each step removes one vertex of
    the old maximum degree and creates none.
    """
    delta0 = max(len(nbrs) for nbrs in t.adj)
    if delta0 < 4:
        raise DomainError("leaf reattach chain needs maximum degree >= 4")
    trees: list[Tree] = []
    moves: list[RotationMove] = []
    current = t
    while True:
        hot = [v for v in range(current.n) if current.degree(v) == delta0]
        if not hot:
            break
        u = hot[0]
        u1 = current.adj[u][0]
        z1 = _pendent_in_branch(current, u, u1)
        u2 = next(w for w in current.adj[u] if w != u1)
        current = leaf_reattach(current, u, u2, z1)
        trees.append(current)
        moves.append(RotationMove(MoveKind.LEAF_REATTACH, source=u, donor=u2, receiver=z1))
    return trees, moves
