"""Closed-form extremal degree sequences and bounds for trees with a given
number k of maximum-degree vertices, plus deterministic witness realization.

For a class on n vertices the derived quantities are

    delta = floor((n-2)/k) + 1
    r     = n - 2 - k*(delta-1)          (0 <= r < k)
    p     = floor(r / (delta-2))         (delta >= 3)
    mu    = r - p*(delta-2) + 1          (1 <= mu <= delta-2)

The degenerate class k = n-2 (the path, delta = 2) takes p = 0 and mu = 1,
which makes every formula below collapse to the path values.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .errors import DomainError
from .indices import IndexValue, pi1, pi2_vertex
from .trees import DegreeSequence, Tree, is_tree_sequence

__all__ = [
    "Index",
    "Goal",
    "ClassParams",
    "ExtremalSpec",
    "is_admissible",
    "class_params",
    "extremal_spec",
    "realize",
]


class Index(Enum):
    PI1 = "pi1"
    PI2 = "pi2"


class Goal(Enum):
    MIN = "min"
    MAX = "max"


ADMISSIBILITY_RULE = "1 <= k <= floor((n-2)/2), or k == n-2 (the path)"


def is_admissible(n: int, k: int) -> bool:
    """True iff some tree on n vertices has exactly k maximum-degree vertices.

    A tree with maximum degree >= 3 forces k <= (n-2)/2 by the degree sum;
    maximum degree 2 is the path, which has exactly n-2 such vertices.
    """
    if n < 2 or k < 1:
        raise DomainError(f"need n >= 2 and k >= 1, got n={n}, k={k}")
    return 1 <= k <= (n - 2) // 2 or k == n - 2


@dataclass(frozen=True)
class ClassParams:
    """Derived quantities of the class of trees on n vertices with exactly
    k maximum-degree vertices."""

    n: int
    k: int
    delta: int
    r: int
    p: int
    mu: int

    @property
    def is_path(self) -> bool:
        return self.delta == 2


def class_params(n: int, k: int) -> ClassParams:
    if not is_admissible(n, k):
        raise DomainError(
            f"no tree on {n} vertices has exactly {k} maximum-degree vertices "
            f"({ADMISSIBILITY_RULE})"
        )
    delta = (n - 2) // k + 1
    r = n - 2 - k * (delta - 1)
    if delta >= 3:
        p = r // (delta - 2)
        mu = r - p * (delta - 2) + 1
    else:
        # path class: delta-2 == 0, the general formulas degenerate
        p = 0
        mu = 1
    return ClassParams(n=n, k=k, delta=delta, r=r, p=p, mu=mu)


@dataclass(frozen=True)
class ExtremalSpec:
    """Extremal degree sequence and exact bound for one (index, goal) pair."""

    index: Index
    goal: Goal
    params: ClassParams
    sequence: DegreeSequence
    bound: IndexValue


def _balanced_sequence(cp: ClassParams) -> DegreeSequence:
    """(delta^k, (delta-1)^p, mu, 1^...); a mu of 1 merges into the leaves."""
    degrees = [cp.delta] * cp.k + [cp.delta - 1] * cp.p
    if cp.mu >= 2:
        degrees.append(cp.mu)
    degrees += [1] * (cp.n - len(degrees))
    return DegreeSequence(tuple(degrees))


def _cubic_sequence(n: int, k: int) -> DegreeSequence:
    """(3^k, 2^(n-2k-2), 1^(k+2))."""
    return DegreeSequence((3,) * k + (2,) * (n - 2 * k - 2) + (1,) * (k + 2))


def extremal_spec(n: int, k: int, index: Index, goal: Goal) -> ExtremalSpec:
    """The extremal degree sequence of the class and its exact bound value.

    PI1/MIN and PI2/MAX share the balanced sequence; PI1/MAX and PI2/MIN
    share the cubic sequence.  For the path class (k = n-2) all four
    extrema coincide at 4^(n-2).
    """
    cp = class_params(n, k)
    pair = (index, goal)
    if pair in ((Index.PI1, Goal.MIN), (Index.PI2, Goal.MAX)):
        sequence = _balanced_sequence(cp)
        if index is Index.PI1:
            bound = cp.delta ** (2 * cp.k) * (cp.delta - 1) ** (2 * cp.p) * cp.mu**2
        else:
            bound = (
                cp.delta ** (cp.k * cp.delta)
                * (cp.delta - 1) ** (cp.p * (cp.delta - 1))
                * cp.mu**cp.mu
            )
    else:
        if cp.is_path:
            sequence = _balanced_sequence(cp)
            bound = 4 ** (n - 2)
        else:
            sequence = _cubic_sequence(n, k)
            if index is Index.PI1:
                bound = 9**k * 4 ** (n - 2 * k - 2)
            else:
                bound = 27**k * 4 ** (n - 2 * k - 2)
    evaluator = pi1 if index is Index.PI1 else pi2_vertex
    value = evaluator(sequence)
    if value.exact != bound:
        raise AssertionError(
            f"closed-form bound {bound} disagrees with index of sequence {value.exact}"
        )
    return ExtremalSpec(index=index, goal=goal, params=cp, sequence=sequence, bound=value)


def realize(d: DegreeSequence) -> Tree:
    """Deterministic tree realizing a tree degree sequence.

    Greedy breadth-first construction: sort degrees non-increasing, seed
    with vertex 0, keep a FIFO frontier of open attachment slots and attach
    the remaining vertices in degree order.  Same input, same adjacency.
    """
    degrees = sorted(d.degrees, reverse=True)
    n = len(degrees)
    if n == 1:
        if degrees != [0]:
            raise DomainError(f"{tuple(degrees)} is not a tree degree sequence")
        return Tree.from_edges(1, [])
    if not is_tree_sequence(degrees):
        raise DomainError(f"{tuple(degrees)} is not a tree degree sequence")
    edges = []
    # frontier entries: [vertex, open slots]
    frontier = [[0, degrees[0]]]
    for v in range(1, n):
        head = frontier[0]
        edges.append((head[0], v))
        head[1] -= 1
        if head[1] == 0:
            frontier.pop(0)
        if degrees[v] > 1:
            frontier.append([v, degrees[v] - 1])
    tree = Tree.from_edges(n, edges)
    if sorted((len(nbrs) for nbrs in tree.adj), reverse=True) != degrees:
        raise AssertionError("realization failed to reproduce the degree sequence")
    return tree
