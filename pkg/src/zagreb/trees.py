"""Tree representation and degree-sequence primitives.

Vertices are dense 0-based integers.  A :class:`Tree` is validated at
construction (edge count, connectivity, simplicity), so every downstream
operation may assume a well-formed tree.  Trees and degree sequences are
immutable.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass

from .errors import DomainError, NotATreeError

__all__ = [
    "Tree",
    "DegreeSequence",
    "degree_sequence_of",
    "is_tree_sequence",
    "max_degree_count",
]


@dataclass(frozen=True)
class Tree:
    """An unrooted tree on vertices ``0 .. n-1``.

    ``adj[v]`` is the sorted tuple of neighbours of ``v``.
    """

    n: int
    adj: tuple[tuple[int, ...], ...]

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Tree":
        """Build and validate a tree from an edge list.

        Raises :class:`NotATreeError` on self-loops, duplicate edges, vertices
        out of range, disconnection or wrong edge count.
        """
        if n < 1:
            raise NotATreeError("a tree needs at least one vertex")
        neighbours: list[set[int]] = [set() for _ in range(n)]
        m = 0
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise NotATreeError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise NotATreeError(f"self-loop at vertex {u}")
            if v in neighbours[u]:
                raise NotATreeError(f"duplicate edge ({u}, {v})")
            neighbours[u].add(v)
            neighbours[v].add(u)
            m += 1
        # connectivity first: a forest with too few edges reads better as
        # "disconnected" than "wrong edge count"
        seen = [False] * n
        stack = [0]
        seen[0] = True
        reached = 1
        while stack:
            u = stack.pop()
            for w in neighbours[u]:
                if not seen[w]:
                    seen[w] = True
                    reached += 1
                    stack.append(w)
        if reached != n:
            raise NotATreeError(f"graph is disconnected ({reached} of {n} vertices reachable)")
        if m != n - 1:
            raise NotATreeError(f"a tree on {n} vertices needs {n - 1} edges, got {m}")
        return cls(n, tuple(tuple(sorted(s)) for s in neighbours))

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def edges(self) -> Iterator[tuple[int, int]]:
        """Yield each edge once, as (u, v) with u < v."""
        for u in range(self.n):
            for v in self.adj[u]:
                if u < v:
                    yield (u, v)

    def relabel(self, perm: Sequence[int]) -> "Tree":
        """Return the tree with vertex v renamed to perm[v]."""
        return Tree.from_edges(self.n, ((perm[u], perm[v]) for u, v in self.edges()))


@dataclass(frozen=True)
class DegreeSequence:
    """Non-increasing sequence of vertex degrees of a tree.

    The singleton (0,) is allowed as the degree sequence of the one-vertex
    tree; otherwise all entries are positive.
    """

    degrees: tuple[int, ...]

    def __post_init__(self) -> None:
        d = self.degrees
        if not d:
            raise DomainError("empty degree sequence")
        if any(d[i] < d[i + 1] for i in range(len(d) - 1)):
            raise DomainError("degree sequence must be non-increasing")
        if d != (0,) and d[-1] < 1:
            raise DomainError("degrees must be positive")

    @classmethod
    def of(cls, degrees: Iterable[int]) -> "DegreeSequence":
        return cls(tuple(sorted(degrees, reverse=True)))

    @property
    def n(self) -> int:
        return len(self.degrees)

    def multiplicities(self) -> dict[int, int]:
        """Map degree value i -> number n_i of vertices with that degree."""
        counts: dict[int, int] = {}
        for d in self.degrees:
            counts[d] = counts.get(d, 0) + 1
        return counts


def degree_sequence_of(t: Tree) -> DegreeSequence:
    """Degree sequence of a tree, sorted non-increasing."""
    return DegreeSequence.of(len(nbrs) for nbrs in t.adj)


def is_tree_sequence(degrees: Sequence[int]) -> bool:
    """True iff the positive integers sum to 2(n-1), i.e. some tree realizes them."""
    if not degrees:
        raise DomainError("empty degree sequence")
    if any(d < 1 for d in degrees):
        raise DomainError("degrees must be positive integers")
    return sum(degrees) == 2 * (len(degrees) - 1)


def max_degree_count(t: Tree) -> tuple[int, int]:
    """Return (maximum degree, number of vertices attaining it)."""
    degs = [len(nbrs) for nbrs in t.adj]
    delta = max(degs)
    return delta, degs.count(delta)
