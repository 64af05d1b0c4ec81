"""Pure-Python kernels: free-tree generation and the Prüfer census.

These are the reference implementations of the two hot loops.  A compiled
twin lives in ``zagreb._speedups``; both expose the same interface and must
produce bit-identical results (enforced by tests).

Free trees are generated by the successor algorithm of Wright, Richmond,
Odlyzko and McKay over canonical level sequences (rooted-tree successors in
the style of Beyer and Hedetniemi, restricted to centroid-canonical free
representatives).
"""

from __future__ import annotations

from collections.abc import Iterator, Sequence
from itertools import product

__all__ = [
    "free_tree_parents",
    "prufer_canonical_codes",
    "prufer_to_edges",
    "canonical_bytes",
    "encoding_to_code",
]

BACKEND = "python"


# ---------------------------------------------------------------------------
# free-tree generation over level sequences


def _next_rooted(layout: list[int], p: int | None = None) -> list[int] | None:
    """Successor of a canonical rooted-tree level sequence; None when done."""
    if p is None:
        p = len(layout) - 1
        while layout[p] == 1:
            p -= 1
    if p == 0:
        return None
    q = p - 1
    while layout[q] != layout[p] - 1:
        q -= 1
    result = list(layout)
    for i in range(p, len(result)):
        result[i] = result[i - p + q]
    return result


def _split(layout: list[int]) -> tuple[list[int], list[int]]:
    """Split into the root's first subtree and the tree without it."""
    m = None
    seen_one = False
    for i, level in enumerate(layout):
        if level == 1:
            if seen_one:
                m = i
                break
            seen_one = True
    if m is None:
        m = len(layout)
    left = [layout[i] - 1 for i in range(1, m)]
    rest = [0] + layout[m:]
    return left, rest


def _next_free(candidate: list[int]) -> list[int]:
    """Advance to the nearest level sequence that encodes a free tree.

    The candidate must be a valid rooted level sequence; if it already
    represents a canonical free tree it is returned unchanged, otherwise the
    successor jump lands on the next canonical free representative.
    """
    left, rest = _split(candidate)
    left_height = max(left)
    rest_height = max(rest)
    valid = rest_height >= left_height
    if valid and rest_height == left_height:
        if len(left) > len(rest):
            valid = False
        elif len(left) == len(rest) and left > rest:
            valid = False
    if valid:
        return candidate
    p = len(left)
    saved = candidate[p]
    successor = _next_rooted(candidate, p)
    assert successor is not None
    if saved > 2:
        new_left, _ = _split(successor)
        suffix = list(range(1, max(new_left) + 2))
        successor[-len(suffix):] = suffix
    return successor


def _layout_to_parents(layout: Sequence[int]) -> tuple[int, ...]:
    parents = [-1] * len(layout)
    stack: list[int] = []
    for i, level in enumerate(layout):
        while stack and layout[stack[-1]] >= level:
            stack.pop()
        if stack:
            parents[i] = stack[-1]
        stack.append(i)
    return tuple(parents)


def free_tree_parents(n: int) -> Iterator[tuple[int, ...]]:
    """Yield one parent array per isomorphism class of trees on n vertices.

    ``parents[0] == -1``; vertices are in preorder of the canonical level
    sequence, so ``parents[i] < i``.
    """
    if not 1 <= n <= 62:
        raise ValueError(f"unsupported order {n}")
    if n == 1:
        yield (-1,)
        return
    # start at the path rooted at its centre
    layout: list[int] | None = list(range(n // 2 + 1)) + list(range(1, (n + 1) // 2))
    while layout is not None:
        layout = _next_free(layout)
        yield _layout_to_parents(layout)
        layout = _next_rooted(layout)


# ---------------------------------------------------------------------------
# canonical form (AHU encoding rooted at the centre)


def _centers(adj: Sequence[Sequence[int]]) -> list[int]:
    n = len(adj)
    if n <= 2:
        return list(range(n))
    deg = [len(nbrs) for nbrs in adj]
    removed = [False] * n
    layer = [v for v in range(n) if deg[v] == 1]
    remaining = n
    while remaining > 2:
        next_layer = []
        for v in layer:
            removed[v] = True
            remaining -= 1
            for w in adj[v]:
                if not removed[w]:
                    deg[w] -= 1
                    if deg[w] == 1:
                        next_layer.append(w)
        layer = next_layer
    return [v for v in range(n) if not removed[v]]


def _rooted_bytes(adj: Sequence[Sequence[int]], root: int) -> bytes:
    n = len(adj)
    parent = [-1] * n
    order = [root]
    for v in order:
        for w in adj[v]:
            if w != parent[v]:
                parent[w] = v
                order.append(w)
    enc: list[bytes] = [b""] * n
    for v in reversed(order):
        children = sorted(enc[w] for w in adj[v] if w != parent[v])
        enc[v] = b"(" + b"".join(children) + b")"
    return enc[root]


def canonical_bytes(adj: Sequence[Sequence[int]]) -> bytes:
    """Byte string equal for two trees iff they are isomorphic.

    AHU encoding rooted at the centre; for bicentral trees the
    lexicographically smaller of the two rooted encodings.
    """
    return min(_rooted_bytes(adj, c) for c in _centers(adj))


def encoding_to_code(enc: bytes) -> int:
    """Pack a parenthesis encoding into an integer, '(' = 1, MSB first."""
    code = 0
    for ch in enc:
        code = (code << 1) | (ch == 0x28)
    return code


# ---------------------------------------------------------------------------
# Prüfer census


def prufer_to_edges(seq: Sequence[int], n: int) -> list[tuple[int, int]]:
    """Decode a Prüfer sequence over {0..n-1} (length n-2) into tree edges."""
    if len(seq) != n - 2:
        raise ValueError("Prüfer sequence must have length n-2")
    if any(not 0 <= s < n for s in seq):
        raise ValueError("Prüfer entries must lie in 0..n-1")
    degree = [1] * n
    for s in seq:
        degree[s] += 1
    edges = []
    ptr = 0
    while degree[ptr] != 1:
        ptr += 1
    leaf = ptr
    for s in seq:
        edges.append((leaf, s))
        degree[s] -= 1
        if degree[s] == 1 and s < ptr:
            leaf = s
        else:
            ptr += 1
            while degree[ptr] != 1:
                ptr += 1
            leaf = ptr
    edges.append((leaf, n - 1))
    return edges


def prufer_canonical_codes(n: int) -> set[int]:
    """Canonical codes of all n^(n-2) labelled trees on n vertices.

    The size of the returned set is the number of isomorphism classes; this
    is the independent cross-check for the free-tree generator.
    """
    if not 1 <= n <= 12:
        raise ValueError(f"Prüfer census supports 1 <= n <= 12, got {n}")
    if n == 1:
        return {encoding_to_code(b"()")}
    if n == 2:
        return {encoding_to_code(b"(())")}
    codes: set[int] = set()
    for seq in product(range(n), repeat=n - 2):
        adj: list[list[int]] = [[] for _ in range(n)]
        for u, v in prufer_to_edges(seq, n):
            adj[u].append(v)
            adj[v].append(u)
        codes.add(encoding_to_code(canonical_bytes(adj)))
    return codes
