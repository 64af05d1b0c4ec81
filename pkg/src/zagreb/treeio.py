"""Bit-exact tree I/O: graph6 (short form) and plain edge lists.

graph6 follows the de-facto standard packing: one byte n+63 for the order
(n <= 62), then the upper-triangle adjacency bits x(0,1), x(0,2), x(1,2),
x(0,3), ... column by column, packed big-endian six bits per byte with
offset 63.
"""

from __future__ import annotations

from .errors import GraphFormatError, NotATreeError
from .trees import Tree

__all__ = ["parse_graph6", "emit_graph6", "parse_edgelist", "emit_edgelist"]

_HEADER = ">>graph6<<"


def emit_graph6(t: Tree) -> str:
    """Encode a tree as a short-form graph6 string."""
    n = t.n
    if n > 62:
        raise GraphFormatError("short-form graph6 supports at most 62 vertices")
    bits: list[int] = []
    for j in range(1, n):
        row = t.adj[j]
        for i in range(j):
            bits.append(1 if i in row else 0)
    chars = [chr(n + 63)]
    for pos in range(0, len(bits), 6):
        group = bits[pos:pos + 6]
        group += [0] * (6 - len(group))
        value = 0
        for b in group:
            value = (value << 1) | b
        chars.append(chr(value + 63))
    return "".join(chars)


def parse_graph6(text: str) -> Tree:
    """Decode a short-form graph6 string; the graph must be a tree.

    Raises :class:`GraphFormatError` for malformed encodings and
    :class:`NotATreeError` when the decoded graph is not a tree.
    """
    s = text.strip()
    if s.startswith(_HEADER):
        s = s[len(_HEADER):]
    if not s:
        raise GraphFormatError("empty graph6 string")
    n = ord(s[0]) - 63
    if not 0 <= n <= 62:
        raise GraphFormatError(f"unsupported graph6 order byte {s[0]!r} (long form?)")
    if n == 0:
        raise NotATreeError("graph6 string encodes the empty graph")
    nbits = n * (n - 1) // 2
    body = s[1:]
    if len(body) != (nbits + 5) // 6:
        raise GraphFormatError(
            f"graph6 body has {len(body)} bytes, expected {(nbits + 5) // 6} for n={n}"
        )
    bits: list[int] = []
    for ch in body:
        value = ord(ch) - 63
        if not 0 <= value < 64:
            raise GraphFormatError(f"invalid graph6 byte {ch!r}")
        bits.extend((value >> shift) & 1 for shift in range(5, -1, -1))
    if any(bits[nbits:]):
        raise GraphFormatError("nonzero padding bits in graph6 string")
    edges = []
    pos = 0
    for j in range(1, n):
        for i in range(j):
            if bits[pos]:
                edges.append((i, j))
            pos += 1
    return Tree.from_edges(n, edges)


def parse_edgelist(text: str) -> Tree:
    """Parse whitespace-separated 0-based "u v" pairs into a tree."""
    tokens = text.split()
    if not tokens:
        raise GraphFormatError("empty edge list")
    if len(tokens) % 2 != 0:
        raise GraphFormatError("odd number of vertex tokens in edge list")
    try:
        values = [int(tok) for tok in tokens]
    except ValueError as exc:
        raise GraphFormatError(f"non-integer vertex token: {exc}") from None
    if any(v < 0 for v in values):
        raise GraphFormatError("negative vertex index in edge list")
    edges = list(zip(values[0::2], values[1::2]))
    n = max(values) + 1
    return Tree.from_edges(n, edges)


def emit_edgelist(t: Tree) -> str:
    """One "u v" line per edge, u < v, sorted."""
    return "\n".join(f"{u} {v}" for u, v in t.edges())
