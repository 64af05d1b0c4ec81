"""Brute-force ground truth: isomorph-free tree enumeration, classification
by number of maximum-degree vertices, and formula-vs-enumeration reports.

Enumeration streams trees and keeps only running extrema plus the attaining
degree-sequence sets (capped, with an overflow flag), so memory stays O(1)
per class.  The independent Prüfer census is the cross-check for the
generator itself.
"""

from __future__ import annotations

import csv
import io
import json
from collections.abc import Iterator, Sequence
from dataclasses import dataclass, field

from . import _kernels, _kernels_py
from .errors import DomainError
from .extremal import Goal, Index, extremal_spec, is_admissible
from .indices import IndexValue, pi1, pi2_vertex
from .trees import DegreeSequence, Tree, degree_sequence_of, max_degree_count

__all__ = [
    "MAX_ENUM_ORDER",
    "SEQUENCE_CAP",
    "enumerate_free_trees",
    "tree_from_parents",
    "tree_from_prufer",
    "canonical_form",
    "canonical_code",
    "prufer_canonical_codes",
    "prufer_class_count",
    "classify",
    "QuadrantReport",
    "ExtremalReport",
    "verify_class",
    "verify_grid",
    "reports_to_json",
    "reports_to_csv",
]

MAX_ENUM_ORDER = 20
SEQUENCE_CAP = 64


def tree_from_parents(parents: Sequence[int]) -> Tree:
    """Tree from a parent array with parents[0] == -1."""
    return Tree.from_edges(len(parents), ((i, p) for i, p in enumerate(parents) if p >= 0))


def tree_from_prufer(seq: Sequence[int]) -> Tree:
    """Labelled tree on len(seq)+2 vertices decoded from a Prüfer sequence."""
    n = len(seq) + 2
    return Tree.from_edges(n, _kernels_py.prufer_to_edges(seq, n))


def enumerate_free_trees(n: int) -> Iterator[Tree]:
    """Exactly one representative per isomorphism class of trees on n vertices."""
    if not 1 <= n <= MAX_ENUM_ORDER:
        raise DomainError(f"enumeration supports 1 <= n <= {MAX_ENUM_ORDER}, got {n}")
    for parents in _kernels.free_tree_parents(n):
        yield tree_from_parents(parents)


def canonical_form(t: Tree) -> bytes:
    """Byte string equal for two trees iff they are isomorphic."""
    return _kernels_py.canonical_bytes(t.adj)


def canonical_code(t: Tree) -> int:
    """canonical_form packed into an integer ('(' = 1, MSB first)."""
    return _kernels_py.encoding_to_code(canonical_form(t))


def prufer_canonical_codes(n: int) -> set[int]:
    """Canonical codes of all n^(n-2) labelled trees (independent oracle)."""
    return _kernels.prufer_canonical_codes(n)


def prufer_class_count(n: int) -> int:
    """Number of isomorphism classes per the Prüfer census."""
    return len(prufer_canonical_codes(n))


def classify(n: int) -> dict[int, list[Tree]]:
    """Partition the free trees on n vertices by their number k of
    maximum-degree vertices.  (For n >= 3 the keys are exactly the
    admissible k values.)"""
    out: dict[int, list[Tree]] = {}
    for t in enumerate_free_trees(n):
        _, k = max_degree_count(t)
        out.setdefault(k, []).append(t)
    return dict(sorted(out.items()))


@dataclass(frozen=True)
class QuadrantReport:
    """Oracle-vs-formula comparison for one (index, goal) pair of a class."""

    index: Index
    goal: Goal
    oracle_value: IndexValue
    oracle_sequences: tuple[tuple[int, ...], ...]
    overflow: bool
    formula_value: IndexValue
    formula_sequence: tuple[int, ...]
    match: bool


@dataclass(frozen=True)
class ExtremalReport:
    n: int
    k: int
    class_size: int
    quadrants: tuple[QuadrantReport, ...]

    @property
    def all_match(self) -> bool:
        return all(q.match for q in self.quadrants)

    def quadrant(self, index: Index, goal: Goal) -> QuadrantReport:
        for q in self.quadrants:
            if q.index is index and q.goal is goal:
                return q
        raise KeyError((index, goal))


@dataclass
class _Extremum:
    minimize: bool
    value: int | None = None
    sequences: set[tuple[int, ...]] = field(default_factory=set)
    overflow: bool = False

    def update(self, value: int, seq: tuple[int, ...]) -> None:
        if self.value is None or (value < self.value if self.minimize else value > self.value):
            self.value = value
            self.sequences = {seq}
            self.overflow = False
        elif value == self.value and seq not in self.sequences:
            if len(self.sequences) < SEQUENCE_CAP:
                self.sequences.add(seq)
            else:
                self.overflow = True


@dataclass
class _ClassAccumulator:
    size: int = 0
    extrema: dict[tuple[Index, Goal], _Extremum] = field(default_factory=dict)

    def __post_init__(self) -> None:
        for index in Index:
            for goal in Goal:
                self.extrema[(index, goal)] = _Extremum(minimize=goal is Goal.MIN)

    def update(self, seq: tuple[int, ...], v1: int, v2: int) -> None:
        self.size += 1
        values = {Index.PI1: v1, Index.PI2: v2}
        for (index, _goal), extremum in self.extrema.items():
            extremum.update(values[index], seq)


def _scan(n: int) -> dict[int, _ClassAccumulator]:
    """One enumeration pass over all trees on n vertices, accumulated per k."""
    accs: dict[int, _ClassAccumulator] = {}
    for t in enumerate_free_trees(n):
        d = degree_sequence_of(t)
        k = d.degrees.count(d.degrees[0])
        acc = accs.get(k)
        if acc is None:
            acc = accs[k] = _ClassAccumulator()
        acc.update(d.degrees, pi1(d).exact, pi2_vertex(d).exact)
    return accs


def _report_for(n: int, k: int, acc: _ClassAccumulator) -> ExtremalReport:
    quadrants = []
    for index in Index:
        for goal in Goal:
            spec = extremal_spec(n, k, index, goal)
            extremum = acc.extrema[(index, goal)]
            assert extremum.value is not None
            sequences = tuple(sorted(extremum.sequences))
            match = (
                extremum.value == spec.bound.exact
                and not extremum.overflow
                and sequences == (spec.sequence.degrees,)
            )
            quadrants.append(
                QuadrantReport(
                    index=index,
                    goal=goal,
                    oracle_value=IndexValue.of(extremum.value),
                    oracle_sequences=sequences,
                    overflow=extremum.overflow,
                    formula_value=spec.bound,
                    formula_sequence=spec.sequence.degrees,
                    match=match,
                )
            )
    return ExtremalReport(n=n, k=k, class_size=acc.size, quadrants=tuple(quadrants))


def verify_class(n: int, k: int) -> ExtremalReport:
    """Exhaustive check of one class against the closed-form extremal values."""
    if not is_admissible(n, k):
        raise DomainError(f"class (n={n}, k={k}) is empty")
    accs = _scan(n)
    if k not in accs:
        raise DomainError(
            f"class (n={n}, k={k}) predicted admissible but enumeration found no tree"
        )
    return _report_for(n, k, accs[k])


def reports_for_order(n: int) -> list[ExtremalReport]:
    """Reports for every class at one order, sharing a single enumeration pass."""
    accs = _scan(n)
    predicted = {k for k in range(1, n) if is_admissible(n, k)}
    if set(accs) != predicted:
        raise DomainError(
            f"admissibility mismatch at n={n}: predicted {sorted(predicted)}, "
            f"enumerated {sorted(accs)}"
        )
    return [_report_for(n, k, accs[k]) for k in sorted(accs)]


def verify_grid(n_max: int, jobs: int = 1) -> list[ExtremalReport]:
    """Reports for every admissible class with 4 <= n <= n_max, sorted by (n, k)."""
    if not 4 <= n_max <= MAX_ENUM_ORDER:
        raise DomainError(f"need 4 <= n_max <= {MAX_ENUM_ORDER}, got {n_max}")
    orders = range(4, n_max + 1)
    if jobs > 1:
        import multiprocessing

        with multiprocessing.Pool(min(jobs, len(orders))) as pool:
            chunks = pool.map(reports_for_order, orders)
    else:
        chunks = [reports_for_order(n) for n in orders]
    return [report for chunk in chunks for report in chunk]


def _quadrant_dict(q: QuadrantReport) -> dict:
    return {
        "index": q.index.value,
        "goal": q.goal.value,
        "oracle": str(q.oracle_value.exact),
        "oracle_log2": q.oracle_value.log2,
        "oracle_sequences": [list(s) for s in q.oracle_sequences],
        "overflow": q.overflow,
        "formula": str(q.formula_value.exact),
        "formula_sequence": list(q.formula_sequence),
        "match": q.match,
    }


def reports_to_json(reports: Sequence[ExtremalReport]) -> str:
    """JSON array, one object per class, stable key order, exact values as
    decimal strings."""
    payload = [
        {
            "n": r.n,
            "k": r.k,
            "class_size": r.class_size,
            "all_match": r.all_match,
            "quadrants": [_quadrant_dict(q) for q in r.quadrants],
        }
        for r in reports
    ]
    return json.dumps(payload, indent=2)


def reports_to_csv(reports: Sequence[ExtremalReport]) -> str:
    """CSV summary: one row per quadrant."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["n", "k", "index", "goal", "oracle", "formula", "match"])
    for r in reports:
        for q in r.quadrants:
            writer.writerow(
                [r.n, r.k, q.index.value, q.goal.value,
                 q.oracle_value.exact, q.formula_value.exact, q.match]
            )
    return buf.getvalue()
