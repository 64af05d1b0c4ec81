"""Command-line front end.

Subcommands: compute (indices of input trees), construct (extremal witness),
verify (exhaustive formula check), table (closed-form bound table).

Exit codes: 0 success, 1 verification mismatch, 2 parse error, 3 domain
error.  Exact index values are serialized as decimal strings in JSON.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import oracle
from .errors import DomainError, GraphFormatError
from .extremal import ADMISSIBILITY_RULE, Goal, Index, extremal_spec, realize
from .indices import m1, m2, pi1, pi2_edge
from .trees import Tree, degree_sequence_of, max_degree_count
from .treeio import emit_edgelist, emit_graph6, parse_edgelist, parse_graph6

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_PARSE = 2
EXIT_DOMAIN = 3


def _read_input(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="ascii") as fh:
        return fh.read()


def _parse_trees(text: str) -> list[tuple[int, Tree]]:
    """Parse input as graph6 lines or as a single whole-file edge list.

    Returns (line_number, tree) pairs; raises GraphFormatError with the
    offending line number embedded in the message.
    """
    lines = [(i + 1, line.strip()) for i, line in enumerate(text.splitlines())]
    lines = [(no, line) for no, line in lines if line]
    if not lines:
        raise GraphFormatError("no input")

    def _is_pair(line: str) -> bool:
        parts = line.split()
        return len(parts) == 2 and all(p.lstrip("-").isdigit() for p in parts)

    if all(_is_pair(line) for _no, line in lines):
        try:
            return [(lines[0][0], parse_edgelist(text))]
        except GraphFormatError as exc:
            raise GraphFormatError(f"line {lines[0][0]}: {exc}") from None
    out = []
    for no, line in lines:
        try:
            out.append((no, parse_graph6(line)))
        except GraphFormatError as exc:
            raise GraphFormatError(f"line {no}: {exc}") from None
    return out


def _tree_record(t: Tree) -> dict:
    d = degree_sequence_of(t)
    delta, k = max_degree_count(t)
    v1 = pi1(d)
    v2 = pi2_edge(t)
    return {
        "n": t.n,
        "degree_sequence": list(d.degrees),
        "delta": delta,
        "k": k,
        "m1": m1(d),
        "m2": m2(t),
        "pi1": str(v1.exact),
        "pi1_log2": v1.log2,
        "pi2": str(v2.exact),
        "pi2_log2": v2.log2,
    }


def _cmd_compute(args: argparse.Namespace) -> int:
    try:
        trees = _parse_trees(_read_input(args.input))
    except GraphFormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    records = [_tree_record(t) for _no, t in trees]
    if args.format == "json":
        print(json.dumps(records, indent=2))
    else:
        header = ["n", "delta", "k", "m1", "m2", "pi1", "pi2", "degree_sequence"]
        rows = [
            [str(r["n"]), str(r["delta"]), str(r["k"]), str(r["m1"]), str(r["m2"]),
             r["pi1"], r["pi2"], "(" + ",".join(map(str, r["degree_sequence"])) + ")"]
            for r in records
        ]
        widths = [max(len(h), *(len(row[i]) for row in rows)) for i, h in enumerate(header)]
        print("  ".join(h.ljust(w) for h, w in zip(header, widths)))
        for row in rows:
            print("  ".join(cell.ljust(w) for cell, w in zip(row, widths)))
    return EXIT_OK


def _cmd_construct(args: argparse.Namespace) -> int:
    try:
        spec = extremal_spec(args.n, args.k, Index(args.index), Goal(args.goal))
    except DomainError as exc:
        print(f"error: {exc} (admissible classes: {ADMISSIBILITY_RULE})", file=sys.stderr)
        return EXIT_DOMAIN
    tree = realize(spec.sequence)
    check = pi1(degree_sequence_of(tree)) if spec.index is Index.PI1 else pi2_edge(tree)
    if check.exact != spec.bound.exact:
        print("error: witness failed internal re-verification", file=sys.stderr)
        return EXIT_MISMATCH
    if args.format == "graph6":
        print(emit_graph6(tree))
    elif args.format == "edgelist":
        print(emit_edgelist(tree))
    else:
        print(json.dumps({
            "n": args.n,
            "k": args.k,
            "index": args.index,
            "goal": args.goal,
            "delta": spec.params.delta,
            "degree_sequence": list(spec.sequence.degrees),
            "bound": str(spec.bound.exact),
            "bound_log2": spec.bound.log2,
            "graph6": emit_graph6(tree),
        }, indent=2))
    return EXIT_OK


def _cmd_verify(args: argparse.Namespace) -> int:
    try:
        reports = oracle.verify_grid(args.n_max, jobs=args.jobs)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    if args.report:
        with open(args.report, "w", encoding="ascii") as fh:
            fh.write(oracle.reports_to_json(reports))
    if args.csv:
        with open(args.csv, "w", encoding="ascii") as fh:
            fh.write(oracle.reports_to_csv(reports))
    failures = []
    for r in reports:
        status = "ok" if r.all_match else "MISMATCH"
        print(f"n={r.n} k={r.k} classes={r.class_size} {status}")
        failures.extend(
            (r.n, r.k, q.index.value, q.goal.value) for q in r.quadrants if not q.match
        )
    if failures:
        print(f"FAIL: {len(failures)} mismatching quadrants", file=sys.stderr)
        for n, k, index, goal in failures:
            print(f"  n={n} k={k} {index}/{goal}", file=sys.stderr)
        return EXIT_MISMATCH
    print(f"PASS: {len(reports)} classes verified")
    return EXIT_OK


def _cmd_table(args: argparse.Namespace) -> int:
    if args.n_from < 3 or args.n_to < args.n_from:
        print("error: need 3 <= n-from <= n-to", file=sys.stderr)
        return EXIT_DOMAIN
    rows = []
    for n in range(args.n_from, args.n_to + 1):
        ks = [k for k in range(1, n - 1) if 1 <= k <= (n - 2) // 2] + [n - 2]
        for k in ks:
            specs = {
                (i, g): extremal_spec(n, k, i, g)
                for i in (Index.PI1, Index.PI2) for g in (Goal.MIN, Goal.MAX)
            }
            rows.append([
                n, k, specs[(Index.PI1, Goal.MIN)].params.delta,
                specs[(Index.PI1, Goal.MIN)].bound.exact,
                specs[(Index.PI1, Goal.MAX)].bound.exact,
                specs[(Index.PI2, Goal.MIN)].bound.exact,
                specs[(Index.PI2, Goal.MAX)].bound.exact,
            ])
    header = ["n", "k", "delta", "pi1_min", "pi1_max", "pi2_min", "pi2_max"]
    if args.format == "csv":
        print(",".join(header))
        for row in rows:
            print(",".join(str(c) for c in row))
    else:
        cells = [[str(c) for c in row] for row in rows]
        widths = [max(len(h), *(len(r[i]) for r in cells)) for i, h in enumerate(header)]
        print("  ".join(h.rjust(w) for h, w in zip(header, widths)))
        for row in cells:
            print("  ".join(c.rjust(w) for c, w in zip(row, widths)))
    return EXIT_OK


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="zagreb",
        description="Multiplicative Zagreb indices of trees: compute, construct "
                    "extremal witnesses, verify bounds by exhaustive enumeration.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="indices of trees read from FILE or stdin")
    p.add_argument("input", nargs="?", default="-", metavar="FILE",
                   help="graph6 lines or an edge list; '-' for stdin")
    p.add_argument("--format", choices=["json", "table"], default="table")
    p.set_defaults(func=_cmd_compute)

    p = sub.add_parser("construct", help="extremal witness tree for a class")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--index", choices=["pi1", "pi2"], required=True)
    p.add_argument("--goal", choices=["min", "max"], required=True)
    p.add_argument("--format", choices=["graph6", "edgelist", "json"], default="json")
    p.set_defaults(func=_cmd_construct)

    default_jobs = int(os.environ.get("ZAGREB_JOBS", "1"))
    p = sub.add_parser("verify", help="exhaustively verify all bounds up to n-max")
    p.add_argument("--n-max", type=int, required=True, dest="n_max")
    p.add_argument("--report", metavar="PATH", help="write JSON report")
    p.add_argument("--csv", metavar="PATH", help="write CSV summary")
    p.add_argument("--jobs", type=int, default=default_jobs)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("table", help="closed-form bound table over a range of n")
    p.add_argument("--n-from", type=int, required=True, dest="n_from")
    p.add_argument("--n-to", type=int, required=True, dest="n_to")
    p.add_argument("--format", choices=["csv", "text"], default="text")
    p.set_defaults(func=_cmd_table)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
