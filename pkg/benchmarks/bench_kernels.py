"""Compare the compiled kernels against the pure-Python fallback.

Usage: python benchmarks/bench_kernels.py [--trees-n 15] [--census-n 8]
"""

import argparse
import time

from zagreb import _kernels_py

try:
    from zagreb import _speedups
except ImportError:
    _speedups = None


def timed(label, fn):
    t0 = time.perf_counter()
    result = fn()
    dt = time.perf_counter() - t0
    print(f"  {label:<14} {dt:8.3f}s  ({result})")
    return dt


def bench_trees(n):
    print(f"free_tree_parents(n={n}):")
    out = {}
    backends = {"python": _kernels_py}
    if _speedups is not None:
        backends["c"] = _speedups
    for name, mod in backends.items():
        out[name] = timed(name, lambda m=mod: sum(1 for _ in m.free_tree_parents(n)))
    return out


def bench_census(n):
    print(f"prufer_canonical_codes(n={n}), {n ** (n - 2)} labelled trees:")
    out = {}
    backends = {"python": _kernels_py}
    if _speedups is not None:
        backends["c"] = _speedups
    for name, mod in backends.items():
        out[name] = timed(name, lambda m=mod: len(m.prufer_canonical_codes(n)))
    return out


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--trees-n", type=int, default=15)
    parser.add_argument("--census-n", type=int, default=8)
    args = parser.parse_args()

    if _speedups is None:
        print("compiled extension not available; timing the fallback only")

    for bench, n in ((bench_trees, args.trees_n), (bench_census, args.census_n)):
        result = bench(n)
        if "c" in result:
            print(f"  speedup: {result['python'] / result['c']:.1f}x")


if __name__ == "__main__":
    main()
