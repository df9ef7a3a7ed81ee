"""Benchmark the compiled subset-enumeration kernel against the pure fallback.

Runs independence_counts on connected antiregular instances via both
backends, prints a timing table, and exits nonzero if the two ever
disagree.  The compiled path is skipped (with a note) when the extension
is not built.
"""

import argparse
import sys
from time import perf_counter

from antiregular.hypergraph import antiregular_string, build_hypergraph
from antiregular.kernels import _independence_counts_py, _speedups


def time_call(fn, n, masks, repeats):
    best = float("inf")
    result = None
    for _ in range(repeats):
        start = perf_counter()
        result = fn(n, masks)
        best = min(best, perf_counter() - start)
    return result, best


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--k", type=int, default=3)
    parser.add_argument(
        "--sizes", type=int, nargs="+", default=[16, 18, 20, 22],
        help="vertex counts to benchmark",
    )
    parser.add_argument("--repeats", type=int, default=3)
    args = parser.parse_args()

    if _speedups is None:
        print("compiled extension not built; nothing to compare", file=sys.stderr)
        return 0

    print(f"{'n':>4} {'edges':>7} {'python':>10} {'cython':>10} {'speedup':>8}")
    mismatched = False
    for n in args.sizes:
        h = build_hypergraph(antiregular_string(n, args.k, True))
        masks = sorted(h.edge_masks(), key=lambda m: (m.bit_count(), m))
        py_counts, py_t = time_call(_independence_counts_py, n, masks, args.repeats)
        cy_counts, cy_t = time_call(_speedups.independence_counts, n, masks, args.repeats)
        if py_counts != cy_counts:
            mismatched = True
            print(f"n={n}: BACKEND MISMATCH {py_counts} != {cy_counts}", file=sys.stderr)
        print(
            f"{n:>4} {len(masks):>7} {py_t:>9.3f}s {cy_t:>9.3f}s {py_t / cy_t:>7.1f}x"
        )
    return 1 if mismatched else 0


if __name__ == "__main__":
    sys.exit(main())
