"""Subset-enumeration kernel: compiled fast path with a pure-Python fallback.

The one genuinely hot loop in the package walks all 2^n subsets of the
vertex set and tests each against a list of edge bitmasks.  A Cython
version (antiregular._speedups) is built when a compiler is available;
otherwise, or when ANTIREGULAR_PURE is set, the Python twin below is used.
Both implement the same contract and are cross-checked in the test suite.
"""

from __future__ import annotations

import os
from typing import Sequence

HARD_CAP = 30  # 2^n loop; per-size counts stay far below 2^63

try:
    from . import _speedups
except ImportError:
    _speedups = None


def backend() -> str:
    """Name of the implementation independence_counts will dispatch to."""
    if _speedups is not None and not os.environ.get("ANTIREGULAR_PURE"):
        return "cython"
    return "python"


def independence_counts(n: int, masks: Sequence[int]) -> list[int]:
    """Count subsets of {0..n-1} containing no edge mask, by subset size.

    masks holds edges as bitmasks; a subset W (also a bitmask) is dependent
    when some mask e satisfies W & e == e.  The empty edge (mask 0) makes
    every subset dependent.  Returns n+1 counts indexed by popcount.
    """
    if not 0 <= n <= HARD_CAP:
        raise ValueError(f"kernel supports 0 <= n <= {HARD_CAP}")
    ordered = sorted(masks, key=lambda m: (m.bit_count(), m))
    if backend() == "cython":
        return _speedups.independence_counts(n, ordered)
    return _independence_counts_py(n, ordered)


def _independence_counts_py(n: int, masks: Sequence[int]) -> list[int]:
    counts = [0] * (n + 1)
    for w in range(1 << n):
        for e in masks:
            if w & e == e:
                break
        else:
            counts[w.bit_count()] += 1
    return counts
