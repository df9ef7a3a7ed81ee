"""Exhaustive cross-check sweeps over building strings.

Two families of checks: every antiregular instance must give the same
independence polynomial by every applicable method, and every
{0,1}-constructable string must yield labels that pass both the threshold
verification and the interval monotonicity check.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import product
from typing import Iterator

from .hypergraph import BuildingString, antiregular_string, build_hypergraph
from .ipoly import (
    ipoly_antiregular_recurrence,
    ipoly_bruteforce,
    ipoly_k3_closed,
    ipoly_semiclosed,
    ipoly_trinks,
)
from .threshold import algorithm1_labels, check_label_monotonicity, verify_t2


def constructable_strings(k: int, n: int) -> Iterator[str]:
    """All length-n building strings with at least one dominating vertex."""
    for first in range(k, n + 1):
        head = "0" * (first - 1) + "1"
        for tail in product("01", repeat=n - first):
            yield head + "".join(tail)


def antiregular_agreement_failures(k: int, n: int) -> list[str]:
    """Cross-check every polynomial method on the antiregular instances."""
    fails = []
    variants = [False] if n < k else [False, True]
    for connected in variants:
        b = antiregular_string(n, k, connected)
        h = build_hypergraph(b)
        ref = ipoly_antiregular_recurrence(n, k, connected)
        others = {
            "brute": ipoly_bruteforce(h),
            "deletion": ipoly_trinks(h),
        }
        try:
            others["semiclosed"] = ipoly_semiclosed(n, k, connected)
        except ValueError:
            pass  # below the semi-closed validity range
        if k == 3:
            others["closed"] = ipoly_k3_closed(n, connected)
        for name, p in others.items():
            if p != ref:
                fails.append(f"k={k} n={n} connected={connected}: {name} != recurrence")
    return fails


def t2_soundness_failures(k: int, n: int) -> list[str]:
    """Label every constructable string and verify threshold + monotonicity."""
    fails = []
    for bits in constructable_strings(k, n):
        b = BuildingString(bits, k)
        lab = algorithm1_labels(b)
        if not verify_t2(build_hypergraph(b), lab).holds:
            fails.append(f"k={k} {bits}: labeling fails threshold check")
        mono = check_label_monotonicity(b, lab)
        if not mono.holds:
            fails.append(f"k={k} {bits}: monotonicity clause {mono.violated_clause}")
    return fails


@dataclass
class SweepReport:
    k_max: int
    n_max: int
    polynomial_instances: int = 0
    string_instances: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def _run_task(task: tuple[str, int, int]) -> tuple[str, int, list[str]]:
    kind, k, n = task
    if kind == "agree":
        count = 1 if n < k else 2
        return kind, count, antiregular_agreement_failures(k, n)
    count = sum(1 for _ in constructable_strings(k, n))
    return kind, count, t2_soundness_failures(k, n)


def default_workers() -> int:
    """Worker count for sweeps; NUM_WORKERS caps it."""
    workers = min(os.cpu_count() or 1, 8)
    env = os.environ.get("NUM_WORKERS")
    if env:
        workers = min(workers, max(1, int(env)))
    return workers


def run_sweep(k_max: int, n_max: int, workers: int | None = None) -> SweepReport:
    """Run both check families for every k <= k_max, n <= n_max."""
    if k_max < 2 or n_max < 1:
        raise ValueError("need k_max >= 2 and n_max >= 1")
    if workers is None:
        workers = default_workers()
    tasks = [("agree", k, n) for k in range(2, k_max + 1) for n in range(1, n_max + 1)]
    tasks += [("t2", k, n) for k in range(2, k_max + 1) for n in range(k, n_max + 1)]
    report = SweepReport(k_max, n_max)
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_run_task, tasks, chunksize=4))
    else:
        results = [_run_task(t) for t in tasks]
    for kind, count, fails in results:
        if kind == "agree":
            report.polynomial_instances += count
        else:
            report.string_instances += count
        report.failures.extend(fails)
    report.failures.sort()
    return report
