"""Independence polynomials of hypergraphs, by four independent routes.

I(H;x) = sum over independent sets W (subsets containing no edge) of
x^|W|.  The routes, in increasing order of structure they assume:

  * brute force          any hypergraph, subset enumeration
  * deletion recursion   any hypergraph, I(H) = I(H-v) + x I(H~v)
  * two-term recurrence  antiregular hypergraphs only
  * semi-closed form     antiregular hypergraphs, binomial bracket plus a
                         per-level correction table

All four must agree wherever more than one applies; the test suite and the
sweep command enforce that.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb

from . import kernels
from .errors import GuardExceeded
from .hypergraph import Edge, Hypergraph, prune_supersets
from .polynomial import ONE, ZERO, Poly, one_plus_x_pow

BRUTE_FORCE_GUARD = 24
TRINKS_GUARD = 40


def ipoly_bruteforce(h: Hypergraph, guard: bool = True) -> Poly:
    """Oracle method: enumerate all 2^n subsets."""
    if guard and h.n > BRUTE_FORCE_GUARD:
        raise GuardExceeded(
            f"brute force on {h.n} vertices exceeds the guard of {BRUTE_FORCE_GUARD}"
        )
    return Poly(kernels.independence_counts(h.n, h.edge_masks()))


def ipoly_trinks(h: Hypergraph, guard: bool = True, prune: bool = True) -> Poly:
    """Vertex deletion/hiding recursion, memoized on (n, edge set).

    Pivot is the highest-labelled vertex v = n, so neither branch needs to
    relabel: deletion drops the edges through v, hiding shrinks them.  With
    prune=True shrunken edge families are reduced to their containment
    minimal members first, which canonicalizes memo keys; prune=False is
    kept so the equivalence of the two is testable.
    """
    if guard and h.n > TRINKS_GUARD:
        raise GuardExceeded(
            f"deletion recursion on {h.n} vertices exceeds the guard of {TRINKS_GUARD}"
        )
    return _trinks(h.n, h.edges, prune)


@lru_cache(maxsize=None)
def _trinks(n: int, edges: frozenset[Edge], prune: bool) -> Poly:
    if () in edges:
        return ZERO  # the empty edge makes every subset dependent
    if n == 0:
        return ONE
    # edges are sorted tuples, so v = n is present exactly when e[-1] == n
    deleted = frozenset(e for e in edges if e[-1] != n)
    if (n,) in edges:
        return _trinks(n - 1, deleted, prune)
    hidden = frozenset(e[:-1] if e[-1] == n else e for e in edges)
    if prune:
        hidden = prune_supersets(hidden)
    return _trinks(n - 1, deleted, prune) + _trinks(n - 1, hidden, prune).shifted(1)


def ipoly_antiregular_recurrence(n: int, k: int, connected: bool) -> Poly:
    """Two-term recurrence along the antiregular construction.

    With f_c(m), f_d(m) the connected/disconnected polynomials on m
    vertices: both are (1+x)^m for m < k, and for m >= k

        f_d(m) = (1+x) f_c(m-1)
        f_c(m) = f_d(m-1) + sum_{i=1}^{k-1} C(m-1, i-1) x^i
    """
    if n < 1:
        raise ValueError("need at least one vertex")
    if k < 2:
        raise ValueError("edge size k must be at least 2")
    fc: dict[int, Poly] = {}
    fd: dict[int, Poly] = {}
    for m in range(n + 1):
        if m < k:
            fc[m] = fd[m] = one_plus_x_pow(m)
        else:
            fd[m] = fc[m - 1] + fc[m - 1].shifted(1)
            fc[m] = fd[m - 1] + _dominating_tail(m - 1, k)
    return fc[n] if connected else fd[n]


def _dominating_tail(m: int, k: int) -> Poly:
    """Independent sets using a fresh dominating vertex over m predecessors."""
    return Poly([0] + [comb(m, i - 1) for i in range(1, k)])


def ipoly_k3_closed(n: int, connected: bool) -> Poly:
    """Closed forms for k = 3, split by parity and connectivity."""
    if n < 1:
        raise ValueError("need at least one vertex")
    if connected:
        if n % 2:
            m = (n + 1) // 2
            return 3 * one_plus_x_pow(m) + one_plus_x_pow(m - 1) + Poly((-3, -2 * m))
        m = n // 2
        return one_plus_x_pow(m + 1) + 3 * one_plus_x_pow(m) + Poly((-3, -(2 * m + 1)))
    if n % 2 == 0:
        m = n // 2
        return (
            3 * one_plus_x_pow(m + 1)
            + one_plus_x_pow(m)
            - one_plus_x_pow(1) * Poly((3, 2 * m))
        )
    m = (n + 1) // 2
    return (
        one_plus_x_pow(m + 1)
        + 3 * one_plus_x_pow(m)
        - one_plus_x_pow(1) * Poly((3, 2 * m - 1))
    )


# ── per-level correction tables ─────────────────────────────────────────────


@dataclass(frozen=True)
class AlphaBetaTable:
    """Correction coefficients for the semi-closed forms.

    values maps (level, i) -> integer for i in 0..k-1, with level running
    over even numbers (kind "alpha", disconnected on an even vertex count)
    or odd numbers (kind "beta", disconnected on an odd vertex count).
    """

    kind: str
    k: int
    max_level: int
    values: dict[tuple[int, int], int]

    @property
    def levels(self) -> range:
        return range(self.max_level % 2, self.max_level + 1, 2)

    def value(self, level: int, i: int) -> int:
        return self.values[(level, i)]

    def row(self, level: int) -> Poly:
        """The correction polynomial sum_i values(level, i) x^i."""
        return Poly([self.values[(level, i)] for i in range(self.k)])


@lru_cache(maxsize=None)
def _correction_table(k: int, parity: int, max_level: int) -> AlphaBetaTable:
    """Solve the correction system top-down in i.

    Boundary row: value(l, k-1) = C(l, k-2) at every level l of the
    parity.  Descent: value(l, i-1) = value(l+2, i) - value(l, i)
    + C(l+1, i-1), which consumes one extra level per step, so row i is
    first computed out to max_level + 2(k-1-i) and trimmed afterwards.
    The bottom row must come out level-independent; any drift there means
    the solver itself is broken, hence the hard assertion.
    """
    if k < 2:
        raise ValueError("edge size k must be at least 2")
    if parity not in (0, 1) or max_level % 2 != parity:
        raise ValueError("level range must match the table parity")
    ext = max_level + 2 * (k - 1)
    rows: dict[int, dict[int, int]] = {
        k - 1: {l: comb(l, k - 2) for l in range(parity, ext + 1, 2)}
    }
    top = ext
    for i in range(k - 1, 0, -1):
        top -= 2
        prev = rows[i]
        rows[i - 1] = {
            l: prev[l + 2] - prev[l] + comb(l + 1, i - 1)
            for l in range(parity, top + 1, 2)
        }
    if len(set(rows[0].values())) > 1:
        raise AssertionError(
            f"bottom correction row varies across levels for k={k}: {rows[0]}"
        )
    values = {
        (l, i): rows[i][l]
        for i in range(k)
        for l in range(parity, max_level + 1, 2)
    }
    kind = "alpha" if parity == 0 else "beta"
    return AlphaBetaTable(kind, k, max_level, values)


def solve_alpha(k: int, n_max: int) -> AlphaBetaTable:
    """Even-level correction table covering levels 0..2*n_max."""
    if n_max < (k + 1) // 2:
        raise ValueError("n_max too small for the semi-closed range")
    return _correction_table(k, 0, 2 * n_max)


def solve_beta(k: int, n_max: int) -> AlphaBetaTable:
    """Odd-level correction table covering levels 1..2*n_max+1."""
    if n_max < (k + 1) // 2:
        raise ValueError("n_max too small for the semi-closed range")
    return _correction_table(k, 1, 2 * n_max + 1)


def ipoly_semiclosed(n: int, k: int, connected: bool) -> Poly:
    """Semi-closed form: binomial bracket times (1+x)-power minus a row.

    The disconnected polynomial on n vertices (n at least the anchor level,
    which is k-1 or k depending on parity) is

        (1+x)^((n - l0)/2) [ (1+x)^l0 + row(l0) ] - row(n)

    where row() is the correction table of n's parity and l0 its anchor.
    The connected polynomial adds a dominating vertex on top of the
    disconnected one a vertex earlier.
    """
    if n < 1:
        raise ValueError("need at least one vertex")
    if k < 2:
        raise ValueError("edge size k must be at least 2")
    if connected:
        return _semiclosed_disconnected(n - 1, k) + _dominating_tail(n - 1, k)
    return _semiclosed_disconnected(n, k)


def _semiclosed_disconnected(n: int, k: int) -> Poly:
    parity = n % 2
    anchor = k - 1 if (k - 1) % 2 == parity else k
    if n < anchor:
        raise ValueError(
            f"semi-closed form needs at least {anchor} vertices at this parity"
        )
    table = _correction_table(k, parity, n)
    bracket = one_plus_x_pow(anchor) + table.row(anchor)
    return one_plus_x_pow((n - anchor) // 2) * bracket - table.row(n)


# ── coefficient formulas and log-concavity ──────────────────────────────────


def coeff_formulas(k: int, n: int) -> tuple[int, int]:
    """Coefficients of x^k and x^(k+1) for the disconnected case on 2n vertices.

    Binomial sums over the dominating vertices; for k = 3 they collapse to
    cubic polynomials in n, asserted here as a cross-check.
    """
    if k < 2 or n < 0:
        raise ValueError("need k >= 2 and n >= 0")
    lo = (k + 1) // 2
    a_k = sum(comb(2 * i - 1, k - 1) for i in range(lo, n + 1))
    a_k1 = sum(comb(2 * i - 1, k - 1) * (n - i) for i in range(lo, n))
    if k == 3:
        if 6 * a_k != n * (n - 1) * (4 * n + 1):
            raise AssertionError(f"closed form for a_k disagrees at n={n}")
        if 6 * a_k1 != n * n * (n - 1) * (n - 2):
            raise AssertionError(f"closed form for a_(k+1) disagrees at n={n}")
    return a_k, a_k1


@dataclass(frozen=True)
class LogConcavityReport:
    holds: bool
    first_violation: int | None = None


def is_log_concave(p: Poly) -> LogConcavityReport:
    """Check a_i^2 >= a_(i-1) a_(i+1) at every interior index, exactly."""
    cs = p.coeffs
    for i in range(1, len(cs) - 1):
        if cs[i] * cs[i] < cs[i - 1] * cs[i + 1]:
            return LogConcavityReport(False, i)
    return LogConcavityReport(True)
