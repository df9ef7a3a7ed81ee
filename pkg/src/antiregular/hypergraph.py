"""k-uniform hypergraphs and the binary building strings that construct them.

Vertices are labelled 1..n in construction order.  Reading a building
string left to right, bit 0 appends an isolated vertex and bit 1 appends a
dominating vertex v, adding the hyperedge {v} | S for every (k-1)-subset S
of the vertices already present.  A dominating bit therefore needs at least
k-1 predecessors, i.e. the first 1 may appear no earlier than position k.

Antiregular hypergraphs are the special case where, after the leading
zeros, isolated and dominating additions strictly alternate.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations
from math import comb

from .errors import GuardExceeded

Edge = tuple[int, ...]

RECOGNIZE_GUARD = 20


@dataclass(frozen=True)
class BuildingString:
    """A {0,1} word; position i (1-based) describes how vertex i is added."""

    bits: str
    k: int

    def __post_init__(self) -> None:
        if self.k < 2:
            raise ValueError("edge size k must be at least 2")
        if not self.bits or set(self.bits) - {"0", "1"}:
            raise ValueError("building string must be a nonempty word over {0,1}")
        first = self.bits.find("1")
        if 0 <= first < self.k - 1:
            raise ValueError(
                f"dominating vertex at position {first + 1} needs {self.k - 1} predecessors"
            )

    @property
    def n(self) -> int:
        return len(self.bits)

    def __len__(self) -> int:
        return len(self.bits)

    def __str__(self) -> str:
        return self.bits

    def bit(self, i: int) -> int:
        """Bit at 1-based position i."""
        return int(self.bits[i - 1])

    @property
    def dominating_positions(self) -> tuple[int, ...]:
        return tuple(i for i, b in enumerate(self.bits, start=1) if b == "1")

    @property
    def isolated_positions(self) -> tuple[int, ...]:
        return tuple(i for i, b in enumerate(self.bits, start=1) if b == "0")

    def is_antiregular(self) -> bool:
        """True when the word matches the alternating antiregular pattern."""
        connected = self.bits.endswith("1")
        try:
            return self.bits == antiregular_string(self.n, self.k, connected).bits
        except ValueError:
            return False


@dataclass(frozen=True)
class Hypergraph:
    """Vertex set {1..n} plus a set of hyperedges stored as sorted tuples.

    k is the declared uniformity; it stays meaningful for edgeless
    hypergraphs and is None when edge sizes are mixed.
    """

    n: int
    edges: frozenset[Edge] = frozenset()
    k: int | None = None

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError("vertex count must be nonnegative")
        norm = set()
        for e in self.edges:
            t = tuple(sorted(e))
            if len(set(t)) != len(t):
                raise ValueError(f"edge {e!r} repeats a vertex")
            if t and (t[0] < 1 or t[-1] > self.n):
                raise ValueError(f"edge {t!r} is not within 1..{self.n}")
            norm.add(t)
        object.__setattr__(self, "edges", frozenset(norm))
        if self.k is not None:
            if self.k < 1:
                raise ValueError("uniformity must be positive")
            bad = next((e for e in self.edges if len(e) != self.k), None)
            if bad is not None:
                raise ValueError(f"edge {bad!r} breaks {self.k}-uniformity")

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    def degree(self, v: int) -> int:
        return sum(1 for e in self.edges if v in e)

    def edge_masks(self) -> list[int]:
        """Edges as bitmasks (vertex v -> bit v-1), sorted small edges first."""
        masks = [sum(1 << (v - 1) for v in e) for e in self.edges]
        return sorted(masks, key=lambda m: (m.bit_count(), m))


def edgeless(n: int, k: int | None = None) -> Hypergraph:
    return Hypergraph(n, frozenset(), k)


def antiregular_string(n: int, k: int, connected: bool) -> BuildingString:
    """The building string of the antiregular hypergraph on n vertices.

    Connected form: k-1 or k leading zeros (whichever gives the right
    parity), then alternating 1(01)*.  Disconnected form on more than k
    vertices is the connected string one vertex shorter plus a trailing 0;
    on at most k vertices it is all zeros.
    """
    if n < 1:
        raise ValueError("need at least one vertex")
    if k < 2:
        raise ValueError("edge size k must be at least 2")
    if connected:
        if n < k:
            raise ValueError("a connected antiregular hypergraph needs at least k vertices")
        z = k - 1 if (n - k) % 2 == 0 else k
        bits = "0" * z + "1" + "01" * ((n - z - 1) // 2)
    elif n <= k:
        bits = "0" * n
    else:
        bits = antiregular_string(n - 1, k, True).bits + "0"
    return BuildingString(bits, k)


def build_hypergraph(b: BuildingString) -> Hypergraph:
    """Run the construction a building string encodes."""
    k = b.k
    edges: list[Edge] = []
    for pos, ch in enumerate(b.bits, start=1):
        if ch == "1":
            for s in combinations(range(1, pos), k - 1):
                edges.append(s + (pos,))
    return Hypergraph(b.n, frozenset(edges), k)


def complement_uniform(h: Hypergraph) -> Hypergraph:
    """Complement within the k-subsets of the vertex set."""
    if h.k is None:
        raise ValueError("complement needs a declared uniformity")
    universe = set(combinations(h.vertices, h.k))
    return Hypergraph(h.n, frozenset(universe - h.edges), h.k)


def disjoint_union(h1: Hypergraph, h2: Hypergraph) -> Hypergraph:
    """Place h2 after h1, shifting its vertex labels by |V(h1)|."""
    shift = h1.n
    edges = set(h1.edges)
    edges.update(tuple(v + shift for v in e) for e in h2.edges)
    if h1.k == h2.k:
        k = h1.k
    elif not h1.edges:
        k = h2.k
    elif not h2.edges:
        k = h1.k
    else:
        k = None
    return Hypergraph(h1.n + h2.n, frozenset(edges), k)


def zykov_k_sum(h1: Hypergraph, h2: Hypergraph, k: int) -> Hypergraph:
    """Disjoint union plus every k-edge meeting h1 in one vertex.

    Adds {v} | W for each vertex v of h1 and each (k-1)-subset W of V(h2).
    Not commutative: the cross edges always take their single vertex from
    the first operand.
    """
    if k < 2:
        raise ValueError("edge size k must be at least 2")
    if h2.n < k - 1:
        raise ValueError("second operand needs at least k-1 vertices")
    base = disjoint_union(h1, h2)
    cross = set(base.edges)
    for v in range(1, h1.n + 1):
        for w in combinations(range(h1.n + 1, h1.n + h2.n + 1), k - 1):
            cross.add((v,) + w)
    uniform = k if all(len(e) == k for e in cross) else None
    return Hypergraph(base.n, frozenset(cross), uniform)


def delete_vertex(h: Hypergraph, v: int) -> Hypergraph:
    """Remove v and every edge through it; higher labels shift down by one."""
    if not 1 <= v <= h.n:
        raise ValueError(f"vertex {v} not in 1..{h.n}")
    edges = frozenset(
        tuple(w - 1 if w > v else w for w in e) for e in h.edges if v not in e
    )
    return Hypergraph(h.n - 1, edges, h.k)


def hide_vertex(h: Hypergraph, v: int, prune: bool = True) -> Hypergraph:
    """Remove v from the vertex set and from each edge through it.

    Shrunken edges may collide (collapsed) or become empty (the empty edge
    is kept: it makes every subset dependent).  With prune=True edges that
    strictly contain another edge are dropped, which leaves the family of
    independent sets unchanged.
    """
    if not 1 <= v <= h.n:
        raise ValueError(f"vertex {v} not in 1..{h.n}")
    shrunk = frozenset(
        tuple(w - 1 if w > v else w for w in e if w != v) for e in h.edges
    )
    if prune:
        shrunk = prune_supersets(shrunk)
    sizes = {len(e) for e in shrunk}
    if not sizes:
        k = h.k
    elif len(sizes) == 1 and (size := sizes.pop()) > 0:
        k = size
    else:
        k = None
    return Hypergraph(h.n - 1, shrunk, k)


def prune_supersets(edges: frozenset[Edge]) -> frozenset[Edge]:
    """Drop every edge that strictly contains another edge of the family."""
    edge_set = set(edges)
    kept = set()
    for e in edges:
        # proper subsets only; sizes here stay small, so the powerset scan
        # beats pairwise containment tests
        if any(
            f in edge_set
            for size in range(len(e))
            for f in combinations(e, size)
        ):
            continue
        kept.add(e)
    return frozenset(kept)


def degree_sequence(h: Hypergraph) -> tuple[int, ...]:
    """Vertex degrees in label order 1..n."""
    counts = [0] * h.n
    for e in h.edges:
        for v in e:
            counts[v - 1] += 1
    return tuple(counts)


def recognize_zero_one_constructable(
    h: Hypergraph, guard: bool = True
) -> BuildingString | None:
    """Recover a building string for h, or None when no construction exists.

    Peels the highest-labelled vertex: it must be isolated (degree 0) or
    dominating-complete (lying in every k-subset through it).  The two
    cases are mutually exclusive once at least k vertices remain, so the
    peel is deterministic; the backtracking shape is kept for the corner
    where fewer than k vertices are left.
    """
    if h.k is None:
        raise ValueError("recognition needs a k-uniform hypergraph")
    if guard and h.n > RECOGNIZE_GUARD:
        raise GuardExceeded(
            f"recognition on {h.n} vertices exceeds the guard of {RECOGNIZE_GUARD}"
        )
    k = h.k
    bits: list[str] = []

    def peel(cur: Hypergraph) -> bool:
        if cur.n == 0:
            return True
        moves = []
        if cur.degree(cur.n) == 0:
            moves.append("0")
        if cur.n >= k and cur.degree(cur.n) == comb(cur.n - 1, k - 1):
            moves.append("1")
        for move in moves:
            bits.append(move)
            if peel(delete_vertex(cur, cur.n)):
                return True
            bits.pop()
        return False

    if peel(h):
        return BuildingString("".join(reversed(bits)), k)
    return None


# ── JSON interchange ────────────────────────────────────────────────────────


def hypergraph_to_json(h: Hypergraph) -> dict:
    return {
        "k": h.k,
        "n": h.n,
        "edges": [list(e) for e in sorted(h.edges)],
    }


def hypergraph_from_json(obj: dict | str) -> Hypergraph:
    if isinstance(obj, str):
        obj = json.loads(obj)
    if not isinstance(obj, dict):
        raise ValueError("hypergraph JSON must be an object")
    try:
        n = int(obj["n"])
        edges = frozenset(tuple(int(v) for v in e) for e in obj["edges"])
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed hypergraph JSON: {exc}") from exc
    k = obj.get("k")
    return Hypergraph(n, edges, None if k is None else int(k))
