from __future__ import annotations

from itertools import combinations

from hypothesis import strategies as st

from antiregular import BuildingString, Hypergraph


@st.composite
def building_strings(draw, min_k: int = 2, max_k: int = 5, max_n: int = 10):
    """Constructable strings with at least one dominating vertex."""
    k = draw(st.integers(min_k, max_k))
    n = draw(st.integers(k, max(max_n, k)))
    first = draw(st.integers(k, n))
    tail = draw(st.text(alphabet="01", min_size=n - first, max_size=n - first))
    return BuildingString("0" * (first - 1) + "1" + tail, k)


@st.composite
def uniform_hypergraphs(draw, min_k: int = 2, max_k: int = 4, max_n: int = 7):
    k = draw(st.integers(min_k, max_k))
    n = draw(st.integers(k, max_n))
    universe = list(combinations(range(1, n + 1), k))
    edges = draw(st.sets(st.sampled_from(universe)))
    return Hypergraph(n, frozenset(edges), k)
