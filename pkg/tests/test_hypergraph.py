from collections import Counter
from itertools import combinations
from math import comb

import pytest
from hypothesis import given, settings

from antiregular import (
    BuildingString,
    GuardExceeded,
    Hypergraph,
    antiregular_string,
    build_hypergraph,
    complement_uniform,
    degree_sequence,
    delete_vertex,
    disjoint_union,
    edgeless,
    hide_vertex,
    hypergraph_from_json,
    hypergraph_to_json,
    prune_supersets,
    recognize_zero_one_constructable,
    zykov_k_sum,
)
from conftest import building_strings

# the five-vertex k=3 connected instance and its edge set, checked by hand
FIVE_EDGES = frozenset(
    [(1, 2, 3), (1, 2, 5), (1, 3, 5), (1, 4, 5), (2, 3, 5), (2, 4, 5), (3, 4, 5)]
)


class TestBuildingString:
    def test_validation(self):
        with pytest.raises(ValueError):
            BuildingString("00102", 3)
        with pytest.raises(ValueError):
            BuildingString("", 3)
        with pytest.raises(ValueError):
            BuildingString("010", 3)  # dominating vertex too early
        with pytest.raises(ValueError):
            BuildingString("001", 1)
        assert BuildingString("001", 3).n == 3
        assert BuildingString("01", 2).dominating_positions == (2,)

    def test_antiregular_forms(self):
        assert antiregular_string(5, 3, True).bits == "00101"
        assert antiregular_string(4, 3, True).bits == "0001"
        assert antiregular_string(4, 3, False).bits == "0010"
        assert antiregular_string(2, 3, False).bits == "00"
        assert antiregular_string(6, 3, False).bits == "001010"
        assert antiregular_string(3, 2, True).bits == "001"
        assert antiregular_string(4, 2, True).bits == "0101"

    def test_antiregular_rejects_small_connected(self):
        with pytest.raises(ValueError):
            antiregular_string(2, 3, True)

    def test_is_antiregular(self):
        assert BuildingString("00101", 3).is_antiregular()
        assert BuildingString("0010", 3).is_antiregular()
        assert not BuildingString("00110", 3).is_antiregular()

    @pytest.mark.parametrize("k", [2, 3, 4, 5])
    def test_alternation_shape(self, k):
        # connected strings: leading zeros then 1(01)*; zeros k-1 or k
        for n in range(k, 15):
            bits = antiregular_string(n, k, True).bits
            z = bits.find("1")
            assert z in (k - 1, k)
            assert bits[z:] == "1" + "01" * ((n - z - 1) // 2)


class TestBuild:
    def test_five_vertex_example(self):
        h = build_hypergraph(BuildingString("00101", 3))
        assert h.n == 5 and h.k == 3
        assert h.edges == FIVE_EDGES

    def test_all_zeros_is_edgeless(self):
        h = build_hypergraph(BuildingString("000", 3))
        assert h.n == 3 and not h.edges and h.k == 3

    def test_one_dominating(self):
        h = build_hypergraph(BuildingString("0001", 4))
        assert h.edges == frozenset([(1, 2, 3, 4)])

    def test_edge_count_sums_over_dominating(self):
        b = BuildingString("0010100011101", 3)
        h = build_hypergraph(b)
        expected = sum(comb(p - 1, 2) for p in b.dominating_positions)
        assert len(h.edges) == expected

    def test_graph_case(self):
        h = build_hypergraph(BuildingString("0101", 2))
        assert h.edges == frozenset([(1, 2), (1, 4), (2, 4), (3, 4)])


class TestHypergraphType:
    def test_validation(self):
        with pytest.raises(ValueError):
            Hypergraph(3, frozenset([(1, 4)]))  # vertex out of range
        with pytest.raises(ValueError):
            Hypergraph(3, frozenset([(1, 1)]))  # repeated vertex
        with pytest.raises(ValueError):
            Hypergraph(4, frozenset([(1, 2)]), 3)  # breaks declared uniformity

    def test_edges_canonicalized(self):
        h = Hypergraph(4, frozenset([(3, 1, 2)]), 3)
        assert h.edges == frozenset([(1, 2, 3)])

    def test_json_roundtrip(self):
        h = build_hypergraph(BuildingString("00101", 3))
        again = hypergraph_from_json(hypergraph_to_json(h))
        assert again == h
        assert hypergraph_to_json(h)["edges"] == sorted(map(list, FIVE_EDGES))

    def test_json_rejects_garbage(self):
        with pytest.raises(ValueError):
            hypergraph_from_json({"n": 3})
        with pytest.raises(ValueError):
            hypergraph_from_json("[]")


class TestOperations:
    def test_complement_five_vertex(self):
        h = build_hypergraph(BuildingString("00101", 3))
        assert complement_uniform(h).edges == frozenset(
            [(1, 2, 4), (1, 3, 4), (2, 3, 4)]
        )

    def test_complement_needs_uniformity(self):
        with pytest.raises(ValueError):
            complement_uniform(Hypergraph(3, frozenset(), None))

    def test_complement_edgeless_on_k_vertices(self):
        assert complement_uniform(edgeless(3, 3)).edges == frozenset([(1, 2, 3)])

    @pytest.mark.parametrize("k", [2, 3, 4, 5])
    def test_complement_swaps_antiregular_variants(self, k):
        for n in range(k, 15):
            conn = build_hypergraph(antiregular_string(n, k, True))
            disc = build_hypergraph(antiregular_string(n, k, False))
            assert complement_uniform(conn).edges == disc.edges
            assert complement_uniform(disc).edges == conn.edges

    def test_disjoint_union_shifts_labels(self):
        h1 = build_hypergraph(BuildingString("001", 3))
        h2 = build_hypergraph(BuildingString("0001", 3))
        u = disjoint_union(h1, h2)
        assert u.n == 7
        assert u.edges == frozenset(
            [(1, 2, 3)] + [tuple(sorted(s + (7,))) for s in combinations((4, 5, 6), 2)]
        )
        assert u.k == 3

    def test_zykov_matches_single_dominating_build(self):
        one = edgeless(1, 3)
        h = zykov_k_sum(one, edgeless(3, 3), 3)
        assert h.n == 4
        assert h.edges == frozenset([(1, 2, 3), (1, 2, 4), (1, 3, 4)])
        # same shape as the four-vertex single-dominating build, up to labels
        other = build_hypergraph(BuildingString("0001", 3))
        assert sorted(degree_sequence(h)) == sorted(degree_sequence(other))

    def test_zykov_not_commutative(self):
        a, b = edgeless(2), edgeless(3)
        assert len(zykov_k_sum(a, b, 3).edges) == 6
        assert len(zykov_k_sum(b, a, 3).edges) == 3

    def test_zykov_needs_enough_vertices(self):
        with pytest.raises(ValueError):
            zykov_k_sum(edgeless(3), edgeless(1), 3)

    def test_delete_dominating_vertex(self):
        h = build_hypergraph(BuildingString("00101", 3))
        d = delete_vertex(h, 5)
        assert d.n == 4 and d.edges == frozenset([(1, 2, 3)])

    def test_delete_relabels(self):
        h = Hypergraph(4, frozenset([(1, 2, 4)]), 3)
        assert delete_vertex(h, 3).edges == frozenset([(1, 2, 3)])
        with pytest.raises(ValueError):
            delete_vertex(h, 5)

    def test_hide_unpruned_keeps_shrunken_edges(self):
        h = build_hypergraph(BuildingString("00101", 3))
        raw = hide_vertex(h, 5, prune=False)
        assert raw.edges == frozenset(
            [(1, 2, 3)] + list(combinations(range(1, 5), 2))
        )
        assert raw.k is None  # mixed sizes

    def test_hide_pruned_drops_supersets(self):
        h = build_hypergraph(BuildingString("00101", 3))
        pruned = hide_vertex(h, 5)
        assert pruned.edges == frozenset(combinations(range(1, 5), 2))
        assert pruned.k == 2

    def test_hide_can_poison(self):
        h = Hypergraph(2, frozenset([(2,), (1, 2)]), None)
        out = hide_vertex(h, 2)
        assert out.edges == frozenset([()])

    def test_prune_supersets(self):
        fam = frozenset([(1,), (1, 2), (2, 3)])
        assert prune_supersets(fam) == frozenset([(1,), (2, 3)])
        assert prune_supersets(frozenset([(), (1,)])) == frozenset([()])


class TestDegrees:
    def test_five_vertex_example(self):
        h = build_hypergraph(BuildingString("00101", 3))
        assert degree_sequence(h) == (4, 4, 4, 3, 6)

    def test_forced_string_example(self):
        h = build_hypergraph(BuildingString("000010", 4))
        assert degree_sequence(h) == (3, 3, 3, 3, 4, 0)

    @pytest.mark.parametrize("k", [3, 4, 5])
    def test_one_degree_repeats_exactly_k_times(self, k):
        # antiregular on at least k+1 vertices: a single degree value carries
        # multiplicity k, every other value appears once
        for n in range(k + 1, 15):
            for connected in (False, True):
                h = build_hypergraph(antiregular_string(n, k, connected))
                multiplicities = sorted(Counter(degree_sequence(h)).values())
                assert multiplicities == [1] * (n - k) + [k], (k, n, connected)

    def test_delete_degree_accounting(self):
        h = build_hypergraph(BuildingString("0010101", 3))
        for v in h.vertices:
            assert len(delete_vertex(h, v).edges) == len(h.edges) - h.degree(v)


class TestRecognize:
    def test_roundtrip_example(self):
        h = build_hypergraph(BuildingString("001101", 3))
        assert recognize_zero_one_constructable(h).bits == "001101"

    def test_rejects_frozen_counterexamples(self):
        four = Hypergraph(
            6,
            frozenset([(1, 2, 5, 6), (1, 3, 4, 6), (1, 3, 5, 6), (1, 4, 5, 6)]),
            4,
        )
        assert recognize_zero_one_constructable(four) is None
        tri = Hypergraph(6, frozenset([(1, 2, 3), (3, 4, 5), (1, 5, 6)]), 3)
        assert recognize_zero_one_constructable(tri) is None

    def test_needs_uniformity(self):
        with pytest.raises(ValueError):
            recognize_zero_one_constructable(Hypergraph(2, frozenset(), None))

    def test_guard(self):
        with pytest.raises(GuardExceeded):
            recognize_zero_one_constructable(edgeless(21, 3))
        assert recognize_zero_one_constructable(edgeless(21, 3), guard=False) is not None

    def test_recognition_is_label_exact(self):
        # ([3], {23}) is isomorphic to a constructable graph but not equal to
        # one: a dominating vertex 3 would also carry {1,3}.  The relabelled
        # version with the isolated vertex last is recognized.
        assert recognize_zero_one_constructable(Hypergraph(3, frozenset([(2, 3)]), 2)) is None
        b = recognize_zero_one_constructable(Hypergraph(3, frozenset([(1, 2)]), 2))
        assert b is not None and b.bits == "010"

    @given(building_strings(max_n=10))
    @settings(max_examples=60)
    def test_build_then_recognize_is_identity(self, b):
        h = build_hypergraph(b)
        again = recognize_zero_one_constructable(h)
        assert again is not None
        assert build_hypergraph(again) == h
        assert again.bits == b.bits
