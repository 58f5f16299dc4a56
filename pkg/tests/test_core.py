"""Tests for the hypergraph data model and its structural operations."""

import math
import random

import pytest

from hyperbetti import Hypergraph
from hyperbetti.core import Properties, emit_csv, parse_csv
from hyperbetti.errors import (
    CsvFormatError,
    EmptyIdentifierError,
    InvalidAttributeError,
    NonFiniteWeightError,
    UnknownEdgeError,
    UnknownNodeError,
)

from corpus import brute_toplexes, random_hypergraph


class TestBuild:
    def test_h0_counts(self, h0):
        assert h0.num_nodes == 6
        assert h0.num_edges == 4
        assert h0.num_incidences == 9

    def test_numeric_ids_normalized(self, h0):
        assert h0.nodes == ("1", "2", "3", "4", "5", "6")
        assert h0.edge_members("A") == ("1", "2", "3")

    def test_empty(self):
        h = Hypergraph()
        assert h.num_nodes == 0 and h.num_edges == 0 and h.num_incidences == 0

    def test_duplicate_pair_collapses(self):
        h = Hypergraph([("A", 1), ("A", 1)])
        assert h.num_incidences == 1

    def test_duplicate_keeps_last_weight_and_attrs(self):
        h = Hypergraph([("A", 1, 2.0, {"x": 1}), ("A", 1, 3.0, {"y": 2})])
        inc = h.incidence("A", "1")
        assert inc.weight == 3.0
        assert dict(inc.attrs) == {"y": 2}

    def test_registered_extras(self):
        h = Hypergraph([("A", 1)], node_props={"iso": Properties()}, edge_props={"void": Properties()})
        assert h.isolated_nodes() == ("iso",)
        assert h.empty_edges() == ("void",)
        assert h.num_nodes == 2 and h.num_edges == 2

    def test_empty_identifier_rejected(self):
        with pytest.raises(EmptyIdentifierError):
            Hypergraph([("", 1)])
        with pytest.raises(EmptyIdentifierError):
            Hypergraph([("A", "   ")])

    def test_nonfinite_weight_rejected(self):
        with pytest.raises(NonFiniteWeightError):
            Hypergraph([("A", 1, math.nan)])
        with pytest.raises(NonFiniteWeightError):
            Hypergraph([("A", 1, math.inf)])
        with pytest.raises(NonFiniteWeightError):
            Hypergraph([("A", 1)], node_props={"1": Properties(weight=math.nan)})

    def test_nonscalar_attr_rejected(self):
        with pytest.raises(InvalidAttributeError):
            Hypergraph([("A", 1, 1.0, {"bad": [1, 2]})])

    def test_immutability_of_views(self, h0):
        nodes = h0.nodes
        assert isinstance(nodes, tuple)
        with pytest.raises(AttributeError):
            h0.incidence("A", "1").weight = 2.0


class TestDual:
    def test_transpose(self, h0):
        d = h0.dual()
        assert set(d.edges) == {"1", "2", "3", "4", "5", "6"}
        assert d.edge_members("2") == ("A", "B")

    def test_involution(self, h0):
        assert h0.dual().dual() == h0

    def test_involution_random(self):
        rng = random.Random(11)
        for _ in range(25):
            h = random_hypergraph(rng, metadata=True, extras=True)
            assert h.dual().dual() == h

    def test_empty(self):
        assert Hypergraph().dual() == Hypergraph()

    def test_isolated_node_becomes_empty_edge(self):
        h = Hypergraph(node_props={"x": Properties()})
        assert h.dual().empty_edges() == ("x",)


class TestToplexes:
    def test_contained_edge_excluded(self, h0):
        h = Hypergraph(list(h0.incidences) + [("E", 2), ("E", 3)])
        assert set(h.toplexes()) == {"A", "B", "C", "D"}

    def test_h0_all_maximal(self, h0):
        assert set(h0.toplexes()) == {"A", "B", "C", "D"}

    def test_single_edge(self):
        assert Hypergraph([("A", 1)]).toplexes() == ("A",)

    def test_identical_node_sets_all_returned(self):
        h = Hypergraph([("A", 1), ("A", 2), ("B", 1), ("B", 2)])
        assert set(h.toplexes()) == {"A", "B"}

    def test_matches_pairwise_subset_oracle(self):
        rng = random.Random(7)
        for _ in range(60):
            h = random_hypergraph(rng, max_nodes=8, max_edges=8, max_edge_size=5)
            assert set(h.toplexes()) == brute_toplexes(h)


class TestDegree:
    def test_examples(self, h0):
        assert h0.degree("2", s=1) == 2
        assert h0.degree("6", s=2) == 0

    def test_isolated_node(self):
        h = Hypergraph(node_props={"x": Properties()})
        assert h.degree("x") == 0

    def test_unknown_node(self, h0):
        with pytest.raises(UnknownNodeError):
            h0.degree("nope")

    def test_non_increasing_in_s(self):
        rng = random.Random(3)
        for _ in range(30):
            h = random_hypergraph(rng)
            for n in h.nodes:
                degs = [h.degree(n, s) for s in range(1, 7)]
                assert degs == sorted(degs, reverse=True)


class TestRestrict:
    def test_keep_edges(self, h0):
        r = h0.restrict(keep_edges={"A", "B"})
        assert set(r.nodes) == {"1", "2", "3", "4"}
        assert r.num_incidences == 6
        assert set(r.edges) == {"A", "B"}

    def test_full_keep_is_identity(self, h0):
        assert h0.restrict(keep_nodes=h0.nodes, keep_edges=h0.edges) == h0

    def test_empty_node_set_leaves_empty_edges(self, h0):
        r = h0.restrict(keep_nodes=set())
        assert r.num_incidences == 0
        assert r.num_nodes == 0
        assert set(r.empty_edges()) == {"A", "B", "C", "D"}

    def test_idempotent(self, h0):
        keep_n, keep_e = {"1", "2", "4"}, {"A", "C"}
        once = h0.restrict(keep_nodes=keep_n, keep_edges=keep_e)
        assert once.restrict(keep_nodes=keep_n, keep_edges=keep_e) == once

    def test_unknown_ids(self, h0):
        with pytest.raises(UnknownNodeError):
            h0.restrict(keep_nodes={"99"})
        with pytest.raises(UnknownEdgeError):
            h0.restrict(keep_edges={"Z"})

    def test_properties_survive(self):
        h = Hypergraph([("A", 1)], node_props={"1": Properties(2.0, {"c": "red"})})
        r = h.restrict(keep_edges={"A"})
        assert r.node_properties("1") == Properties(2.0, {"c": "red"})


class TestBipartite:
    def test_h0(self, h0):
        b = h0.bipartite()
        assert b.vertex_count == 10
        assert len(b.links) == 9

    def test_empty(self):
        assert Hypergraph().bipartite().vertex_count == 0

    def test_single_incidence(self):
        b = Hypergraph([("A", 1)]).bipartite()
        assert b.vertex_count == 2
        assert b.links == (("A", "1"),)

    def test_counts_match_hypergraph_random(self):
        rng = random.Random(5)
        for _ in range(20):
            h = random_hypergraph(rng, extras=True)
            b = h.bipartite()
            assert b.vertex_count == h.num_nodes + h.num_edges
            assert len(b.links) == h.num_incidences


class TestStats:
    def test_h0(self, h0):
        s = h0.stats()
        assert s["nodes"] == 6 and s["edges"] == 4 and s["incidences"] == 9
        assert s["edge_sizes"] == {1: 1, 2: 1, 3: 2}
        assert s["isolated_nodes"] == 0 and s["empty_edges"] == 0

    def test_empty(self):
        s = Hypergraph().stats()
        assert s["nodes"] == s["edges"] == s["incidences"] == 0
        assert s["edge_sizes"] == {} and s["node_degrees"] == {}

    def test_single_incidence(self):
        s = Hypergraph([("A", 1)]).stats()
        assert s["nodes"] == 1 and s["edges"] == 1


class TestCsv:
    def test_parse_with_weights(self):
        h = parse_csv("edge,node,weight\nA,1,2.5\nA,2,\nB,1,1.0\n")
        assert h.incidence("A", "1").weight == 2.5
        assert h.incidence("A", "2").weight == 1.0

    def test_parse_without_weight_column(self):
        h = parse_csv("edge,node\nA,1\nB,2\n")
        assert h.num_incidences == 2

    def test_header_required(self):
        with pytest.raises(CsvFormatError):
            parse_csv("A,1\nB,2\n")

    def test_bad_weight(self):
        with pytest.raises(CsvFormatError):
            parse_csv("edge,node,weight\nA,1,abc\n")

    def test_roundtrip_unweighted(self, h0):
        text = emit_csv(h0)
        assert text.splitlines()[0] == "edge,node"
        assert parse_csv(text) == Hypergraph(H0_ROWS)

    def test_roundtrip_weighted(self):
        h = Hypergraph([("A", 1, 2.5), ("B", 2)])
        text = emit_csv(h)
        assert "weight" in text.splitlines()[0]
        assert parse_csv(text) == h


H0_ROWS = [
    ("A", 1), ("A", 2), ("A", 3),
    ("B", 2), ("B", 3), ("B", 4),
    ("C", 4), ("C", 5),
    ("D", 6),
]
