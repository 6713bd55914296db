import json
from itertools import combinations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from graphstab import Graph, canonical_key, local_complement, neighbors
from graphstab.graphs import graph_from_dict, graph_to_dict, graph_to_dot

from strategies import graphs


class TestConstruction:
    def test_rejects_self_loop(self):
        with pytest.raises(ValueError, match="self-loop"):
            Graph.from_edges(("a", "b"), [("a", "a")])

    def test_rejects_duplicate_edge(self):
        with pytest.raises(ValueError, match="duplicate"):
            Graph.from_edges(("a", "b"), [("a", "b"), ("b", "a")])

    def test_rejects_unknown_label(self):
        with pytest.raises(ValueError, match="'c'"):
            Graph.from_edges(("a", "b"), [("a", "c")])

    def test_rejects_duplicate_names(self):
        with pytest.raises(ValueError, match="unique"):
            Graph.from_edges(("a", "a"), [])

    def test_rejects_oversize(self):
        names = tuple(f"q{i}" for i in range(33))
        with pytest.raises(ValueError, match="1..32"):
            Graph.empty(names)

    def test_positions_follow_declaration_order(self, graph_a):
        assert [q.position for q in graph_a.qubits] == [0, 1, 2, 3]
        assert graph_a.position("B1") == 2
        with pytest.raises(ValueError, match="'Q9'"):
            graph_a.position("Q9")


class TestNeighbors:
    def test_reference_cycle(self, graph_a):
        assert neighbors(graph_a, "A4") == frozenset({"A3", "B2"})

    def test_empty_graph(self):
        g = Graph.empty(("a", "b", "c"))
        assert neighbors(g, "a") == frozenset()

    def test_chorded_graph(self, graph_b):
        assert neighbors(graph_b, "A3") == frozenset({"A4", "B1", "B2"})

    def test_unknown_label(self, graph_a):
        with pytest.raises(ValueError, match="'nope'"):
            neighbors(graph_a, "nope")


class TestLocalComplement:
    def test_reference_instance(self, graph_a, graph_b):
        assert local_complement(graph_a, "A4").edges() == graph_b.edges()

    def test_isolated_vertex_is_noop(self):
        g = Graph.from_edges(("a", "b", "c"), [("a", "b")])
        assert local_complement(g, "c").edges() == g.edges()

    def test_key_changes_for_non_isolated_vertex(self, graph_a):
        # direct edge comparison backs the canonical-key claim
        comp = local_complement(graph_a, "A4")
        assert set(comp.edges()) != set(graph_a.edges())
        assert canonical_key(comp) != canonical_key(graph_a)

    @given(data=st.data(), g=graphs(max_n=8))
    def test_involution(self, data, g):
        a = data.draw(st.sampled_from(g.names))
        assert local_complement(local_complement(g, a), a).edges() == g.edges()

    @given(data=st.data(), g=graphs(max_n=8))
    def test_preserves_vertices_and_own_degree(self, data, g):
        a = data.draw(st.sampled_from(g.names))
        out = local_complement(g, a)
        assert out.names == g.names
        assert out.degree(a) == g.degree(a)
        assert neighbors(out, a) == neighbors(g, a)

    @given(data=st.data(), g=graphs(max_n=8))
    def test_toggles_exactly_the_neighborhood_pairs(self, data, g):
        a = data.draw(st.sampled_from(g.names))
        out = local_complement(g, a)
        before, after = set(g.edges()), set(out.edges())
        toggled = before ^ after
        nb = neighbors(g, a)
        assert len(toggled) == len(list(combinations(nb, 2)))
        for u, v in toggled:
            assert u in nb and v in nb


class TestCanonicalKey:
    def test_empty_graph_is_zero(self):
        assert canonical_key(Graph.empty(("a", "b", "c", "d"))) == 0

    def test_distinct_edge_sets_distinct_keys(self, graph_a, graph_b):
        assert canonical_key(graph_a) != canonical_key(graph_b)

    @given(g=graphs(max_n=6))
    def test_key_reconstructibility(self, g):
        # same labels, same edges <=> same key
        rebuilt = Graph.from_edges(g.names, g.edges())
        assert canonical_key(rebuilt) == canonical_key(g)


class TestInterchange:
    def test_json_round_trip(self, graph_a):
        data = json.loads(json.dumps(graph_to_dict(graph_a)))
        assert graph_from_dict(data).edges() == graph_a.edges()

    def test_rejects_missing_field(self):
        with pytest.raises(ValueError, match="'edges'"):
            graph_from_dict({"vertices": ["a"]})

    def test_rejects_self_loop_document(self):
        with pytest.raises(ValueError, match="self-loop"):
            graph_from_dict({"vertices": ["a", "b"], "edges": [["a", "a"]]})

    def test_rejects_duplicate_edge_document(self):
        with pytest.raises(ValueError, match="duplicate"):
            graph_from_dict({"vertices": ["a", "b"], "edges": [["a", "b"], ["b", "a"]]})

    def test_rejects_bad_pair_shape(self):
        with pytest.raises(ValueError, match=r"edges\[0\]"):
            graph_from_dict({"vertices": ["a", "b"], "edges": [["a", "b", "a"]]})

    def test_dot_lists_vertices_and_edges(self, graph_a):
        dot = graph_to_dot(graph_a)
        assert dot.startswith("graph {")
        assert "  A3;" in dot
        assert "  A3 -- A4;" in dot
        assert dot.rstrip().endswith("}")
