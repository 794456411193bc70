"""
Tests for boards and board construction (models/graph.py, core/graph_builder.py).
"""
import networkx as nx
import pytest

from core.errors import (
    DisconnectedGraphError, SelfLoopError, DuplicateEdgeError, StartOutOfRangeError,
    NonDenseVertexError, InvalidTreeSpecError, LevelsUnavailableError, GraphError,
)
from core.graph_builder import (
    build_complete_kary_tree, from_edge_list, edges_of, degree, single_vertex,
    path_graph, cycle_graph, complete_graph, with_start, vertices_at_level, from_networkx,
)
from models.graph import Graph, TreeSpec


# ──────────────────────────────────────────────
# TreeSpec
# ──────────────────────────────────────────────

class TestTreeSpec:

    def test_parse_cli_form(self):
        assert TreeSpec.parse("k=2,n=1") == TreeSpec(2, 1)
        assert TreeSpec.parse(" k = 3 , n = 0 ") == TreeSpec(3, 0)

    @pytest.mark.parametrize("text", ["k=2", "n=1,k=2", "k=two,n=1", ""])
    def test_parse_rejects_malformed(self, text):
        with pytest.raises(InvalidTreeSpecError):
            TreeSpec.parse(text)

    @pytest.mark.parametrize("k, n", [(1, 2), (0, 0), (2, -1)])
    def test_invalid_values(self, k, n):
        with pytest.raises(InvalidTreeSpecError):
            TreeSpec(k, n)

    def test_vertex_count_and_label(self):
        assert TreeSpec(2, 2).vertex_count == 7
        assert TreeSpec(3, 2).vertex_count == 13
        assert TreeSpec(4, 0).vertex_count == 1
        assert TreeSpec(2, 1).label() == "tree_k2_n1"


# ──────────────────────────────────────────────
# Complete k-ary trees
# ──────────────────────────────────────────────

class TestKaryTree:

    def test_level_zero_is_single_vertex(self):
        g = build_complete_kary_tree(TreeSpec(2, 0))
        assert g.vertex_count == 1
        assert g.adjacency == ((),)
        assert g.start == 0

    def test_level_one_binary(self, level1_tree):
        assert level1_tree.vertex_count == 3
        assert level1_tree.adjacency == ((1, 2), (0,), (0,))
        assert level1_tree.level_of == (0, 1, 1)

    def test_ternary_level_two(self):
        g = build_complete_kary_tree(TreeSpec(3, 2))
        assert g.vertex_count == 13
        assert g.degree(0) == 3
        assert all(g.degree(v) == 4 for v in (1, 2, 3))
        assert all(g.degree(v) == 1 for v in range(4, 13))

    def test_children_are_contiguous(self):
        g = build_complete_kary_tree(TreeSpec(3, 3))
        for v in g.vertices():
            children = [u for u in g.adjacency[v] if u > v]
            if children:
                assert children == list(range(3 * v + 1, 3 * v + 4))

    @pytest.mark.parametrize("k, n", [(2, 3), (3, 2), (4, 3), (5, 1)])
    def test_tree_invariants(self, k, n):
        g = build_complete_kary_tree(TreeSpec(k, n))
        assert sum(g.degree(v) for v in g.vertices()) == 2 * (g.vertex_count - 1)
        assert len(vertices_at_level(g, n)) == k ** n
        for level in range(n + 1):
            at_level = list(vertices_at_level(g, level))
            assert at_level == list(range(at_level[0], at_level[-1] + 1))
        assert nx.is_tree(g.to_networkx())


# ──────────────────────────────────────────────
# Edge lists
# ──────────────────────────────────────────────

class TestFromEdgeList:

    def test_canonical_adjacency(self):
        g = from_edge_list([(2, 1), (0, 1)], start=1)
        assert g.adjacency == ((1,), (0, 2), (1,))
        assert g.start == 1
        assert g.level_of is None

    def test_round_trip(self, level2_tree):
        again = from_edge_list(edges_of(level2_tree), level2_tree.start)
        assert again == level2_tree
        assert again.level_of is None

    def test_edges_are_sorted_pairs(self, level1_tree):
        assert edges_of(level1_tree) == [(0, 1), (0, 2)]

    def test_lone_vertex_needs_declared_count(self):
        g = from_edge_list([], start=0, vertex_count=1)
        assert g == single_vertex()
        with pytest.raises(GraphError):
            from_edge_list([], start=0)

    def test_self_loop(self):
        with pytest.raises(SelfLoopError):
            from_edge_list([(0, 1), (1, 1)], start=0)

    @pytest.mark.parametrize("edges", [[(0, 1), (0, 1)], [(0, 1), (1, 0)]])
    def test_duplicate_edge(self, edges):
        with pytest.raises(DuplicateEdgeError):
            from_edge_list(edges, start=0)

    def test_start_out_of_range(self):
        with pytest.raises(StartOutOfRangeError):
            from_edge_list([(0, 1)], start=2)

    def test_non_dense(self):
        with pytest.raises(NonDenseVertexError):
            from_edge_list([(0, 2)], start=0)

    def test_disconnected(self):
        with pytest.raises(DisconnectedGraphError):
            from_edge_list([(0, 1), (2, 3)], start=0)

    def test_errors_are_value_errors(self):
        with pytest.raises(ValueError):
            from_edge_list([(0, 0)], start=0)


# ──────────────────────────────────────────────
# Graph model
# ──────────────────────────────────────────────

class TestGraph:

    def test_rejects_asymmetric_adjacency(self):
        with pytest.raises(GraphError):
            Graph(vertex_count=2, adjacency=((1,), ()), start=0)

    def test_rejects_unsorted_neighbours(self):
        with pytest.raises(GraphError):
            Graph(vertex_count=3, adjacency=((2, 1), (0,), (0,)), start=0)

    def test_degree_helpers(self, path3):
        assert degree(path3, 1) == 2
        assert path3.neighbors(1) == (0, 2)
        assert path3.edge_count == 2

    def test_level_unavailable(self, path3):
        with pytest.raises(LevelsUnavailableError):
            path3.level(0)
        with pytest.raises(LevelsUnavailableError):
            vertices_at_level(path3, 0)

    def test_dict_round_trip(self, level2_tree):
        again = Graph.from_dict(level2_tree.to_dict())
        assert again == level2_tree
        assert again.level_of == level2_tree.level_of

    def test_display_name(self, level1_tree):
        assert level1_tree.get_display_name() == "tree_k2_n1"
        assert from_edge_list([(0, 1)], 0).get_display_name() == "graph_2v"


# ──────────────────────────────────────────────
# Standard families
# ──────────────────────────────────────────────

class TestFamilies:

    def test_path(self):
        g = path_graph(4, start=3)
        assert g.adjacency == ((1,), (0, 2), (1, 3), (2,))
        assert g.start == 3

    def test_cycle(self):
        g = cycle_graph(5)
        assert all(g.degree(v) == 2 for v in g.vertices())
        with pytest.raises(GraphError):
            cycle_graph(2)

    def test_complete(self):
        g = complete_graph(5)
        assert all(g.degree(v) == 4 for v in g.vertices())
        assert g.edge_count == 10

    def test_with_start_keeps_levels(self, level2_tree):
        moved = with_start(level2_tree, 3)
        assert moved.start == 3
        assert moved.level_of == level2_tree.level_of
        assert moved != level2_tree

    def test_networkx_interop(self, level2_tree):
        again = from_networkx(level2_tree.to_networkx(), start=0)
        assert again == level2_tree
        with pytest.raises(NonDenseVertexError):
            from_networkx(nx.path_graph([1, 2, 3]))
