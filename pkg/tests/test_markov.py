"""
Tests for the absorbing Markov chain engine (core/markov.py, core/linear_solver.py,
models/rational_matrix.py).
"""
from fractions import Fraction as F

import pytest

from core import markov
from core.errors import MalformedBlockStructureError, SingularMatrixError
from core.graph_builder import build_complete_kary_tree, cycle_graph, complete_graph, with_start
from core.linear_solver import invert, solve, unit_vector
from models.graph import TreeSpec
from models.rational_matrix import RationalMatrix, format_fraction, parse_fraction


# ──────────────────────────────────────────────
# Rational matrices
# ──────────────────────────────────────────────

class TestRationalMatrix:

    def test_format_fraction(self):
        assert format_fraction(F(1)) == "1/1"
        assert format_fraction(F(-2, 4)) == "-1/2"
        assert parse_fraction("5/8") == F(5, 8)

    def test_arithmetic_is_exact(self):
        a = RationalMatrix.from_rows([[F(1, 3), F(1, 6)], [0, 1]])
        b = RationalMatrix.identity(2)
        assert (a @ b) == a
        assert (a + a)[0, 0] == F(2, 3)
        assert (a - a) == RationalMatrix.zeros(2, 2)
        assert a.transpose()[1, 0] == F(1, 6)
        assert a.row_sums() == [F(1, 2), F(1)]

    def test_permute(self):
        a = RationalMatrix.from_rows([[1, 2], [3, 4]])
        assert a.permute([1, 0]).to_rows() == [[4, 3], [2, 1]]

    def test_json_round_trip(self):
        a = RationalMatrix.from_rows([[F(5, 8), F(1, 4)], [F(1, 8), 1]])
        data = a.to_json()
        assert data == {'rows': 2, 'cols': 2, 'entries': [["5/8", "1/4"], ["1/8", "1/1"]]}
        assert RationalMatrix.from_json(data) == a

    def test_shape_mismatch(self):
        with pytest.raises(ValueError):
            RationalMatrix.identity(2) @ RationalMatrix.identity(3)


# ──────────────────────────────────────────────
# Linear solver
# ──────────────────────────────────────────────

class TestLinearSolver:

    def test_solve_with_row_swap(self):
        a = RationalMatrix.from_rows([[0, 1], [1, 0]])
        b = RationalMatrix.from_rows([[2], [3]])
        assert solve(a, b).to_rows() == [[3], [2]]

    def test_invert(self):
        a = RationalMatrix.from_rows([[2, 1], [1, 1]])
        assert a @ invert(a) == RationalMatrix.identity(2)

    def test_singular(self):
        with pytest.raises(SingularMatrixError):
            invert(RationalMatrix.from_rows([[1, 2], [2, 4]]))

    def test_unit_vector(self):
        assert unit_vector(3, 1).to_rows() == [[0], [1], [0]]


# ──────────────────────────────────────────────
# Transition matrix
# ──────────────────────────────────────────────

class TestTransitionMatrix:

    def test_level1_tree(self, level1_tree):
        t, ordering = markov.build_transition_matrix(level1_tree)
        assert t.shape == (6, 6)
        assert ordering == [('v', 0), ('v', 1), ('v', 2), ('w', 0), ('w', 1), ('w', 2)]
        assert t.row(0) == [0, F(1, 3), F(1, 3), F(1, 3), 0, 0]
        assert t.row(1) == [F(1, 2), 0, 0, 0, F(1, 2), 0]
        assert t.row(3) == [0, 0, 0, 1, 0, 0]

    def test_rows_sum_to_one(self, small_corpus):
        for g in small_corpus:
            t, _ = markov.build_transition_matrix(g)
            assert all(s == 1 for s in t.row_sums())

    def test_partition(self, level1_tree):
        t, _ = markov.build_transition_matrix(level1_tree)
        q, r = markov.partition(t, 3)
        assert q.shape == (3, 3)
        assert r.shape == (3, 3)
        assert r[0, 0] == F(1, 3)

    def test_malformed_blocks(self, level1_tree):
        t, _ = markov.build_transition_matrix(level1_tree)
        with pytest.raises(MalformedBlockStructureError):
            markov.partition(t.with_entry(3, 0, F(1, 2)), 3)
        with pytest.raises(MalformedBlockStructureError):
            markov.partition(t, 6)


# ──────────────────────────────────────────────
# Absorption
# ──────────────────────────────────────────────

PUBLISHED_NR = [
    [F(5, 8), F(1, 4), F(1, 8)],
    [F(1, 4), F(1, 2), F(1, 4)],
    [F(1, 8), F(1, 4), F(5, 8)],
]


class TestAbsorption:

    def test_published_ordering(self, level1_tree):
        t, _ = markov.build_transition_matrix(level1_tree)
        permuted, labels = markov.permute_states(t, [1, 0, 2])
        assert labels[:3] == [('v', 1), ('v', 0), ('v', 2)]
        q, r = markov.partition(permuted, 3)
        assert markov.absorption_matrix(q, r).to_rows() == PUBLISHED_NR

    def test_fundamental_matrix(self, level2_tree):
        t, _ = markov.build_transition_matrix(level2_tree)
        q, r = markov.partition(t, level2_tree.vertex_count)
        n = markov.fundamental_matrix(q)
        assert (RationalMatrix.identity(q.rows) - q) @ n == RationalMatrix.identity(q.rows)
        assert n @ r == markov.absorption_matrix(q, r)

    def test_absorption_rows_sum_to_one(self, small_corpus):
        for g in small_corpus:
            t, _ = markov.build_transition_matrix(g)
            q, r = markov.partition(t, g.vertex_count)
            assert all(s == 1 for s in markov.absorption_matrix(q, r).row_sums())

    def test_absorption_row_matches_matrix(self, level2_tree):
        t, _ = markov.build_transition_matrix(level2_tree)
        q, r = markov.partition(t, 7)
        full = markov.absorption_matrix(q, r)
        for j in range(7):
            assert markov.absorption_row(q, r, j) == full.row(j)

    def test_win_probabilities(self, level1_tree, lone_vertex, path3):
        assert markov.win_probabilities(level1_tree) == {0: F(1, 2), 1: F(1, 4), 2: F(1, 4)}
        assert markov.win_probabilities(with_start(level1_tree, 1)) == {0: F(1, 4), 1: F(5, 8), 2: F(1, 8)}
        assert markov.win_probabilities(lone_vertex) == {0: F(1)}
        assert markov.win_probabilities(path3) == {0: F(5, 8), 1: F(1, 4), 2: F(1, 8)}

    def test_cycle_symmetry(self):
        p = markov.win_probabilities(cycle_graph(7, start=0))
        assert p[1] == p[6]
        assert p[2] == p[5]
        assert p[3] == p[4]
        assert p[0] > p[1] > p[2] > p[3]

    def test_complete_graph_symmetry(self):
        p = markov.win_probabilities(complete_graph(5, start=2))
        others = {p[v] for v in range(5) if v != 2}
        assert len(others) == 1
        assert sum(p.values()) == 1

    def test_ternary_tree(self):
        p = markov.win_probabilities(build_complete_kary_tree(TreeSpec(3, 2)))
        assert p[0] == F(7, 22)
