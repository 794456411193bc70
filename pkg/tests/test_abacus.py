"""
Tests for the Stochastic Abacus (core/abacus.py, models/chips.py).
"""
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from config.engine_config import FiringPolicyKind
from config.settings import reset_settings
from core import abacus
from core.abacus import FiringPolicy, LOWEST_INDEX, HIGHEST_INDEX, QUEUE
from core.closed_form import a_kary
from core.errors import AbacusError, CapExceededError, EmptyRunError, NotLoadedError
from core.graph_builder import build_complete_kary_tree, cycle_graph
from models.chips import ChipConfig, TerminalCounts, TraceAction, TraceStep
from models.graph import TreeSpec


# ──────────────────────────────────────────────
# Augmentation and loading
# ──────────────────────────────────────────────

class TestAugment:

    def test_outdegrees(self, level1_tree, lone_vertex, path3):
        assert abacus.augment(level1_tree).outdegree == (3, 2, 2)
        assert abacus.augment(lone_vertex).outdegree == (1,)
        assert abacus.augment(path3).outdegree == (2, 3, 2)

    def test_terminal_slots_match_vertices(self, level1_tree):
        a = abacus.augment(level1_tree)
        assert [a.terminal_of(v) for v in range(3)] == [0, 1, 2]

    def test_critical_loading(self, level1_tree):
        c = abacus.critical_loading(abacus.augment(level1_tree))
        assert c.internal == [2, 1, 1]
        assert c.terminal == [0, 0, 0]


class TestFire:

    def test_fire_returns_new_config(self, level1_tree):
        a = abacus.augment(level1_tree)
        before = ChipConfig([3, 1, 1], [0, 0, 0])
        after = abacus.fire(a, before, 0)
        assert after.internal == [0, 2, 2]
        assert after.terminal == [1, 0, 0]
        assert before.internal == [3, 1, 1]

    def test_fire_unloaded_vertex(self, level1_tree):
        a = abacus.augment(level1_tree)
        with pytest.raises(NotLoadedError):
            abacus.fire(a, abacus.critical_loading(a), 0)

    def test_is_loaded(self, level1_tree):
        a = abacus.augment(level1_tree)
        assert abacus.is_loaded(a, ChipConfig([3, 1, 1], [0, 0, 0]), 0)
        assert not abacus.is_loaded(a, ChipConfig([3, 1, 1], [0, 0, 0]), 1)


# ──────────────────────────────────────────────
# Runs
# ──────────────────────────────────────────────

class TestRun:

    def test_level1_tree(self, level1_tree):
        counts, stats = abacus.run(abacus.augment(level1_tree))
        assert counts.counts == (2, 1, 1)
        assert counts.total == 4
        assert stats.chips_added == 4

    def test_lone_vertex(self, lone_vertex):
        counts, stats = abacus.run(abacus.augment(lone_vertex))
        assert counts.counts == (1,)
        assert stats.chips_added == 1

    def test_level2_tree(self, level2_tree):
        counts, _ = abacus.run(abacus.augment(level2_tree))
        assert counts.counts == (6, 2, 2, 1, 1, 1, 1)
        assert counts.total == 14

    def test_win_probabilities(self, level1_tree):
        probs = abacus.solve(level1_tree)
        assert probs == {0: Fraction(1, 2), 1: Fraction(1, 4), 2: Fraction(1, 4)}
        assert sum(probs.values()) == 1

    def test_empty_run(self):
        with pytest.raises(EmptyRunError):
            abacus.win_probabilities(TerminalCounts((0, 0)))

    @pytest.mark.parametrize("k, n", [(2, 3), (3, 2), (2, 4)])
    def test_root_fires_equal_terminal_count(self, k, n):
        g = build_complete_kary_tree(TreeSpec(k, n))
        counts, stats = abacus.run(abacus.augment(g))
        assert stats.fires_per_vertex[0] == counts[0] == a_kary(k, n)
        assert stats.chips_added == counts.total

    def test_ends_at_critical_loading(self, small_corpus):
        for g in small_corpus:
            a = abacus.augment(g)
            machine = abacus.AbacusRun(a)
            for _ in machine.events():
                pass
            assert machine.config.internal == abacus.critical_loading(a).internal

    def test_fire_cap(self, level1_tree):
        with pytest.raises(CapExceededError):
            abacus.run(abacus.augment(level1_tree), fire_cap=1)

    def test_fire_cap_from_environment(self, level2_tree, monkeypatch):
        monkeypatch.setenv("BUCKFIRE_FIRE_CAP", "3")
        reset_settings()
        with pytest.raises(CapExceededError):
            abacus.run(abacus.augment(level2_tree))


# ──────────────────────────────────────────────
# Firing policies
# ──────────────────────────────────────────────

class TestPolicies:

    def test_parse(self):
        assert FiringPolicy.parse("lowest") == LOWEST_INDEX
        assert FiringPolicy.parse("HIGHEST") == HIGHEST_INDEX
        assert FiringPolicy.parse("queue") == QUEUE
        assert FiringPolicy.parse("random:7") == FiringPolicy(FiringPolicyKind.RANDOM, 7)
        assert FiringPolicy.random(7).describe() == "random:7"

    @pytest.mark.parametrize("text", ["bogus", "lowest:3", "random:x"])
    def test_parse_rejects(self, text):
        with pytest.raises(ValueError):
            FiringPolicy.parse(text)

    def test_deterministic_policies_agree(self, small_corpus):
        for g in small_corpus:
            a = abacus.augment(g)
            expected, _ = abacus.run(a, LOWEST_INDEX)
            for policy in (HIGHEST_INDEX, QUEUE):
                counts, _ = abacus.run(a, policy)
                assert counts == expected, (g.get_display_name(), policy.describe())

    def test_abelian_over_hundred_seeds(self):
        a = abacus.augment(build_complete_kary_tree(TreeSpec(2, 3)))
        expected, expected_stats = abacus.run(a, LOWEST_INDEX)
        for seed in range(100):
            counts, stats = abacus.run(a, FiringPolicy.random(seed))
            assert counts == expected
            assert stats.fires_per_vertex == expected_stats.fires_per_vertex

    @settings(max_examples=30, deadline=None)
    @given(seed=st.integers(min_value=0, max_value=2**32), start=st.integers(min_value=0, max_value=5))
    def test_abelian_property(self, seed, start):
        a = abacus.augment(cycle_graph(6, start=start))
        expected, _ = abacus.run(a, LOWEST_INDEX)
        counts, _ = abacus.run(a, FiringPolicy.random(seed))
        assert counts == expected


# ──────────────────────────────────────────────
# Traces
# ──────────────────────────────────────────────

GOLDEN_TRACE = [
    (TraceAction.LOAD, None, (2, 1, 1), (0, 0, 0)),
    (TraceAction.ADD, 0, (3, 1, 1), (0, 0, 0)),
    (TraceAction.FIRE, 0, (0, 2, 2), (1, 0, 0)),
    (TraceAction.FIRE, 1, (1, 0, 2), (1, 1, 0)),
    (TraceAction.FIRE, 2, (2, 0, 0), (1, 1, 1)),
    (TraceAction.ADD, 0, (3, 0, 0), (1, 1, 1)),
    (TraceAction.FIRE, 0, (0, 1, 1), (2, 1, 1)),
    (TraceAction.ADD, 0, (1, 1, 1), (2, 1, 1)),
    (TraceAction.ADD, 0, (2, 1, 1), (2, 1, 1)),
]


class TestTrace:

    def test_golden_trace(self, level1_tree):
        steps = abacus.trace_run(abacus.augment(level1_tree))
        assert [(s.action, s.vertex, s.internal, s.terminal) for s in steps] == GOLDEN_TRACE
        assert steps[0].to_text() == "Critically loaded"
        assert steps[1].to_text() == "Add 1 to 0"
        assert steps[2].to_text() == "0 fires"

    def test_lone_vertex_trace(self, lone_vertex):
        steps = abacus.trace_run(abacus.augment(lone_vertex))
        assert [(s.action, s.vertex) for s in steps] == [
            (TraceAction.LOAD, None), (TraceAction.ADD, 0), (TraceAction.FIRE, 0),
        ]

    def test_conservation_at_every_step(self, small_corpus):
        for g in small_corpus:
            a = abacus.augment(g)
            critical = sum(abacus.critical_loading(a).internal)
            added = 0
            for step in abacus.trace_run(a, QUEUE):
                if step.action is TraceAction.ADD:
                    added += 1
                assert added == (sum(step.internal) - critical) + sum(step.terminal)

    def test_replay(self, level2_tree):
        a = abacus.augment(level2_tree)
        steps = abacus.trace_run(a, HIGHEST_INDEX)
        final = abacus.replay(a, steps)
        counts, _ = abacus.run(a)
        assert tuple(final.terminal) == counts.counts

    def test_replay_detects_divergence(self, level1_tree):
        a = abacus.augment(level1_tree)
        steps = abacus.trace_run(a)
        tampered = steps[:3] + [TraceStep(TraceAction.FIRE, 1, (1, 0, 2), (9, 9, 9))] + steps[4:]
        with pytest.raises(AbacusError):
            abacus.replay(a, tampered)

    def test_step_dict_round_trip(self, level1_tree):
        step = abacus.trace_run(abacus.augment(level1_tree))[3]
        assert TraceStep.from_dict(step.to_dict()) == step
