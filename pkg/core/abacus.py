"""
Stochastic Abacus (Engel's algorithm) for Pass the Buck.

The board is augmented with one terminal vertex per internal vertex and
critically loaded (outdegree - 1 chips everywhere). Chips are then added to
the start vertex one at a time, and loaded vertices fire until none is
loaded, until the internal vertices return to the critical loading. Each
vertex's winning probability is its terminal count over the terminal total.
"""
import heapq
import logging
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

import numpy as np

from config.engine_config import FiringPolicyKind
from config.settings import get_settings
from core.errors import AbacusError, CapExceededError, EmptyRunError, NotLoadedError
from models.chips import AbacusGraph, ChipConfig, RunStats, TerminalCounts, TraceAction, TraceStep
from models.graph import Graph, VertexId

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class FiringPolicy:
    """Which loaded vertex fires next. ``seed`` is used by RANDOM only."""
    kind: FiringPolicyKind = FiringPolicyKind.LOWEST
    seed: Optional[int] = None

    @classmethod
    def random(cls, seed: int) -> 'FiringPolicy':
        return cls(FiringPolicyKind.RANDOM, seed)

    @classmethod
    def parse(cls, text: str) -> 'FiringPolicy':
        """Parse ``lowest``, ``highest``, ``queue`` or ``random:<seed>``."""
        name, _, seed = text.partition(':')
        kind = FiringPolicyKind(name.strip().lower())
        if kind is FiringPolicyKind.RANDOM:
            return cls(kind, int(seed) if seed else 0)
        if seed:
            raise ValueError(f"policy {name!r} takes no seed")
        return cls(kind)

    def describe(self) -> str:
        if self.kind is FiringPolicyKind.RANDOM:
            return f"random:{self.seed}"
        return self.kind.value


LOWEST_INDEX = FiringPolicy(FiringPolicyKind.LOWEST)
HIGHEST_INDEX = FiringPolicy(FiringPolicyKind.HIGHEST)
QUEUE = FiringPolicy(FiringPolicyKind.QUEUE)


class _ReadySet:
    """Loaded vertices waiting to fire; each vertex is held at most once."""

    def __init__(self, policy: FiringPolicy, vertex_count: int):
        self.kind = policy.kind
        self.held = [False] * vertex_count
        self.items: List[int] = []
        self.fifo: deque = deque()
        self.rng = np.random.default_rng(policy.seed) if policy.kind is FiringPolicyKind.RANDOM else None

    def push(self, v: VertexId) -> None:
        if self.held[v]:
            return
        self.held[v] = True
        if self.kind is FiringPolicyKind.LOWEST:
            heapq.heappush(self.items, v)
        elif self.kind is FiringPolicyKind.HIGHEST:
            heapq.heappush(self.items, -v)
        elif self.kind is FiringPolicyKind.QUEUE:
            self.fifo.append(v)
        else:
            self.items.append(v)

    def pop(self) -> VertexId:
        if self.kind is FiringPolicyKind.LOWEST:
            v = heapq.heappop(self.items)
        elif self.kind is FiringPolicyKind.HIGHEST:
            v = -heapq.heappop(self.items)
        elif self.kind is FiringPolicyKind.QUEUE:
            v = self.fifo.popleft()
        else:
            i = int(self.rng.integers(len(self.items)))
            self.items[i], self.items[-1] = self.items[-1], self.items[i]
            v = self.items.pop()
        self.held[v] = False
        return v

    def __bool__(self) -> bool:
        return bool(self.items) or bool(self.fifo)


def augment(g: Graph) -> AbacusGraph:
    """Augment a board with terminal vertices."""
    return AbacusGraph(base=g, outdegree=tuple(g.degree(v) + 1 for v in g.vertices()))


def critical_loading(a: AbacusGraph) -> ChipConfig:
    """outdegree - 1 chips on every internal vertex, empty terminals."""
    return ChipConfig(
        internal=[d - 1 for d in a.outdegree],
        terminal=[0] * a.vertex_count,
    )


def is_loaded(a: AbacusGraph, c: ChipConfig, v: VertexId) -> bool:
    return c.internal[v] >= a.outdegree[v]


def fire_in_place(a: AbacusGraph, c: ChipConfig, v: VertexId) -> None:
    """Send one chip along every outgoing arc of ``v``, mutating ``c``."""
    if c.internal[v] < a.outdegree[v]:
        raise NotLoadedError(
            f"vertex {v} holds {c.internal[v]} chips, needs {a.outdegree[v]} to fire"
        )
    c.internal[v] -= a.outdegree[v]
    for u in a.base.adjacency[v]:
        c.internal[u] += 1
    c.terminal[a.terminal_of(v)] += 1


def fire(a: AbacusGraph, c: ChipConfig, v: VertexId) -> ChipConfig:
    """Return the configuration after ``v`` fires; ``c`` is left untouched."""
    fired = c.copy()
    fire_in_place(a, fired, v)
    return fired


class AbacusRun:
    """
    State machine for one abacus run. ``events()`` yields after the initial
    loading and after every add and fire; ``config`` and ``stats`` hold the
    live state.
    """

    def __init__(self, a: AbacusGraph, policy: FiringPolicy = LOWEST_INDEX, fire_cap: Optional[int] = None):
        self.a = a
        self.policy = policy
        self.fire_cap = fire_cap if fire_cap is not None else get_settings().fire_cap
        self.config = critical_loading(a)
        self.critical = list(self.config.internal)
        self.stats = RunStats(fires_per_vertex=[0] * a.vertex_count)

    def events(self) -> Iterator[Tuple[TraceAction, Optional[VertexId]]]:
        a, config, stats = self.a, self.config, self.stats
        outdegree, adjacency = a.outdegree, a.base.adjacency
        start = a.start
        ready = _ReadySet(self.policy, a.vertex_count)

        yield TraceAction.LOAD, None
        while True:
            config.internal[start] += 1
            stats.chips_added += 1
            yield TraceAction.ADD, start
            if config.internal[start] >= outdegree[start]:
                ready.push(start)

            while ready:
                v = ready.pop()
                fire_in_place(a, config, v)
                stats.total_fires += 1
                stats.fires_per_vertex[v] += 1
                if stats.total_fires > self.fire_cap:
                    raise CapExceededError(
                        f"abacus exceeded {self.fire_cap} fires on {a.base.get_display_name()}"
                    )
                yield TraceAction.FIRE, v
                if config.internal[v] >= outdegree[v]:
                    ready.push(v)
                for u in adjacency[v]:
                    if config.internal[u] >= outdegree[u]:
                        ready.push(u)

            # Quiescent: the run ends once the critical loading recurs.
            if config.internal == self.critical:
                return


def run(
    a: AbacusGraph,
    firing_policy: FiringPolicy = LOWEST_INDEX,
    fire_cap: Optional[int] = None,
) -> Tuple[TerminalCounts, RunStats]:
    """
    Run the abacus to recurrence.

    Returns:
        Tuple of (terminal counts, run statistics)
    """
    machine = AbacusRun(a, firing_policy, fire_cap)
    for _ in machine.events():
        pass
    counts = TerminalCounts(tuple(machine.config.terminal))
    logger.debug(
        "Abacus on %s (%s): %d chips added, %d fires, total %d",
        a.base.get_display_name(), firing_policy.describe(),
        machine.stats.chips_added, machine.stats.total_fires, counts.total,
    )
    return counts, machine.stats


def trace_run(
    a: AbacusGraph, firing_policy: FiringPolicy = LOWEST_INDEX, fire_cap: Optional[int] = None,
) -> List[TraceStep]:
    """Run the abacus and record a snapshot after every action."""
    machine = AbacusRun(a, firing_policy, fire_cap)
    steps = []
    for action, vertex in machine.events():
        steps.append(TraceStep(
            action=action,
            vertex=vertex,
            internal=tuple(machine.config.internal),
            terminal=tuple(machine.config.terminal),
        ))
    return steps


def replay(a: AbacusGraph, steps: Sequence[TraceStep]) -> ChipConfig:
    """
    Re-apply a recorded trace from the critical loading, checking every
    snapshot, and return the final configuration.
    """
    config = critical_loading(a)
    for index, step in enumerate(steps):
        if step.action is TraceAction.LOAD:
            if index != 0:
                raise AbacusError(f"LOAD may only be the first step, found at step {index}")
        elif step.action is TraceAction.ADD:
            config.internal[step.vertex] += 1
        else:
            fire_in_place(a, config, step.vertex)
        if tuple(config.internal) != step.internal or tuple(config.terminal) != step.terminal:
            raise AbacusError(f"trace diverges at step {index} ({step.to_text()})")
    return config


def win_probabilities(t: TerminalCounts) -> Dict[VertexId, Fraction]:
    """terminal[v] / total for every vertex, as reduced fractions."""
    total = t.total
    if total == 0:
        raise EmptyRunError("no chips reached a terminal vertex")
    return {v: Fraction(count, total) for v, count in enumerate(t.counts)}


def solve(
    g: Graph, firing_policy: FiringPolicy = LOWEST_INDEX, fire_cap: Optional[int] = None,
) -> Dict[VertexId, Fraction]:
    """Winning probabilities of every vertex on ``g`` by the abacus."""
    counts, _ = run(augment(g), firing_policy, fire_cap)
    return win_probabilities(counts)
