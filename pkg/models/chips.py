"""
Stochastic abacus state: the augmented board, chip configurations, run
results and trace rows.
"""
from dataclasses import dataclass, field, asdict
from enum import Enum
from typing import List, Dict, Any, Optional, Tuple

from models.graph import Graph, VertexId


class TraceAction(Enum):
    """What happened at one trace row."""
    LOAD = "load"
    ADD = "add"
    FIRE = "fire"


@dataclass(frozen=True)
class AbacusGraph:
    """
    Directed augmentation of a board: every undirected edge becomes two
    arcs and every internal vertex gains an arc to its own terminal vertex.
    Terminal slot ids equal the internal vertex ids.
    """
    base: Graph
    outdegree: Tuple[int, ...]

    @property
    def vertex_count(self) -> int:
        return self.base.vertex_count

    @property
    def start(self) -> VertexId:
        return self.base.start

    def terminal_of(self, v: VertexId) -> int:
        return v


@dataclass
class ChipConfig:
    """
    Chip counts on internal and terminal vertices. Python ints, so counts
    never overflow.
    """
    internal: List[int]
    terminal: List[int]

    def copy(self) -> 'ChipConfig':
        return ChipConfig(list(self.internal), list(self.terminal))

    def total(self) -> int:
        return sum(self.internal) + sum(self.terminal)

    def to_dict(self) -> Dict[str, Any]:
        return {'internal': list(self.internal), 'terminal': list(self.terminal)}


@dataclass(frozen=True)
class TerminalCounts:
    """Final terminal contents of a completed run."""
    counts: Tuple[int, ...]

    @property
    def total(self) -> int:
        return sum(self.counts)

    def __getitem__(self, v: VertexId) -> int:
        return self.counts[v]

    def __len__(self) -> int:
        return len(self.counts)


@dataclass
class RunStats:
    chips_added: int = 0
    total_fires: int = 0
    fires_per_vertex: List[int] = field(default_factory=list)

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)


@dataclass(frozen=True)
class TraceStep:
    """
    One row of an abacus trace: the action taken and the chip state after it.
    """
    action: TraceAction
    vertex: Optional[VertexId]
    internal: Tuple[int, ...]
    terminal: Tuple[int, ...]

    def to_dict(self) -> Dict[str, Any]:
        return {
            'action': self.action.value,
            'vertex': self.vertex,
            'internal': list(self.internal),
            'terminal': list(self.terminal),
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'TraceStep':
        return cls(
            action=TraceAction(data['action']),
            vertex=data.get('vertex'),
            internal=tuple(data['internal']),
            terminal=tuple(data['terminal']),
        )

    def to_text(self) -> str:
        """Human-readable comment column, as in a hand-worked table."""
        if self.action is TraceAction.LOAD:
            return "Critically loaded"
        if self.action is TraceAction.ADD:
            return f"Add 1 to {self.vertex}"
        return f"{self.vertex} fires"
