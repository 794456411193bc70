"""
Game board models: the undirected graph the buck travels on and the
parameters of a complete k-ary tree.
"""
import re
from dataclasses import dataclass, field
from typing import Tuple, Optional, Dict, Any, Iterator

import networkx as nx

from core.errors import (
    DisconnectedGraphError, SelfLoopError, DuplicateEdgeError,
    StartOutOfRangeError, InvalidTreeSpecError, LevelsUnavailableError, GraphError,
)

VertexId = int

_TREE_SPEC_PATTERN = re.compile(r"^\s*k\s*=\s*(-?\d+)\s*,\s*n\s*=\s*(-?\d+)\s*$")


@dataclass(frozen=True)
class TreeSpec:
    """
    A complete k-ary tree to level n: every non-leaf has k children and all
    leaves sit at depth n.
    """
    k: int
    n: int

    def __post_init__(self):
        if isinstance(self.k, bool) or not isinstance(self.k, int) or self.k < 2:
            raise InvalidTreeSpecError(f"branching factor must be an integer >= 2, got {self.k!r}")
        if isinstance(self.n, bool) or not isinstance(self.n, int) or self.n < 0:
            raise InvalidTreeSpecError(f"levels must be an integer >= 0, got {self.n!r}")

    @property
    def vertex_count(self) -> int:
        return (self.k ** (self.n + 1) - 1) // (self.k - 1)

    @classmethod
    def parse(cls, text: str) -> 'TreeSpec':
        """Parse the command-line form ``k=2,n=1``."""
        match = _TREE_SPEC_PATTERN.match(text)
        if not match:
            raise InvalidTreeSpecError(f"expected 'k=<int>,n=<int>', got {text!r}")
        return cls(k=int(match.group(1)), n=int(match.group(2)))

    def label(self) -> str:
        return f"tree_k{self.k}_n{self.n}"


@dataclass(frozen=True)
class Graph:
    """
    Connected, simple, undirected board with a designated start vertex.

    Vertices are the dense indices ``0 .. vertex_count-1``; ``adjacency[v]``
    is the sorted tuple of neighbours of ``v``. ``level_of`` is only present
    on generated trees. Two graphs compare equal when they are the same board
    with the same start.
    """
    vertex_count: int
    adjacency: Tuple[Tuple[VertexId, ...], ...]
    start: VertexId = 0
    level_of: Optional[Tuple[int, ...]] = field(default=None, compare=False)
    name: str = field(default="", compare=False)

    def __post_init__(self):
        if self.vertex_count <= 0:
            raise GraphError("a board needs at least one vertex")
        if len(self.adjacency) != self.vertex_count:
            raise GraphError(
                f"adjacency has {len(self.adjacency)} rows for {self.vertex_count} vertices"
            )
        if not 0 <= self.start < self.vertex_count:
            raise StartOutOfRangeError(
                f"start vertex {self.start} outside [0, {self.vertex_count})"
            )
        for v, neighbours in enumerate(self.adjacency):
            if list(neighbours) != sorted(neighbours):
                raise GraphError(f"neighbours of {v} are not sorted")
            if v in neighbours:
                raise SelfLoopError(f"self-loop at vertex {v}")
            if len(set(neighbours)) != len(neighbours):
                raise DuplicateEdgeError(f"duplicate neighbour listed for vertex {v}")
            for u in neighbours:
                if not 0 <= u < self.vertex_count:
                    raise GraphError(f"neighbour {u} of {v} is not a vertex")
                if v not in self.adjacency[u]:
                    raise GraphError(f"edge {v}-{u} is not symmetric")
        if self.level_of is not None and len(self.level_of) != self.vertex_count:
            raise GraphError("level_of must list one level per vertex")
        if not nx.is_connected(self.to_networkx()):
            raise DisconnectedGraphError(
                f"board with {self.vertex_count} vertices is not connected"
            )

    def vertices(self) -> Iterator[VertexId]:
        return iter(range(self.vertex_count))

    def degree(self, v: VertexId) -> int:
        return len(self.adjacency[v])

    def neighbors(self, v: VertexId) -> Tuple[VertexId, ...]:
        return self.adjacency[v]

    @property
    def edge_count(self) -> int:
        return sum(len(n) for n in self.adjacency) // 2

    @property
    def has_levels(self) -> bool:
        return self.level_of is not None

    def level(self, v: VertexId) -> int:
        if self.level_of is None:
            raise LevelsUnavailableError(f"board {self.name or '<unnamed>'} has no levels")
        return self.level_of[v]

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(range(self.vertex_count))
        for v, neighbours in enumerate(self.adjacency):
            g.add_edges_from((v, u) for u in neighbours if v < u)
        return g

    def to_dict(self) -> Dict[str, Any]:
        return {
            'vertex_count': self.vertex_count,
            'adjacency': [list(n) for n in self.adjacency],
            'start': self.start,
            'level_of': list(self.level_of) if self.level_of is not None else None,
            'name': self.name,
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'Graph':
        level_of = data.get('level_of')
        return cls(
            vertex_count=data['vertex_count'],
            adjacency=tuple(tuple(n) for n in data['adjacency']),
            start=data.get('start', 0),
            level_of=tuple(level_of) if level_of is not None else None,
            name=data.get('name', ''),
        )

    def get_display_name(self) -> str:
        return self.name or f"graph_{self.vertex_count}v"
