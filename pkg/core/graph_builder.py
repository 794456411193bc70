"""
Board construction: complete k-ary trees, standard families and edge lists.
"""
import logging
from typing import Iterable, List, Optional, Sequence, Tuple

import networkx as nx

from core.errors import (
    SelfLoopError, DuplicateEdgeError, StartOutOfRangeError,
    NonDenseVertexError, GraphError, LevelsUnavailableError,
)
from models.graph import Graph, TreeSpec, VertexId

logger = logging.getLogger(__name__)

Edge = Tuple[VertexId, VertexId]


def build_complete_kary_tree(spec: TreeSpec) -> Graph:
    """
    Build the complete k-ary tree to level n, numbered breadth-first.

    Vertex 0 is the root and the start vertex; the children of ``v`` are
    ``k*v + 1 .. k*v + k``, so every level occupies a contiguous index range.
    """
    k, count = spec.k, spec.vertex_count
    adjacency: List[List[VertexId]] = [[] for _ in range(count)]
    level_of = [0] * count
    for child in range(1, count):
        parent = (child - 1) // k
        adjacency[parent].append(child)
        adjacency[child].append(parent)
        level_of[child] = level_of[parent] + 1
    logger.debug("Built %s with %d vertices", spec.label(), count)
    return Graph(
        vertex_count=count,
        adjacency=tuple(tuple(sorted(n)) for n in adjacency),
        start=0,
        level_of=tuple(level_of),
        name=spec.label(),
    )


def from_edge_list(
    edges: Iterable[Edge],
    start: VertexId,
    vertex_count: Optional[int] = None,
    name: str = "",
) -> Graph:
    """
    Build a canonical board from undirected edges.

    Args:
        edges: (u, v) pairs; each undirected edge listed once
        start: start vertex
        vertex_count: declared number of vertices; required for the edgeless
            single vertex, otherwise inferred from the largest index

    Raises:
        SelfLoopError, DuplicateEdgeError, StartOutOfRangeError,
        NonDenseVertexError, DisconnectedGraphError
    """
    edges = list(edges)
    seen = set()
    used = set()
    for u, v in edges:
        if u < 0 or v < 0:
            raise GraphError(f"negative vertex index in edge ({u}, {v})")
        if u == v:
            raise SelfLoopError(f"self-loop at vertex {u}")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise DuplicateEdgeError(f"edge {key[0]}-{key[1]} listed more than once")
        seen.add(key)
        used.update(key)

    if vertex_count is None:
        if not edges:
            raise GraphError("an empty edge list needs a declared vertex count")
        vertex_count = max(used) + 1
    elif used and max(used) >= vertex_count:
        raise GraphError(f"edge endpoint {max(used)} exceeds declared vertex count {vertex_count}")

    if not 0 <= start < vertex_count:
        raise StartOutOfRangeError(f"start vertex {start} outside [0, {vertex_count})")
    if vertex_count > 1:
        missing = sorted(set(range(vertex_count)) - used)
        if missing:
            raise NonDenseVertexError(f"vertex {missing[0]} has no edges")

    adjacency: List[List[VertexId]] = [[] for _ in range(vertex_count)]
    for u, v in seen:
        adjacency[u].append(v)
        adjacency[v].append(u)
    return Graph(
        vertex_count=vertex_count,
        adjacency=tuple(tuple(sorted(n)) for n in adjacency),
        start=start,
        name=name,
    )


def edges_of(g: Graph) -> List[Edge]:
    """Sorted (u, v) pairs with u < v."""
    return [(v, u) for v in g.vertices() for u in g.adjacency[v] if v < u]


def degree(g: Graph, v: VertexId) -> int:
    return g.degree(v)


def single_vertex() -> Graph:
    return Graph(vertex_count=1, adjacency=((),), start=0, level_of=(0,), name="single")


def path_graph(m: int, start: VertexId = 0) -> Graph:
    """Path 0-1-...-(m-1)."""
    if m == 1:
        return with_start(single_vertex(), start)
    return from_edge_list([(i, i + 1) for i in range(m - 1)], start, name=f"path_{m}")


def cycle_graph(m: int, start: VertexId = 0) -> Graph:
    if m < 3:
        raise GraphError(f"a simple cycle needs at least 3 vertices, got {m}")
    edges = [(i, (i + 1) % m) for i in range(m)]
    return from_edge_list(edges, start, name=f"cycle_{m}")


def complete_graph(m: int, start: VertexId = 0) -> Graph:
    if m == 1:
        return with_start(single_vertex(), start)
    edges = [(u, v) for u in range(m) for v in range(u + 1, m)]
    return from_edge_list(edges, start, name=f"complete_{m}")


def with_start(g: Graph, start: VertexId) -> Graph:
    """Same board, different start vertex."""
    return Graph(
        vertex_count=g.vertex_count,
        adjacency=g.adjacency,
        start=start,
        level_of=g.level_of,
        name=g.name,
    )


def vertices_at_level(g: Graph, level: int) -> Sequence[VertexId]:
    """All vertices at the given depth of a generated tree."""
    if not g.has_levels:
        raise LevelsUnavailableError(f"board {g.get_display_name()} has no levels")
    return [v for v in g.vertices() if g.level_of[v] == level]


def from_networkx(nx_graph: nx.Graph, start: VertexId = 0, name: str = "") -> Graph:
    """
    Convert a networkx graph whose nodes are the integers 0..m-1.
    """
    nodes = sorted(nx_graph.nodes())
    if nodes != list(range(len(nodes))):
        raise NonDenseVertexError("networkx nodes must be the integers 0..m-1")
    return from_edge_list(list(nx_graph.edges()), start, vertex_count=len(nodes), name=name)
