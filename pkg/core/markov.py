"""
Absorbing Markov chain for Pass the Buck.

States v_0..v_{m-1} (buck at vertex x, game in progress) come first, then
absorbing states w_0..w_{m-1} (vertex x has won). With absorbing states
listed last the transition matrix has the block form (Q R / 0 I), and the
absorption probabilities are N R with N = (I - Q)^-1.
"""
import logging
from fractions import Fraction
from typing import Dict, List, Sequence, Tuple

import numpy as np

from core.errors import MalformedBlockStructureError
from core.linear_solver import invert, solve, unit_vector
from models.graph import Graph, VertexId
from models.rational_matrix import RationalMatrix

logger = logging.getLogger(__name__)

StateLabel = Tuple[str, VertexId]


def build_transition_matrix(g: Graph) -> Tuple[RationalMatrix, List[StateLabel]]:
    """
    Transition matrix T (2m x 2m) and its state ordering.

    Row v_x carries 1/(deg(x)+1) to each neighbour's v state and to w_x;
    absorbing rows are identity rows.
    """
    m = g.vertex_count
    t = RationalMatrix.zeros(2 * m, 2 * m)
    data = t.array
    for x in g.vertices():
        p = Fraction(1, g.degree(x) + 1)
        for u in g.adjacency[x]:
            data[x, u] = p
        data[x, m + x] = p
        data[m + x, m + x] = Fraction(1)
    ordering = [('v', x) for x in range(m)] + [('w', x) for x in range(m)]
    logger.debug("Transition matrix for %s: %d states", g.get_display_name(), 2 * m)
    return t, ordering


def permute_states(t: RationalMatrix, vertex_order: Sequence[VertexId]) -> Tuple[RationalMatrix, List[StateLabel]]:
    """
    Reorder T so both halves follow ``vertex_order``. For the level-1 binary
    tree, ``[1, 0, 2]`` gives the v_L, v_root, v_R, w_L, w_root, w_R layout.
    """
    m = t.rows // 2
    order = list(vertex_order) + [m + x for x in vertex_order]
    labels = [('v', x) for x in vertex_order] + [('w', x) for x in vertex_order]
    return t.permute(order), labels


def partition(t: RationalMatrix, m: int) -> Tuple[RationalMatrix, RationalMatrix]:
    """
    Split T into Q (transient to transient) and R (transient to absorbing).

    Raises:
        MalformedBlockStructureError: if the absorbing rows are not (0 | I)
    """
    size = t.rows
    if t.cols != size or size - m <= 0:
        raise MalformedBlockStructureError(f"cannot split a {t.shape} matrix with {m} transient states")
    k = size - m
    lower_left = t.block(m, size, 0, m)
    lower_right = t.block(m, size, m, size)
    if not bool(np.all(lower_left.array == 0)) or lower_right != RationalMatrix.identity(k):
        raise MalformedBlockStructureError("absorbing rows are not identity rows")
    return t.block(0, m, 0, m), t.block(0, m, m, size)


def fundamental_matrix(q: RationalMatrix) -> RationalMatrix:
    """N = (I - Q)^-1; N[i][j] is the expected number of visits to j from i."""
    return invert(RationalMatrix.identity(q.rows) - q)


def absorption_matrix(q: RationalMatrix, r: RationalMatrix) -> RationalMatrix:
    """N R, computed as the solution of (I - Q) X = R."""
    return solve(RationalMatrix.identity(q.rows) - q, r)


def absorption_row(q: RationalMatrix, r: RationalMatrix, j: int) -> List[Fraction]:
    """
    Row ``j`` of N R from one transposed solve: (I - Q)^T y = e_j, row = y^T R.
    """
    n = q.rows
    y = solve((RationalMatrix.identity(n) - q).transpose(), unit_vector(n, j))
    return (y.transpose() @ r).row(0)


def win_probabilities(g: Graph) -> Dict[VertexId, Fraction]:
    """Probability that each vertex wins, starting from ``g.start``."""
    t, _ = build_transition_matrix(g)
    q, r = partition(t, g.vertex_count)
    row = absorption_row(q, r, g.start)
    return {x: row[x] for x in g.vertices()}
