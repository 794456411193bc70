"""
Exact Gauss-Jordan elimination over the rationals.

Rows are held sparsely (column -> Fraction). Pivots are found by exact
nonzero tests only: the diagonal row is used when its entry is nonzero,
otherwise the first remaining row with a nonzero entry in the pivot column
is swapped in. Columns are eliminated from the last index to the first; on
breadth-first numbered trees that eliminates leaves before their parents and
produces no fill-in during the forward pass.
"""
import logging
from fractions import Fraction
from typing import Dict, List, Optional

from core.errors import SingularMatrixError
from models.rational_matrix import RationalMatrix, ZERO

logger = logging.getLogger(__name__)

SparseRow = Dict[int, Fraction]


def _sparse_rows(m: RationalMatrix) -> List[SparseRow]:
    return [{j: x for j, x in enumerate(row) if x != 0} for row in m.array]


def _subtract_scaled(target: SparseRow, source: SparseRow, factor: Fraction) -> None:
    """target -= factor * source, dropping exact zeros."""
    for j, x in source.items():
        value = target.get(j, ZERO) - factor * x
        if value:
            target[j] = value
        else:
            target.pop(j, None)


def _choose_pivot(rows: List[SparseRow], remaining: List[int], col: int) -> Optional[int]:
    if col in remaining and rows[col].get(col):
        return col
    for i in remaining:
        if rows[i].get(col):
            return i
    return None


def solve(a: RationalMatrix, b: RationalMatrix) -> RationalMatrix:
    """
    Solve ``a @ x == b`` exactly for square ``a``.

    Raises:
        SingularMatrixError: if some column has no nonzero pivot
    """
    n = a.rows
    if a.cols != n:
        raise ValueError(f"coefficient matrix must be square, got {a.shape}")
    if b.rows != n:
        raise ValueError(f"right-hand side has {b.rows} rows, expected {n}")

    rows_a = _sparse_rows(a)
    rows_b = _sparse_rows(b)
    remaining = list(range(n))
    pivot_row_of: Dict[int, int] = {}

    for col in reversed(range(n)):
        r = _choose_pivot(rows_a, remaining, col)
        if r is None:
            raise SingularMatrixError(f"no nonzero pivot in column {col}")
        remaining.remove(r)
        pivot_row_of[col] = r

        pivot = rows_a[r][col]
        if pivot != 1:
            rows_a[r] = {j: x / pivot for j, x in rows_a[r].items()}
            rows_b[r] = {j: x / pivot for j, x in rows_b[r].items()}

        for i in range(n):
            if i == r:
                continue
            factor = rows_a[i].get(col)
            if factor:
                _subtract_scaled(rows_a[i], rows_a[r], factor)
                _subtract_scaled(rows_b[i], rows_b[r], factor)

    result = RationalMatrix.zeros(n, b.cols)
    data = result.array
    for col, r in pivot_row_of.items():
        for j, x in rows_b[r].items():
            data[col, j] = x
    logger.debug("Solved %dx%d system with %d right-hand sides", n, n, b.cols)
    return result


def invert(a: RationalMatrix) -> RationalMatrix:
    return solve(a, RationalMatrix.identity(a.rows))


def unit_vector(n: int, i: int) -> RationalMatrix:
    """Column vector e_i as an n x 1 matrix."""
    v = RationalMatrix.zeros(n, 1)
    v.array[i, 0] = Fraction(1)
    return v
