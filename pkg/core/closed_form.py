"""
Recursions and closed forms for Pass the Buck on complete k-ary trees
started at the root.

On the level-n tree the abacus deposits a(k, n - j) chips in the terminal
of every vertex at level j, where

    a(k, 0) = 1,  a(k, 1) = 2,  a(k, n) = (k + 2) a(k, n-1) - k a(k, n-2).

The total is t(k, n) = sum_j k^j a(k, n-j), and a vertex at level j wins
with probability a(k, n-j) / t(k, n). The integer recursion is the
computation path; the binary closed forms are evaluated exactly in
Q(sqrt 2) and serve as cross-checks.
"""
import logging
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Tuple

from core.errors import LevelOutOfRangeError, InvalidTreeSpecError
from core.graph_builder import build_complete_kary_tree
from models.graph import TreeSpec, VertexId
from models.root_two import RootTwoNumber, SQRT2
from models.sequence_table import SequenceTable, ConvergenceRow

logger = logging.getLogger(__name__)

TWO_PLUS_ROOT2 = RootTwoNumber(2, 1)
TWO_MINUS_ROOT2 = RootTwoNumber(2, -1)


def _check_k(k: int) -> None:
    if k < 2:
        raise InvalidTreeSpecError(f"branching factor must be >= 2, got {k}")


def _check_n(n: int) -> None:
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")


@lru_cache(maxsize=None)
def _a_values(k: int, n: int) -> Tuple[int, ...]:
    values = [1, 2]
    for _ in range(2, n + 1):
        values.append((k + 2) * values[-1] - k * values[-2])
    return tuple(values[:n + 1])


def a_kary(k: int, n: int) -> int:
    """a(k, n) by exact integer recursion."""
    _check_k(k)
    _check_n(n)
    return _a_values(k, n)[n]


def a_binary(n: int) -> int:
    """a(n) = 4 a(n-1) - 2 a(n-2), a(0) = 1, a(1) = 2."""
    return a_kary(2, n)


def t_kary(k: int, n: int) -> int:
    """Total terminal chips on the level-n k-ary tree."""
    _check_k(k)
    _check_n(n)
    values = _a_values(k, n)
    return sum(k ** j * values[n - j] for j in range(n + 1))


def t_binary(n: int) -> int:
    return t_kary(2, n)


def a_binary_closed(n: int) -> RootTwoNumber:
    """((2 - sqrt2)^n + (2 + sqrt2)^n) / 2, exactly."""
    _check_n(n)
    return (TWO_MINUS_ROOT2 ** n + TWO_PLUS_ROOT2 ** n) / 2


def t_binary_closed(n: int) -> RootTwoNumber:
    """((2 + sqrt2)^(n+1) - (2 - sqrt2)^(n+1)) / (2 sqrt2), exactly."""
    _check_n(n)
    return (TWO_PLUS_ROOT2 ** (n + 1) - TWO_MINUS_ROOT2 ** (n + 1)) / (2 * SQRT2)


def p_kary(k: int, n: int, level: int) -> Fraction:
    """Probability that a given vertex at ``level`` wins on the level-n tree."""
    _check_k(k)
    _check_n(n)
    if not 0 <= level <= n:
        raise LevelOutOfRangeError(f"level {level} outside [0, {n}]")
    return Fraction(_a_values(k, n)[n - level], t_kary(k, n))


def p_binary(n: int, level: int) -> Fraction:
    return p_kary(2, n, level)


def p_binary_closed(n: int) -> RootTwoNumber:
    """
    Root probability from the closed forms:
    sqrt2 ((2 - sqrt2)^n + (2 + sqrt2)^n) / ((2 + sqrt2)^(n+1) - (2 - sqrt2)^(n+1)).
    """
    _check_n(n)
    numerator = SQRT2 * (TWO_MINUS_ROOT2 ** n + TWO_PLUS_ROOT2 ** n)
    denominator = TWO_PLUS_ROOT2 ** (n + 1) - TWO_MINUS_ROOT2 ** (n + 1)
    return numerator / denominator


def limit_p_binary(level: int) -> RootTwoNumber:
    """
    Limit of p(n, level) as n grows: sqrt2 / (2 + sqrt2)^(level+1).
    Level 0 gives sqrt2 - 1.
    """
    if level < 0:
        raise LevelOutOfRangeError(f"level must be nonnegative, got {level}")
    return SQRT2 / TWO_PLUS_ROOT2 ** (level + 1)


def level_probabilities(k: int, n: int) -> Dict[VertexId, Fraction]:
    """Winning probability of every vertex of the breadth-first numbered tree."""
    tree = build_complete_kary_tree(TreeSpec(k, n))
    by_level = [p_kary(k, n, level) for level in range(n + 1)]
    return {v: by_level[tree.level_of[v]] for v in tree.vertices()}


def convergence_report(n_max: int, level: int = 0) -> List[ConvergenceRow]:
    """
    (n, p(n, level), |p(n, level) - limit|) for n = level .. n_max. The
    error is computed exactly and rounded only when rendered to float.
    """
    if not 0 <= level <= n_max:
        raise LevelOutOfRangeError(f"level {level} outside [0, {n_max}]")
    limit = limit_p_binary(level)
    rows = []
    for n in range(level, n_max + 1):
        p = p_binary(n, level)
        error = abs(RootTwoNumber.from_fraction(p) - limit)
        rows.append(ConvergenceRow(n=n, p=float(p), error=float(error)))
    return rows


@lru_cache(maxsize=64)
def sequence_table(k: int, n_max: int) -> SequenceTable:
    """a(k, n) and t(k, n) for n = 0 .. n_max."""
    _check_k(k)
    _check_n(n_max)
    values = _a_values(k, n_max)
    totals = tuple(t_kary(k, n) for n in range(n_max + 1))
    logger.debug("Sequence table k=%d up to n=%d", k, n_max)
    return SequenceTable(k=k, values=values, totals=totals)
