"""
Per-level chip counts for complete k-ary trees.
"""
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Any, List, NamedTuple, Tuple


@dataclass(frozen=True)
class SequenceTable:
    """
    ``values[n]`` is a(k, n), the root's terminal count on the level-n tree;
    ``totals[n]`` is t(k, n), the terminal total on that tree.
    """
    k: int
    values: Tuple[int, ...]
    totals: Tuple[int, ...]

    @property
    def n_max(self) -> int:
        return len(self.values) - 1

    def root_probability(self, n: int) -> Fraction:
        return Fraction(self.values[n], self.totals[n])

    def to_dict(self) -> Dict[str, Any]:
        return {'k': self.k, 'values': list(self.values), 'totals': list(self.totals)}


class ConvergenceRow(NamedTuple):
    n: int
    p: float
    error: float


def rows_of(table: SequenceTable) -> List[Tuple[int, int, int, Fraction]]:
    """(n, a, t, p_root) for every level in the table."""
    return [
        (n, table.values[n], table.totals[n], table.root_probability(n))
        for n in range(table.n_max + 1)
    ]
