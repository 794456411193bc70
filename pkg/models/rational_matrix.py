"""
Dense matrix of exact rationals backed by a numpy object array of Fractions.
"""
from fractions import Fraction
from typing import Any, Dict, Iterable, List, Sequence, Tuple, Union

import numpy as np

Number = Union[int, Fraction]

ZERO = Fraction(0)
ONE = Fraction(1)


def format_fraction(value: Fraction) -> str:
    """Always ``num/den``, integers included (``1/1``)."""
    value = Fraction(value)
    return f"{value.numerator}/{value.denominator}"


def parse_fraction(text: str) -> Fraction:
    return Fraction(text)


class RationalMatrix:
    """
    Immutable-by-convention rows x cols matrix of Fractions.

    Arithmetic goes through numpy's object dtype, which dispatches every
    element operation to Fraction, so no rounding ever happens.
    """

    __slots__ = ('_data',)

    def __init__(self, data: np.ndarray):
        if data.ndim != 2:
            raise ValueError(f"expected a 2-D array, got {data.ndim} dimensions")
        self._data = data

    # Constructors

    @classmethod
    def zeros(cls, rows: int, cols: int) -> 'RationalMatrix':
        return cls(np.full((rows, cols), ZERO, dtype=object))

    @classmethod
    def identity(cls, n: int) -> 'RationalMatrix':
        m = cls.zeros(n, n)
        for i in range(n):
            m._data[i, i] = ONE
        return m

    @classmethod
    def from_rows(cls, rows: Iterable[Sequence[Number]]) -> 'RationalMatrix':
        rows = [[Fraction(x) for x in row] for row in rows]
        if not rows or any(len(r) != len(rows[0]) for r in rows):
            raise ValueError("rows must be nonempty and of equal length")
        data = np.empty((len(rows), len(rows[0])), dtype=object)
        for i, row in enumerate(rows):
            for j, x in enumerate(row):
                data[i, j] = x
        return cls(data)

    # Shape and access

    @property
    def shape(self) -> Tuple[int, int]:
        return self._data.shape

    @property
    def rows(self) -> int:
        return self._data.shape[0]

    @property
    def cols(self) -> int:
        return self._data.shape[1]

    @property
    def array(self) -> np.ndarray:
        return self._data

    def __getitem__(self, key) -> Fraction:
        return self._data[key]

    def row(self, i: int) -> List[Fraction]:
        return list(self._data[i, :])

    def to_rows(self) -> List[List[Fraction]]:
        return [list(r) for r in self._data]

    def block(self, row_start: int, row_stop: int, col_start: int, col_stop: int) -> 'RationalMatrix':
        return RationalMatrix(self._data[row_start:row_stop, col_start:col_stop].copy())

    def with_entry(self, i: int, j: int, value: Number) -> 'RationalMatrix':
        data = self._data.copy()
        data[i, j] = Fraction(value)
        return RationalMatrix(data)

    # Arithmetic

    def __add__(self, other: 'RationalMatrix') -> 'RationalMatrix':
        self._check_same_shape(other)
        return RationalMatrix(self._data + other._data)

    def __sub__(self, other: 'RationalMatrix') -> 'RationalMatrix':
        self._check_same_shape(other)
        return RationalMatrix(self._data - other._data)

    def __matmul__(self, other: 'RationalMatrix') -> 'RationalMatrix':
        if self.cols != other.rows:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        return RationalMatrix(np.dot(self._data, other._data))

    def transpose(self) -> 'RationalMatrix':
        return RationalMatrix(self._data.T.copy())

    def row_sums(self) -> List[Fraction]:
        return [sum(row, ZERO) for row in self._data]

    def permute(self, order: Sequence[int]) -> 'RationalMatrix':
        """Reorder rows and columns together: new[i][j] = old[order[i]][order[j]]."""
        if sorted(order) != list(range(self.rows)) or self.rows != self.cols:
            raise ValueError("permute needs a square matrix and a full permutation")
        index = np.array(order)
        return RationalMatrix(self._data[np.ix_(index, index)].copy())

    def __eq__(self, other: Any) -> bool:
        if not isinstance(other, RationalMatrix) or self.shape != other.shape:
            return False
        return bool(np.all(self._data == other._data))

    __hash__ = None

    def __repr__(self) -> str:
        return f"RationalMatrix({self.to_string_rows()})"

    # Serialization

    def to_string_rows(self) -> List[List[str]]:
        return [[format_fraction(x) for x in row] for row in self._data]

    def to_json(self) -> Dict[str, Any]:
        return {'rows': self.rows, 'cols': self.cols, 'entries': self.to_string_rows()}

    @classmethod
    def from_json(cls, data: Dict[str, Any]) -> 'RationalMatrix':
        return cls.from_rows([[parse_fraction(x) for x in row] for row in data['entries']])

    def _check_same_shape(self, other: 'RationalMatrix') -> None:
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")
