"""
Exact arithmetic in Q(sqrt 2): numbers (a + b*sqrt2) / d with integer a, b
and positive integer d.
"""
from dataclasses import dataclass
from decimal import Decimal, localcontext
from fractions import Fraction
from math import gcd
from typing import Union

Operand = Union['RootTwoNumber', int, Fraction]

FLOAT_PRECISION = 60


@dataclass(frozen=True)
class RootTwoNumber:
    """
    Canonical form: gcd(a, b, d) == 1 and d > 0, so equality of values is
    equality of components.
    """
    a: int
    b: int = 0
    d: int = 1

    def __post_init__(self):
        if self.d == 0:
            raise ZeroDivisionError("denominator must be nonzero")
        a, b, d = self.a, self.b, self.d
        if d < 0:
            a, b, d = -a, -b, -d
        g = gcd(gcd(a, b), d)
        if g > 1:
            a, b, d = a // g, b // g, d // g
        object.__setattr__(self, 'a', a)
        object.__setattr__(self, 'b', b)
        object.__setattr__(self, 'd', d)

    @classmethod
    def from_fraction(cls, value: Union[int, Fraction]) -> 'RootTwoNumber':
        value = Fraction(value)
        return cls(value.numerator, 0, value.denominator)

    @classmethod
    def coerce(cls, value: Operand) -> 'RootTwoNumber':
        if isinstance(value, RootTwoNumber):
            return value
        if isinstance(value, (int, Fraction)):
            return cls.from_fraction(value)
        raise TypeError(f"cannot use {type(value).__name__} as a RootTwoNumber")

    # Ring operations

    def __add__(self, other: Operand) -> 'RootTwoNumber':
        o = self.coerce(other)
        return RootTwoNumber(self.a * o.d + o.a * self.d, self.b * o.d + o.b * self.d, self.d * o.d)

    __radd__ = __add__

    def __neg__(self) -> 'RootTwoNumber':
        return RootTwoNumber(-self.a, -self.b, self.d)

    def __sub__(self, other: Operand) -> 'RootTwoNumber':
        return self + (-self.coerce(other))

    def __rsub__(self, other: Operand) -> 'RootTwoNumber':
        return self.coerce(other) - self

    def __mul__(self, other: Operand) -> 'RootTwoNumber':
        o = self.coerce(other)
        return RootTwoNumber(
            self.a * o.a + 2 * self.b * o.b,
            self.a * o.b + self.b * o.a,
            self.d * o.d,
        )

    __rmul__ = __mul__

    def conjugate(self) -> 'RootTwoNumber':
        return RootTwoNumber(self.a, -self.b, self.d)

    def norm(self) -> Fraction:
        """(a^2 - 2 b^2) / d^2, the product with the conjugate."""
        return Fraction(self.a * self.a - 2 * self.b * self.b, self.d * self.d)

    def inverse(self) -> 'RootTwoNumber':
        if self.is_zero():
            raise ZeroDivisionError("division by zero in Q(sqrt 2)")
        # 1/x = conj(x) / norm(x); sqrt 2 is irrational so norm(x) != 0
        n = self.a * self.a - 2 * self.b * self.b
        return RootTwoNumber(self.a * self.d, -self.b * self.d, n)

    def __truediv__(self, other: Operand) -> 'RootTwoNumber':
        return self * self.coerce(other).inverse()

    def __rtruediv__(self, other: Operand) -> 'RootTwoNumber':
        return self.coerce(other) * self.inverse()

    def __pow__(self, exponent: int) -> 'RootTwoNumber':
        if not isinstance(exponent, int):
            return NotImplemented
        base = self if exponent >= 0 else self.inverse()
        result = RootTwoNumber(1)
        e = abs(exponent)
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    # Inspection

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    def is_rational(self) -> bool:
        return self.b == 0

    def rational_part(self) -> Fraction:
        return Fraction(self.a, self.d)

    def root_part(self) -> Fraction:
        return Fraction(self.b, self.d)

    def to_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is irrational")
        return self.rational_part()

    def sign(self) -> int:
        """Exact sign of a + b*sqrt2 (d > 0)."""
        a, b = self.a, self.b
        if a >= 0 and b >= 0:
            return 0 if a == 0 and b == 0 else 1
        if a <= 0 and b <= 0:
            return -1
        # Opposite signs: compare a^2 with 2 b^2
        if a > 0:
            return 1 if a * a > 2 * b * b else -1
        return 1 if 2 * b * b > a * a else -1

    def __abs__(self) -> 'RootTwoNumber':
        return -self if self.sign() < 0 else self

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = RootTwoNumber.from_fraction(other)
        if not isinstance(other, RootTwoNumber):
            return NotImplemented
        return (self.a, self.b, self.d) == (other.a, other.b, other.d)

    def __hash__(self) -> int:
        return hash((self.a, self.b, self.d))

    def __lt__(self, other: Operand) -> bool:
        return (self - other).sign() < 0

    def __le__(self, other: Operand) -> bool:
        return (self - other).sign() <= 0

    def __gt__(self, other: Operand) -> bool:
        return (self - other).sign() > 0

    def __ge__(self, other: Operand) -> bool:
        return (self - other).sign() >= 0

    def to_decimal(self, precision: int = FLOAT_PRECISION) -> Decimal:
        # Extra digits cover cancellation between a and b*sqrt2
        digits = len(str(max(abs(self.a), abs(self.b), 1)))
        with localcontext() as ctx:
            ctx.prec = precision + digits
            return (Decimal(self.a) + Decimal(self.b) * Decimal(2).sqrt()) / Decimal(self.d)

    def __float__(self) -> float:
        return float(self.to_decimal())

    def __str__(self) -> str:
        if self.b == 0:
            body = f"{self.a}"
        elif self.a == 0:
            body = f"{self.b}*sqrt2"
        else:
            body = f"{self.a} {'+' if self.b > 0 else '-'} {abs(self.b)}*sqrt2"
        return body if self.d == 1 else f"({body})/{self.d}"


SQRT2 = RootTwoNumber(0, 1, 1)
