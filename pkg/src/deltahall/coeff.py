"""Exact arithmetic in Q(sqrt(q)) for a prime q.

All v-power coefficients live here, with v = sqrt(q). Rationals are plain
:class:`fractions.Fraction` values.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Union

Rational = Fraction
Scalar = Union[int, Fraction]


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


class QuadNumber:
    """The element ``a + b*sqrt(q)`` with rational ``a``, ``b``."""

    __slots__ = ("a", "b", "q")

    def __init__(self, a: Scalar = 0, b: Scalar = 0, q: int = 2) -> None:
        self.a = Fraction(a)
        self.b = Fraction(b)
        self.q = q

    def _coerce(self, other: object) -> QuadNumber | None:
        if isinstance(other, QuadNumber):
            if other.q != self.q:
                raise ValueError(f"mismatched field contexts: sqrt({self.q}) vs sqrt({other.q})")
            return other
        if isinstance(other, (int, Fraction)):
            return QuadNumber(other, 0, self.q)
        return None

    def __add__(self, other: object) -> QuadNumber:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadNumber(self.a + o.a, self.b + o.b, self.q)

    __radd__ = __add__

    def __neg__(self) -> QuadNumber:
        return QuadNumber(-self.a, -self.b, self.q)

    def __sub__(self, other: object) -> QuadNumber:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadNumber(self.a - o.a, self.b - o.b, self.q)

    def __rsub__(self, other: object) -> QuadNumber:
        return (-self) + other

    def __mul__(self, other: object) -> QuadNumber:
        if isinstance(other, (int, Fraction)):
            return QuadNumber(self.a * other, self.b * other, self.q)
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadNumber(
            self.a * o.a + self.b * o.b * self.q,
            self.a * o.b + self.b * o.a,
            self.q,
        )

    __rmul__ = __mul__

    def conjugate(self) -> QuadNumber:
        return QuadNumber(self.a, -self.b, self.q)

    def norm(self) -> Fraction:
        return self.a * self.a - self.b * self.b * self.q

    def inv(self) -> QuadNumber:
        n = self.norm()
        if n == 0:
            # q prime: the norm vanishes only at zero
            raise ZeroDivisionError("inverse of zero in Q(sqrt(%d))" % self.q)
        return QuadNumber(self.a / n, -self.b / n, self.q)

    def __truediv__(self, other: object) -> QuadNumber:
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division by zero")
            return QuadNumber(self.a / other, self.b / other, self.q)
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inv()

    def __rtruediv__(self, other: object) -> QuadNumber:
        return QuadNumber(other, 0, self.q) / self  # type: ignore[arg-type]

    def __bool__(self) -> bool:
        return bool(self.a) or bool(self.b)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, QuadNumber):
            return self.q == other.q and self.a == other.a and self.b == other.b
        if isinstance(other, (int, Fraction)):
            return self.b == 0 and self.a == other
        return NotImplemented

    def __hash__(self) -> int:
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b, self.q))

    def is_rational(self) -> bool:
        return self.b == 0

    def __repr__(self) -> str:
        return f"QuadNumber({self.a}, {self.b}, q={self.q})"

    def __str__(self) -> str:
        if not self.b:
            return str(self.a)
        root = f"√{self.q}"
        if not self.a:
            return f"{self.b}{root}" if self.b != 1 else root
        sign = "+" if self.b > 0 else "-"
        mag = abs(self.b)
        return f"{self.a}{sign}{'' if mag == 1 else mag}{root}"

    def to_json(self) -> dict[str, str]:
        return {"a": _frac_str(self.a), "b": _frac_str(self.b)}

    @classmethod
    def from_json(cls, obj: dict[str, str], q: int) -> QuadNumber:
        return cls(Fraction(obj["a"]), Fraction(obj["b"]), q)


def _frac_str(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


@lru_cache(maxsize=None)
def vpow(n: int, q: int) -> QuadNumber:
    """v**n with v = sqrt(q); n may be negative."""
    if n % 2 == 0:
        return QuadNumber(Fraction(q) ** (n // 2), 0, q)
    return QuadNumber(0, Fraction(q) ** ((n - 1) // 2), q)


def qint(r: int, q: int) -> QuadNumber:
    """Quantum integer [r] = v^(r-1) + v^(r-3) + ... + v^(1-r)."""
    total = QuadNumber(0, 0, q)
    for k in range(r):
        total = total + vpow(r - 1 - 2 * k, q)
    return total


class VSum:
    """Accumulator for sums of ``rational * v**e`` terms.

    Splitting by exponent parity keeps the hot loops in Fraction arithmetic.
    """

    __slots__ = ("q", "even", "odd")

    def __init__(self, q: int) -> None:
        self.q = q
        self.even = Fraction(0)
        self.odd = Fraction(0)

    def add(self, weight: Scalar, exponent: int) -> None:
        if exponent % 2 == 0:
            self.even += weight * Fraction(self.q) ** (exponent // 2)
        else:
            self.odd += weight * Fraction(self.q) ** ((exponent - 1) // 2)

    def value(self) -> QuadNumber:
        return QuadNumber(self.even, self.odd, self.q)
