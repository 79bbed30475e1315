"""Exact rational exponents t with their p-adic shape t = u'/(p^b (p^c − 1))."""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Union

from ..errors import FjumpError

__all__ = ["TRational", "multiplicative_order"]

RationalLike = Union["TRational", Fraction, int, str]


def multiplicative_order(p: int, n: int) -> int:
    """Least c >= 1 with p^c ≡ 1 (mod n); n = 1 gives 1."""
    if n < 1 or gcd(p, n) != 1:
        raise ValueError(f"order of {p} modulo {n} is undefined")
    if n == 1:
        return 1
    c, x = 1, p % n
    while x != 1:
        x = x * p % n
        c += 1
    return c


def _lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)


class TRational:
    """A non-negative rational t = u/d together with the prime p.

    ``b`` is the p-adic valuation of d, ``c`` the order of p modulo the
    prime-to-p part d0, and ``uprime = t·p^b·(p^c−1)`` is an integer."""

    __slots__ = ("value", "p", "b", "c", "d0", "uprime")

    def __init__(self, value: Union[Fraction, int, str], p: int):
        if isinstance(value, TRational):
            value = value.value
        try:
            value = Fraction(value)
        except (ValueError, ZeroDivisionError) as exc:
            raise FjumpError("BAD_RATIONAL", f"cannot read {value!r} as a rational") from exc
        if value < 0:
            raise FjumpError("NEGATIVE_T", f"t must be >= 0, got {value}")
        self.value = value
        self.p = p
        d = value.denominator
        b = 0
        while d % p == 0:
            d //= p
            b += 1
        self.b = b
        self.d0 = d
        self.c = multiplicative_order(p, d)
        self.uprime = value.numerator * (p**self.c - 1) // d
        assert Fraction(self.uprime, p**b * (p**self.c - 1)) == value

    @classmethod
    def coerce(cls, t: RationalLike, p: int) -> "TRational":
        if isinstance(t, TRational):
            if t.p != p:
                return cls(t.value, p)
            return t
        return cls(t, p)

    @property
    def u(self) -> int:
        return self.value.numerator

    @property
    def d(self) -> int:
        return self.value.denominator

    def scaled_numerator(self, C: int) -> int:
        """``t·p^b·(p^C−1)``; requires c | C."""
        if C % self.c:
            raise ValueError(f"level {C} is not a multiple of c = {self.c}")
        return self.value.numerator * self.p**self.b * (self.p**C - 1) // self.value.denominator

    def aligned_level(self, level: int) -> int:
        """Smallest common multiple of c and an operator level."""
        return _lcm(self.c, level)

    # -- rational behaviour -------------------------------------------------

    def __float__(self):
        return float(self.value)

    def _other(self, other):
        if isinstance(other, TRational):
            return other.value
        return Fraction(other)

    def __eq__(self, other):
        try:
            return self.value == self._other(other)
        except (TypeError, ValueError):
            return NotImplemented

    def __hash__(self):
        return hash(self.value)

    def __lt__(self, other):
        return self.value < self._other(other)

    def __le__(self, other):
        return self.value <= self._other(other)

    def __gt__(self, other):
        return self.value > self._other(other)

    def __ge__(self, other):
        return self.value >= self._other(other)

    def __add__(self, other):
        return TRational(self.value + self._other(other), self.p)

    def __sub__(self, other):
        return TRational(self.value - self._other(other), self.p)

    def __mul__(self, other):
        return TRational(self.value * self._other(other), self.p)

    __radd__ = __add__
    __rmul__ = __mul__

    def __str__(self):
        return str(self.value)

    def __repr__(self):
        return f"TRational({self.value}, p={self.p}, b={self.b}, c={self.c})"

    def to_json(self) -> str:
        return str(self.value)
