"""Exact dyadic rationals: integers divided by powers of two.

The canonical form keeps the numerator odd unless the exponent is zero, so
structural equality is value equality.  Dyadics are closed under addition,
subtraction, multiplication and division by powers of two; they are the
coordinate field for the piecewise-affine group model.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Union


class Dyadic:
    """num / 2**exp with num an arbitrary-precision integer and exp >= 0."""

    __slots__ = ("num", "exp", "_hash")

    def __init__(self, num: int, exp: int = 0):
        if exp < 0:
            num <<= -exp
            exp = 0
        while exp > 0 and num % 2 == 0:
            num //= 2
            exp -= 1
        self.num = num
        self.exp = exp
        self._hash = hash((num, exp))

    # -- constructors ------------------------------------------------

    @classmethod
    def from_int(cls, n: int) -> "Dyadic":
        return cls(n, 0)

    @classmethod
    def parse(cls, text: str) -> "Dyadic":
        """Inverse of str(); accepts 'num/2^exp' and plain integers."""
        text = text.strip()
        if "/" in text:
            num_s, den_s = text.split("/")
            if not den_s.startswith("2^"):
                raise ValueError(f"not a dyadic literal: {text!r}")
            return cls(int(num_s), int(den_s[2:]))
        return cls(int(text), 0)

    # -- arithmetic --------------------------------------------------

    def __add__(self, other: "DyadicLike") -> "Dyadic":
        other = _coerce(other)
        e = max(self.exp, other.exp)
        return Dyadic((self.num << (e - self.exp)) + (other.num << (e - other.exp)), e)

    def __radd__(self, other: "DyadicLike") -> "Dyadic":
        return self.__add__(other)

    def __sub__(self, other: "DyadicLike") -> "Dyadic":
        return self.__add__(-_coerce(other))

    def __rsub__(self, other: "DyadicLike") -> "Dyadic":
        return (-self).__add__(other)

    def __neg__(self) -> "Dyadic":
        return Dyadic(-self.num, self.exp)

    def __mul__(self, other: "DyadicLike") -> "Dyadic":
        other = _coerce(other)
        return Dyadic(self.num * other.num, self.exp + other.exp)

    def __rmul__(self, other: "DyadicLike") -> "Dyadic":
        return self.__mul__(other)

    def scaled(self, k: int) -> "Dyadic":
        """self * 2**k for any integer k (division by powers of two)."""
        return Dyadic(self.num, self.exp - k)

    def __abs__(self) -> "Dyadic":
        return Dyadic(abs(self.num), self.exp)

    # -- comparisons (total order) -----------------------------------

    def _cmp(self, other: "DyadicLike") -> int:
        other = _coerce(other)
        e = max(self.exp, other.exp)
        a = self.num << (e - self.exp)
        b = other.num << (e - other.exp)
        return (a > b) - (a < b)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = Dyadic(other, 0)
        if not isinstance(other, Dyadic):
            return NotImplemented
        return self.num == other.num and self.exp == other.exp

    def __lt__(self, other) -> bool:
        return self._cmp(other) < 0

    def __le__(self, other) -> bool:
        return self._cmp(other) <= 0

    def __gt__(self, other) -> bool:
        return self._cmp(other) > 0

    def __ge__(self, other) -> bool:
        return self._cmp(other) >= 0

    def __hash__(self):
        return self._hash

    # -- conversions -------------------------------------------------

    def as_fraction(self) -> Fraction:
        return Fraction(self.num, 1 << self.exp)

    def __float__(self) -> float:
        return self.num / (1 << self.exp)

    def floor(self) -> int:
        return self.num >> self.exp if self.exp else self.num

    def ceil(self) -> int:
        return -((-self.num) >> self.exp) if self.exp else self.num

    def is_integer(self) -> bool:
        return self.exp == 0

    def __str__(self) -> str:
        if self.exp == 0:
            return str(self.num)
        return f"{self.num}/2^{self.exp}"

    def __repr__(self) -> str:
        return f"Dyadic({self.num}, {self.exp})"


DyadicLike = Union[Dyadic, int]

ZERO = Dyadic(0)
ONE = Dyadic(1)


def _coerce(x: DyadicLike) -> Dyadic:
    if isinstance(x, Dyadic):
        return x
    if isinstance(x, int):
        return Dyadic(x, 0)
    raise TypeError(f"cannot coerce {type(x).__name__} to Dyadic")


def dyadic_min(a: Dyadic, b: Dyadic) -> Dyadic:
    return a if a <= b else b


def dyadic_max(a: Dyadic, b: Dyadic) -> Dyadic:
    return a if a >= b else b


def int_floor(x: Dyadic) -> int:
    return x.floor()


def int_ceil(x: Dyadic) -> int:
    return x.ceil()
