"""Exact nonnegative rationals extended with a top element ``inf``.

Values are stored as a reduced pair ``(num, den)``; ``inf`` is the pair
``(1, 0)``.  With that encoding the usual cross-multiplication compares
correctly against ``inf`` without special cases.

>>> ExtRat(1, 2) + ExtRat(1, 3)
ExtRat('5/6')
>>> ExtRat(0) * INF
ExtRat('0')
>>> INF > ExtRat(10**9)
True
"""

from __future__ import annotations

import re
from fractions import Fraction
from math import gcd
from numbers import Rational
from typing import Union

__all__ = ["ExtRat", "INF", "ZERO", "ONE", "MalformedValue", "ext"]

_VALUE_RE = re.compile(r"^\s*(\d+)\s*(?:/\s*(\d+)\s*)?$")


class MalformedValue(ValueError):
    """A value string is not ``p/q``, a bare integer, or ``inf``."""


class ExtRat:
    """Element of the extended half-line ``[0, inf]`` with exact arithmetic.

    Accepts an int, a :class:`fractions.Fraction`, a string (``"3"``,
    ``"2/5"``, ``"inf"``) or a numerator/denominator pair.  Negative values
    are rejected.  Multiplication follows the measure-theoretic convention
    ``0 * inf = 0``.
    """

    __slots__ = ("num", "den")

    num: int
    den: int

    def __init__(self, value: Union[int, str, Fraction, "ExtRat"] = 0, den: int | None = None):
        if den is not None:
            num = value
            if not isinstance(num, int) or not isinstance(den, int):
                raise TypeError("numerator and denominator must be integers")
        elif isinstance(value, ExtRat):
            num, den = value.num, value.den
        elif isinstance(value, bool):
            raise TypeError("bool is not an ExtRat value")
        elif isinstance(value, int):
            num, den = value, 1
        elif isinstance(value, Rational):
            num, den = value.numerator, value.denominator
        elif isinstance(value, str):
            num, den = _parse(value)
        else:
            raise TypeError(f"cannot build ExtRat from {type(value).__name__}")
        if num < 0 or den < 0:
            raise ValueError(f"ExtRat is nonnegative, got {num}/{den}")
        if den == 0:
            if num == 0:
                raise ZeroDivisionError("0/0 is not an ExtRat")
            num = 1
        else:
            g = gcd(num, den)
            if g > 1:
                num //= g
                den //= g
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    @classmethod
    def _raw(cls, num: int, den: int) -> "ExtRat":
        # caller guarantees reduced form
        self = object.__new__(cls)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)
        return self

    def __setattr__(self, name, value):
        raise AttributeError("ExtRat is immutable")

    def __reduce__(self):
        return (ExtRat, (self.num, self.den) if self.den else ("inf",))

    # predicates

    @property
    def is_inf(self) -> bool:
        return self.den == 0

    @property
    def is_finite(self) -> bool:
        return self.den != 0

    @property
    def is_zero(self) -> bool:
        return self.num == 0

    def __bool__(self) -> bool:
        return self.num != 0

    def as_fraction(self) -> Fraction:
        if self.den == 0:
            raise OverflowError("inf has no Fraction value")
        return Fraction(self.num, self.den)

    # ordering: cross-multiplication handles inf because its den is 0

    def __eq__(self, other):
        if not isinstance(other, ExtRat):
            try:
                other = _coerce(other)
            except TypeError:
                return NotImplemented
        return self.num * other.den == other.num * self.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __lt__(self, other):
        other = _coerce(other)
        return self.num * other.den < other.num * self.den

    def __le__(self, other):
        other = _coerce(other)
        return self.num * other.den <= other.num * self.den

    def __gt__(self, other):
        other = _coerce(other)
        return self.num * other.den > other.num * self.den

    def __ge__(self, other):
        other = _coerce(other)
        return self.num * other.den >= other.num * self.den

    # arithmetic

    def __add__(self, other):
        other = _coerce(other)
        if self.den == 0 or other.den == 0:
            return INF
        return ExtRat(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __mul__(self, other):
        other = _coerce(other)
        if self.num == 0 or other.num == 0:
            return ZERO
        if self.den == 0 or other.den == 0:
            return INF
        return ExtRat(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        """Divide by a finite positive value."""
        other = _coerce(other)
        if other.num == 0:
            raise ZeroDivisionError("division by zero")
        if other.den == 0:
            raise ZeroDivisionError("division by inf is not defined here")
        if self.den == 0:
            return INF
        return ExtRat(self.num * other.den, self.den * other.num)

    # rendering

    def __str__(self) -> str:
        if self.den == 0:
            return "inf"
        if self.den == 1:
            return str(self.num)
        return f"{self.num}/{self.den}"

    def __repr__(self) -> str:
        return f"ExtRat('{self}')"


def _parse(text: str) -> tuple[int, int]:
    if text.strip().lower() in ("inf", "+inf", "∞"):
        return 1, 0
    match = _VALUE_RE.match(text)
    if match is None:
        raise MalformedValue(f"malformed value {text!r}: expected 'p/q', an integer, or 'inf'")
    num = int(match.group(1))
    den = int(match.group(2)) if match.group(2) is not None else 1
    if den == 0:
        raise MalformedValue(f"malformed value {text!r}: zero denominator")
    return num, den


def _coerce(value) -> ExtRat:
    if isinstance(value, ExtRat):
        return value
    if isinstance(value, (int, Fraction)) and not isinstance(value, bool):
        return ExtRat(value)
    raise TypeError(f"cannot compare or combine ExtRat with {type(value).__name__}")


def ext(value) -> ExtRat:
    """Coerce ``value`` to :class:`ExtRat` (identity on ExtRat)."""
    if isinstance(value, ExtRat):
        return value
    return ExtRat(value)


INF = ExtRat._raw(1, 0)
ZERO = ExtRat._raw(0, 1)
ONE = ExtRat._raw(1, 1)
