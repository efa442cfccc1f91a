"""Exact rational scalars and the ring contract shared by every module.

Rationals are :class:`fractions.Fraction`, which already keeps values in
lowest terms with a positive denominator and is immutable.
"""
from __future__ import annotations

import re
from fractions import Fraction
from typing import Protocol, TypeVar, Union

Rational = Fraction

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)(?:\s*/\s*([+-]?\d+))?\s*$")


class DomainError(ValueError):
    """Raised when an exact operation is asked for a value outside its domain."""


class ExactRing(Protocol):
    """What series and matrix code needs from a coefficient type.

    ``Fraction`` and :class:`daehee.poly.MultiPoly` both satisfy this; there is
    no tolerance anywhere, ``==`` is exact equality.
    """

    def __add__(self, other): ...
    def __sub__(self, other): ...
    def __mul__(self, other): ...
    def __neg__(self): ...
    def __eq__(self, other) -> bool: ...


R = TypeVar("R", bound=ExactRing)
Scalar = Union[int, Fraction]


def rational_make(p: int, q: int = 1) -> Fraction:
    if q == 0:
        raise DomainError(f"zero denominator in {p}/{q}")
    return Fraction(p, q)


def rational_pow(r: Scalar, e: int) -> Fraction:
    r = Fraction(r)
    if r == 0 and e < 0:
        raise DomainError("0 raised to a negative power")
    return r**e


def parse_rational(text: str) -> Fraction:
    """Parse ``"p/q"`` or ``"p"``; anything else (floats, exponents) is rejected."""
    m = _RATIONAL_RE.match(text)
    if not m:
        raise ValueError(f"not a rational literal: {text!r}")
    p = int(m.group(1))
    q = int(m.group(2)) if m.group(2) is not None else 1
    return rational_make(p, q)


def format_rational(r: Scalar) -> str:
    return str(Fraction(r))


def is_unit(c) -> bool:
    """True when ``c`` has an exact multiplicative inverse in its ring."""
    if isinstance(c, (int, Fraction)):
        return c != 0
    return c.is_unit()


def unit_inverse(c):
    if not is_unit(c):
        raise DomainError(f"{c} is not invertible")
    if isinstance(c, (int, Fraction)):
        return 1 / Fraction(c)
    return c.unit_inverse()
