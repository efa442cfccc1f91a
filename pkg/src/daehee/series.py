"""Truncated formal power series in t over an exact coefficient ring.

Coefficients may be Fractions or MultiPolys (or a mix, since the two coerce).
A series of order N carries exactly N+1 coefficients c_0..c_N.
"""
from __future__ import annotations

import math
from fractions import Fraction
from typing import Sequence

from .exact import DomainError, unit_inverse
from .poly import MultiPoly, binomial, falling_factorial


def _is_zero(c) -> bool:
    return c == 0


class TruncatedSeries:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence):
        if not coeffs:
            raise ValueError("a truncated series needs at least the constant coefficient")
        self.coeffs = tuple(Fraction(c) if isinstance(c, int) else c for c in coeffs)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, n: int):
        return self.coeffs[n]

    def __len__(self) -> int:
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __repr__(self) -> str:
        return f"TruncatedSeries([{', '.join(str(c) for c in self.coeffs)}])"

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.order == other.order and all(a == b for a, b in zip(self.coeffs, other.coeffs))

    __hash__ = None

    @classmethod
    def one(cls, order: int) -> TruncatedSeries:
        return cls([Fraction(1)] + [Fraction(0)] * order)

    @classmethod
    def constant(cls, c, order: int) -> TruncatedSeries:
        return cls([c] + [Fraction(0)] * order)

    @classmethod
    def from_sequence(cls, values: Sequence) -> TruncatedSeries:
        """Exponential generating function of ``values``: coefficient n is values[n]/n!."""
        return cls([v * Fraction(1, math.factorial(n)) for n, v in enumerate(values)])

    def _check(self, other: TruncatedSeries) -> None:
        if self.order != other.order:
            raise ValueError(f"truncation orders differ: {self.order} vs {other.order}")

    def __add__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        self._check(other)
        return TruncatedSeries([a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __neg__(self) -> TruncatedSeries:
        return TruncatedSeries([-c for c in self.coeffs])

    def __sub__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, TruncatedSeries):
            return series_mul(self, other)
        return TruncatedSeries([c * other for c in self.coeffs])

    def __rmul__(self, other):
        return TruncatedSeries([other * c for c in self.coeffs])

    def __pow__(self, k: int) -> TruncatedSeries:
        return series_pow(self, k)

    def valuation(self) -> int:
        """Index of the first nonzero coefficient (order+1 for the zero series)."""
        for n, c in enumerate(self.coeffs):
            if not _is_zero(c):
                return n
        return self.order + 1

    def divide_by_t(self) -> TruncatedSeries:
        """f(t)/t for f with zero constant term; the result has order N-1."""
        if not _is_zero(self.coeffs[0]):
            raise DomainError("cannot divide a series with nonzero constant term by t")
        if self.order == 0:
            raise DomainError("dividing an order-0 series by t leaves nothing")
        return TruncatedSeries(self.coeffs[1:])

    def times_t(self, shift: int = 1) -> TruncatedSeries:
        """t**shift * f(t), truncated at the same order."""
        zero = Fraction(0)
        return TruncatedSeries(([zero] * shift + list(self.coeffs))[: self.order + 1])

    def truncate(self, order: int) -> TruncatedSeries:
        if order > self.order:
            raise ValueError("cannot extend a truncated series")
        return TruncatedSeries(self.coeffs[: order + 1])

    def map(self, fn) -> TruncatedSeries:
        return TruncatedSeries([fn(c) for c in self.coeffs])

    def compose(self, inner: TruncatedSeries) -> TruncatedSeries:
        """f(g(t)) for g with zero constant term, by Horner's rule."""
        self._check(inner)
        if not _is_zero(inner.coeffs[0]):
            raise DomainError("inner series of a composition needs zero constant term")
        acc = TruncatedSeries.constant(self.coeffs[-1], self.order)
        for c in reversed(self.coeffs[:-1]):
            acc = series_mul(acc, inner)
            acc = TruncatedSeries([acc.coeffs[0] + c] + list(acc.coeffs[1:]))
        return acc

    def to_sequence(self) -> list:
        return [series_coeff_as_sequence(self, n) for n in range(self.order + 1)]


def series_mul(f: TruncatedSeries, g: TruncatedSeries) -> TruncatedSeries:
    """Cauchy product truncated at the common order."""
    f._check(g)
    fc, gc = f.coeffs, g.coeffs
    nz_f = [i for i, c in enumerate(fc) if not _is_zero(c)]
    out = []
    for n in range(f.order + 1):
        acc = Fraction(0)
        for i in nz_f:
            if i > n:
                break
            b = gc[n - i]
            if not _is_zero(b):
                acc = acc + fc[i] * b
        out.append(acc)
    return TruncatedSeries(out)


def series_inverse(f: TruncatedSeries) -> TruncatedSeries:
    """1/f, for f whose constant term is a unit of the coefficient ring."""
    inv0 = unit_inverse(f.coeffs[0])
    g = [inv0]
    for n in range(1, f.order + 1):
        acc = Fraction(0)
        for i in range(1, n + 1):
            if not _is_zero(f.coeffs[i]):
                acc = acc + f.coeffs[i] * g[n - i]
        g.append(-(acc * inv0))
    return TruncatedSeries(g)


def series_pow(f: TruncatedSeries, k: int) -> TruncatedSeries:
    if k < 0:
        return series_pow(series_inverse(f), -k)
    result = TruncatedSeries.one(f.order)
    base = f
    while k:
        if k & 1:
            result = series_mul(result, base)
        k >>= 1
        if k:
            base = series_mul(base, base)
    return result


def series_log1p(order: int) -> TruncatedSeries:
    """log(1+t)."""
    return TruncatedSeries([Fraction(0)] + [Fraction((-1) ** (l - 1), l) for l in range(1, order + 1)])


def series_expm1(scale, order: int) -> TruncatedSeries:
    """exp(scale*t) - 1; ``scale`` may be a Fraction or a polynomial."""
    out = [Fraction(0)]
    power = Fraction(1) if isinstance(scale, (int, Fraction)) else MultiPoly.const(1)
    for l in range(1, order + 1):
        power = power * scale
        out.append(power * Fraction(1, math.factorial(l)))
    return TruncatedSeries(out)


def series_exp(scale, order: int) -> TruncatedSeries:
    """exp(scale*t)."""
    e = series_expm1(scale, order)
    return TruncatedSeries([Fraction(1)] + list(e.coeffs[1:]))


def series_binomial_pow(exponent, order: int) -> TruncatedSeries:
    """(1+t)**exponent = sum_i C(exponent, i) t^i, for scalar or polynomial exponent."""
    return TruncatedSeries([binomial(exponent, i) for i in range(order + 1)])


def series_binomial_shifted(exponent, order: int) -> TruncatedSeries:
    """((1+t)**v - 1)/(v t) with coefficients C(v, i+1)/v = (v-1)...(v-i)/(i+1)!.

    The division by ``v`` is done symbolically, so the coefficients stay
    polynomial in ``v``; at v = 0 this is the limit log(1+t)/t.
    """
    out = []
    for i in range(order + 1):
        out.append(falling_factorial(exponent - 1, i) * Fraction(1, math.factorial(i + 1)))
    return TruncatedSeries(out)


def series_rescale(f: TruncatedSeries, c) -> TruncatedSeries:
    """f(c t)."""
    out = []
    power = Fraction(1)
    for n, coeff in enumerate(f.coeffs):
        out.append(coeff * power if not _is_zero(coeff) else coeff)
        power = power * c
    return TruncatedSeries(out)


def series_coeff_as_sequence(f: TruncatedSeries, n: int):
    """n! times the t^n coefficient (exponential generating function convention)."""
    if n < 0 or n > f.order:
        raise IndexError(f"coefficient {n} outside truncation order {f.order}")
    return f.coeffs[n] * math.factorial(n)
