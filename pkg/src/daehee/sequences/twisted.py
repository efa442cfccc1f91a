"""Twisted Bernoulli values and the two competing inversions of the twisted lambda-Daehee tables.

xi is a rational number or the formal symbol ``xi``; no root-of-unity
semantics are attached to it.
"""
from __future__ import annotations

import math
from fractions import Fraction

from ..combinatorics import binom, stirling_second
from ..exact import DomainError, rational_pow
from ..matrix import SequenceTable
from ..poly import MultiPoly
from ..series import TruncatedSeries, series_exp, series_expm1, series_inverse, series_pow


def _check_twist(xi: Fraction, lam: int) -> Fraction:
    xi = Fraction(xi)
    if int(lam) != lam or lam < 1:
        raise DomainError("lambda must be a positive integer here")
    q = xi ** int(lam)
    if q == 1:
        raise DomainError(f"xi^lambda = 1 (xi={xi}, lambda={lam}): the twisted kernel has no inverse")
    return q


def twisted_bernoulli_series(k: int, xi: Fraction, lam: int, y, order: int) -> TruncatedSeries:
    """(lambda t / (xi^lambda e^(lambda t) - 1))^k e^(y t).

    Its exponential coefficients are lambda^m B_{m,xi^lambda}^(k)(y/lambda).
    """
    q = _check_twist(xi, lam)
    denom = series_expm1(Fraction(lam), order) * q
    denom = TruncatedSeries([q - 1] + list(denom.coeffs[1:]))
    kernel = series_inverse(denom).times_t() * Fraction(lam)
    return series_pow(kernel, k) * series_exp(y, order)


def twisted_bernoulli_eval(k: int, xi: Fraction, lam: int, x, n_max: int) -> list:
    """lambda^m B_{m,xi^lambda}^(k)(x/lambda) for m = 0..n_max, read off the series."""
    f = twisted_bernoulli_series(k, xi, lam, x, n_max)
    return [f[m] * math.factorial(m) for m in range(n_max + 1)]


def _apostol_numbers(q: Fraction, n_max: int) -> list[Fraction]:
    """n! [u^n] u/(q e^u - 1) without series inversion.

    1/(q e^u - 1) = sum_j (-q)^j (e^u - 1)^j / (q - 1)^(j+1), and
    (e^u - 1)^j = j! sum_l s2(l, j) u^l / l!.
    """
    out = [Fraction(0)]
    for n in range(1, n_max + 1):
        acc = Fraction(0)
        for j in range(n):
            acc += Fraction((-q) ** j * math.factorial(j) * stirling_second(n - 1, j)) / (q - 1) ** (j + 1)
        out.append(acc * n)
    return out


def twisted_bernoulli_stirling(k: int, xi: Fraction, lam: int, x, n_max: int) -> list:
    """Independent route to :func:`twisted_bernoulli_eval` via Stirling numbers of the second kind."""
    q = _check_twist(xi, lam)
    base = _apostol_numbers(q, n_max)
    power = [Fraction(1)] + [Fraction(0)] * n_max
    for _ in range(k):
        power = [sum(binom(n, i) * power[i] * base[n - i] for i in range(n + 1)) for n in range(n_max + 1)]
    values = []
    for m in range(n_max + 1):
        acc = Fraction(0)
        for j in range(m + 1):
            acc = acc + power[j] * (binom(m, j) * Fraction(lam) ** j) * (x ** (m - j) if m > j else 1)
        values.append(acc)
    return values


def twisted_bernoulli_stirling_table(spec, n_max: int, k_max: int) -> SequenceTable:
    x = spec.value("x")
    columns = [twisted_bernoulli_stirling(k, spec.xi, int(spec.lam), x, n_max) for k in range(k_max + 1)]
    grid = [[col[n] for col in columns] for n in range(n_max + 1)]
    return SequenceTable(str(spec.family), grid, spec.bindings())


def unscale_xi(value, n: int, xi=None):
    """value * xi^(-n): exact division of a polynomial by xi^n, or by a nonzero bound xi."""
    if xi is None:
        return MultiPoly.coerce(value).divide_by_power("xi", n)
    if xi == 0:
        raise DomainError("xi = 0 has no negative powers")
    return value * rational_pow(xi, -n)


def corrected_rhs(twisted_column: list, m: int, xi=None):
    """sum_n D_{n,xi}(x|lambda) xi^(-n) s2(m, n)."""
    acc = MultiPoly()
    for n in range(m + 1):
        acc = acc + unscale_xi(twisted_column[n], n, xi) * stirling_second(m, n)
    return acc


def original_rhs(twisted_column: list, m: int, xi: Fraction, extra_exponent: int):
    """sum_n D_{n,xi}(x|lambda) xi^(-n-extra) s2(m, n), the form as originally published."""
    acc = MultiPoly()
    for n in range(m + 1):
        acc = acc + twisted_column[n] * (rational_pow(xi, -n - extra_exponent) * stirling_second(m, n))
    return acc
