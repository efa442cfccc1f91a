"""Bernoulli, Daehee, Noerlund and lambda-Daehee families by two independent routes.

Every family table is computed either

* by expanding its generating function as a truncated power series
  (:func:`daehee_family_series`), or
* as a chain of Stirling / Pascal / diagonal matrix products applied to the
  higher-order Bernoulli table (:func:`daehee_family_stirling`).

Tables hold column k = 0..k_max and row n = 0..n_max. Column k = 0 is the
empty power of the kernel, so it is (1, 0, 0, ...) for numbers.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache

from ..combinatorics import binom, compositions, stirling_first
from ..exact import DomainError
from ..matrix import SequenceTable, build_matrix, mat_apply
from ..poly import ONE, MultiPoly, binomial, falling_factorial, poly_homogenize
from ..series import (
    TruncatedSeries,
    series_binomial_pow,
    series_binomial_shifted,
    series_exp,
    series_expm1,
    series_inverse,
    series_log1p,
    series_pow,
    series_rescale,
)


class Family(str, Enum):
    BERNOULLI = "bernoulli"
    DAEHEE1 = "daehee1"
    DAEHEE2 = "daehee2"
    NORLUND = "norlund"
    LAMBDA1 = "lambda1"
    LAMBDA2 = "lambda2"
    TWISTED1 = "twisted1"
    TWISTED2 = "twisted2"
    TWISTED_BERNOULLI = "twisted-bernoulli"

    def __str__(self) -> str:
        return self.value


LAMBDA_FAMILIES = {Family.LAMBDA1, Family.LAMBDA2, Family.TWISTED1, Family.TWISTED2, Family.TWISTED_BERNOULLI}
XI_FAMILIES = {Family.TWISTED1, Family.TWISTED2, Family.TWISTED_BERNOULLI}

# a bound value of None means the parameter stays symbolic
SYMBOLIC = None


@dataclass(frozen=True)
class FamilySpec:
    """Which family to tabulate and how x, lambda and xi enter.

    ``x`` defaults to 0 (numbers); pass ``x=SYMBOLIC`` for polynomials.
    ``lam`` and ``xi`` default to symbolic and are ignored by families that
    do not use them.
    """

    family: Family
    x: Fraction | None = Fraction(0)
    lam: Fraction | None = SYMBOLIC
    xi: Fraction | None = SYMBOLIC

    def __post_init__(self):
        object.__setattr__(self, "family", Family(self.family))
        for name in ("x", "lam", "xi"):
            v = getattr(self, name)
            if v is not None:
                object.__setattr__(self, name, Fraction(v))
        if self.family == Family.NORLUND and self.x != 0:
            raise DomainError("Noerlund numbers b_n^(-k) take no x argument")
        if self.family == Family.TWISTED_BERNOULLI:
            if self.lam is None or self.xi is None:
                raise DomainError("twisted Bernoulli values need numeric lambda and xi")
            if self.lam.denominator != 1 or self.lam < 1:
                raise DomainError("twisted Bernoulli values need a positive integer lambda")
            if self.xi ** int(self.lam) == 1:
                raise DomainError("xi^lambda = 1 makes the twisted Bernoulli kernel singular")

    @property
    def polynomial(self) -> bool:
        return self.x is None

    @property
    def uses_lambda(self) -> bool:
        return self.family in LAMBDA_FAMILIES

    @property
    def uses_xi(self) -> bool:
        return self.family in XI_FAMILIES

    def value(self, name: str):
        """Bound Fraction, or the symbol as a MultiPoly."""
        v = {"x": self.x, "lambda": self.lam, "xi": self.xi}[name]
        return MultiPoly.var(name) if v is None else v

    def bindings(self) -> dict[str, Fraction]:
        out = {}
        if self.x is not None and self.family != Family.NORLUND:
            out["x"] = self.x
        if self.uses_lambda and self.lam is not None:
            out["lambda"] = self.lam
        if self.uses_xi and self.xi is not None:
            out["xi"] = self.xi
        return out


def default_order(n_max: int, k_max: int) -> int:
    return n_max + k_max + 2


# -- generating-function building blocks ------------------------------------


def log1p_over_t(order: int) -> TruncatedSeries:
    """log(1+t)/t."""
    return series_log1p(order + 1).divide_by_t()


def bernoulli_kernel(order: int) -> TruncatedSeries:
    """t/(e^t - 1)."""
    return series_inverse(series_expm1(Fraction(1), order + 1).divide_by_t())


def lambda_kernel(lam, order: int) -> TruncatedSeries:
    """lambda log(1+t) / ((1+t)^lambda - 1), kept polynomial in lambda."""
    return log1p_over_t(order) * series_inverse(series_binomial_shifted(lam, order))


def second_kind_kernel(order: int) -> TruncatedSeries:
    """(1-t) log(1-t) / (-t), as (1+u) log(1+u)/u at u = -t."""
    first = log1p_over_t(order) * series_binomial_pow(1, order)
    return series_rescale(first, -1)


def family_series(spec: FamilySpec, k: int, order: int) -> TruncatedSeries:
    """Generating function of column k of ``spec``'s table, truncated at ``order``."""
    fam = spec.family
    x = spec.value("x")
    if fam == Family.BERNOULLI:
        return series_pow(bernoulli_kernel(order), k) * series_exp(x, order)
    if fam == Family.DAEHEE1:
        return series_pow(log1p_over_t(order), k) * series_binomial_pow(x, order)
    if fam == Family.DAEHEE2:
        inner = series_pow(log1p_over_t(order) * series_binomial_pow(1, order), k)
        return series_rescale(inner * series_binomial_pow(x, order), -1)
    if fam == Family.NORLUND:
        return series_pow(log1p_over_t(order), k)
    lam = spec.value("lambda")
    if fam in (Family.LAMBDA1, Family.LAMBDA2):
        kern = lambda_kernel(lam, order)
        if fam == Family.LAMBDA2:
            kern = kern * series_binomial_pow(lam, order)
        return series_pow(kern, k) * series_binomial_pow(x, order)
    xi = spec.value("xi")
    if fam in (Family.TWISTED1, Family.TWISTED2):
        # every building block evaluated at xi*t
        kern = series_rescale(log1p_over_t(order), xi) * series_inverse(
            series_rescale(series_binomial_shifted(lam, order), xi)
        )
        if fam == Family.TWISTED2:
            kern = kern * series_rescale(series_binomial_pow(lam, order), xi)
        return series_pow(kern, k) * series_rescale(series_binomial_pow(x, order), xi)
    if fam == Family.TWISTED_BERNOULLI:
        from .twisted import twisted_bernoulli_series

        return twisted_bernoulli_series(k, spec.xi, int(spec.lam), x, order)
    raise ValueError(f"unknown family {fam}")


def _table_from_columns(spec: FamilySpec, columns, n_max: int, egf: bool) -> SequenceTable:
    grid = []
    for n in range(n_max + 1):
        scale = math.factorial(n) if egf else 1
        grid.append([col[n] * scale for col in columns])
    return SequenceTable(str(spec.family), grid, spec.bindings())


def daehee_family_series(spec: FamilySpec, n_max: int, k_max: int, order: int | None = None) -> SequenceTable:
    """Table of ``spec``'s family computed purely by series expansion."""
    order = default_order(n_max, k_max) if order is None else order
    if order < n_max:
        raise ValueError(f"truncation order {order} is below n_max={n_max}")
    columns = [family_series(spec, k, order) for k in range(k_max + 1)]
    return _table_from_columns(spec, columns, n_max, egf=spec.family != Family.NORLUND)


# -- closed forms and the Stirling route -------------------------------------


def bernoulli_numbers(n_max: int, k_max: int) -> SequenceTable:
    """B_n^(k) from the series (t/(e^t-1))^k."""
    return daehee_family_series(FamilySpec(Family.BERNOULLI), n_max, k_max, order=n_max)


def bernoulli_polynomials(n_max: int, k_max: int) -> SequenceTable:
    """B_n^(k)(x) as the Pascal-matrix image P(x) B^(k) of the numbers."""
    table = mat_apply(build_matrix("pascal", n_max), bernoulli_numbers(n_max, k_max))
    return SequenceTable(str(Family.BERNOULLI), table.grid, {})


def daehee_numbers_closed(n: int, k: int) -> Fraction:
    """D_n^(k) = s1(n+k, k) / C(n+k, k)."""
    if n < 0 or k < 0:
        raise ValueError("n and k must be non-negative")
    return Fraction(stirling_first(n + k, k), binom(n + k, k))


def daehee_numbers_composition(n: int, k: int) -> Fraction:
    """n! * sum over compositions l_1+...+l_k = n+k (parts >= 1) of (-1)^n / (l_1...l_k)."""
    if n < 0 or k < 1:
        raise ValueError("need n >= 0 and k >= 1")
    total = Fraction(0)
    for parts in compositions(n + k, k):
        total += Fraction(1, math.prod(parts))
    return total * (-1) ** n * math.factorial(n)


@lru_cache(maxsize=None)
def daehee_polynomial_closed(n: int, k: int) -> MultiPoly:
    """D_n^(k)(x) = sum_j C(n, j) D_j^(k) (x)_(n-j), from the product with (1+t)^x."""
    x = MultiPoly.var("x")
    acc = MultiPoly()
    for j in range(n + 1):
        acc = acc + falling_factorial(x, n - j) * (daehee_numbers_closed(j, k) * binom(n, j))
    return acc


def daehee_closed_table(n_max: int, k_max: int, polynomial: bool = False) -> SequenceTable:
    if polynomial:
        grid = [[daehee_polynomial_closed(n, k) for k in range(k_max + 1)] for n in range(n_max + 1)]
        return SequenceTable(str(Family.DAEHEE1), grid, {})
    grid = [[daehee_numbers_closed(n, k) for k in range(k_max + 1)] for n in range(n_max + 1)]
    return SequenceTable(str(Family.DAEHEE1), grid, {"x": Fraction(0)})


def norlund_b(n: int, k: int) -> Fraction:
    """b_n^(-k): ordinary t^n coefficient of (log(1+t)/t)^k."""
    if n < 0 or k < 0:
        raise ValueError("n and k must be non-negative")
    return series_pow(log1p_over_t(n), k)[n]


def norlund_polynomial(n: int) -> MultiPoly:
    """b_n^(x) as a polynomial in x: (t/log(1+t))^x = sum_i C(x, i) u^i with u = t/log(1+t) - 1."""
    u = series_inverse(log1p_over_t(n))
    u = TruncatedSeries([Fraction(0)] + list(u.coeffs[1:]))
    outer = series_binomial_pow(MultiPoly.var("x"), n)
    return MultiPoly.coerce(outer.compose(u)[n])


def daehee_poly_via_norlund(m: int, k: int) -> MultiPoly:
    """D_m^(k)(z) = m! sum_n C(z, m-n) b_n^(-k)."""
    z = MultiPoly.var("z")
    acc = MultiPoly()
    for n in range(m + 1):
        acc = acc + binomial(z, m - n) * norlund_b(n, k)
    return acc * math.factorial(m)


def homogenized(table: SequenceTable, family: str | None = None) -> SequenceTable:
    """Row n entry p(x) becomes lambda^n p(x/lambda): the matrix Lambda B(x/lambda)."""
    return table.map_rows(lambda n, p: poly_homogenize(p, n), family)


def reflected(table: SequenceTable) -> SequenceTable:
    """x -> -x in every entry."""
    return table.map(lambda p: p.substitute({"x": -MultiPoly.var("x")}))


def lambda_bernoulli(n_max: int, k_max: int) -> SequenceTable:
    """Lambda B^(k)(x/lambda): entries lambda^n B_n^(k)(x/lambda)."""
    return homogenized(bernoulli_polynomials(n_max, k_max))


def lambda1_bernoulli(n_max: int, k_max: int) -> SequenceTable:
    """Lambda_1 B^(k)(-x/lambda): entries (-lambda)^n B_n^(k)(-x/lambda)."""
    minus = build_matrix("diag", n_max, -1)
    return mat_apply(minus, homogenized(reflected(bernoulli_polynomials(n_max, k_max))))


def daehee_family_stirling(spec: FamilySpec, n_max: int, k_max: int) -> SequenceTable:
    """Table of ``spec``'s family as Stirling-matrix transforms of Bernoulli values."""
    fam = spec.family
    if fam == Family.TWISTED_BERNOULLI:
        from .twisted import twisted_bernoulli_stirling_table

        return twisted_bernoulli_stirling_table(spec, n_max, k_max)
    if fam == Family.NORLUND:
        grid = [
            [daehee_numbers_closed(n, k) / math.factorial(n) for k in range(k_max + 1)]
            for n in range(n_max + 1)
        ]
        return SequenceTable(str(fam), grid, spec.bindings())

    s1 = build_matrix("s1", n_max)
    if fam == Family.BERNOULLI:
        numbers = mat_apply(build_matrix("s2", n_max), daehee_closed_table(n_max, k_max))
        table = mat_apply(build_matrix("pascal", n_max), numbers)
    elif fam == Family.DAEHEE1:
        table = mat_apply(s1, bernoulli_polynomials(n_max, k_max))
    elif fam == Family.DAEHEE2:
        table = mat_apply(build_matrix("signless", n_max), reflected(bernoulli_polynomials(n_max, k_max)))
    elif fam == Family.LAMBDA1:
        table = mat_apply(s1, lambda_bernoulli(n_max, k_max))
    elif fam == Family.LAMBDA2:
        table = mat_apply(s1, lambda1_bernoulli(n_max, k_max))
    elif fam == Family.TWISTED1:
        xi = build_matrix("diag", n_max, MultiPoly.var("xi"))
        table = mat_apply(xi, mat_apply(s1, lambda_bernoulli(n_max, k_max)))
    elif fam == Family.TWISTED2:
        xi = build_matrix("diag", n_max, MultiPoly.var("xi"))
        table = mat_apply(xi, mat_apply(s1, lambda1_bernoulli(n_max, k_max)))
    else:
        raise ValueError(f"unknown family {fam}")
    bindings = spec.bindings()
    table = table.evaluate(bindings)
    return SequenceTable(str(fam), table.grid, bindings)


def family_table(spec: FamilySpec, n_max: int, k_max: int, method: str = "series", order: int | None = None) -> SequenceTable:
    if method == "series":
        return daehee_family_series(spec, n_max, k_max, order)
    if method == "stirling":
        return daehee_family_stirling(spec, n_max, k_max)
    raise ValueError(f"unknown method {method!r}; expected 'series' or 'stirling'")


# -- lambda-family composition formula ---------------------------------------


def lambda_daehee_composition(m: int, k: int, x=None) -> MultiPoly:
    """D_{m,lambda}^(k)(lambda x) by brute-force enumeration of compositions.

    m! sum_{n<=m} D_n^(k)(x)/n! sum_{i_1+...+i_n=m, i_j>=1} C(lambda,i_1)...C(lambda,i_n).
    ``x=None`` keeps x symbolic; otherwise x is substituted.
    """
    lam = MultiPoly.var("lambda")
    binoms = [binomial(lam, i) for i in range(m + 1)]
    acc = MultiPoly()
    for n in range(m + 1):
        dn = daehee_polynomial_closed(n, k)
        if x is not None:
            dn = dn.evaluate({"x": x})
        inner = MultiPoly()
        for parts in compositions(m, n):
            term = ONE
            for i in parts:
                term = term * binoms[i]
            inner = inner + term
        if inner:
            acc = acc + dn * inner * Fraction(1, math.factorial(n))
    return acc * math.factorial(m)


def lambda_daehee_substitution(m_max: int, k: int, x=None) -> list[MultiPoly]:
    """Same values by series substitution: sum_n D_n^(k)(x)/n! ((1+t)^lambda - 1)^n."""
    outer = []
    for n in range(m_max + 1):
        dn = daehee_polynomial_closed(n, k)
        if x is not None:
            dn = dn.evaluate({"x": x})
        outer.append(dn * Fraction(1, math.factorial(n)))
    inner = series_binomial_pow(MultiPoly.var("lambda"), m_max)
    inner = TruncatedSeries([Fraction(0)] + list(inner.coeffs[1:]))
    composed = TruncatedSeries(outer).compose(inner)
    return [MultiPoly.coerce(c * math.factorial(n)) for n, c in enumerate(composed)]
