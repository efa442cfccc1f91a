from fractions import Fraction

import pytest
import sympy as sp

from conftest import t
from daehee import DomainError, MultiPoly
from daehee.sequences import Family, FamilySpec
from daehee.sequences.twisted import (
    corrected_rhs,
    twisted_bernoulli_eval,
    twisted_bernoulli_stirling,
    unscale_xi,
)

F = Fraction


def test_hand_expansion_order_one():
    # t/(2e^t - 1) = t - 2t^2 + ...
    vals = twisted_bernoulli_eval(1, F(2), 1, 0, 2)
    assert vals[:2] == [0, 1]
    assert vals[2] == -4


def test_k_zero_collapses_to_powers_of_x():
    assert twisted_bernoulli_eval(0, F(3), 1, 2, 4) == [2**m for m in range(5)]
    # lambda^m (x/lambda)^m = x^m for any lambda
    assert twisted_bernoulli_eval(0, F(1, 2), 3, 5, 3) == [5**m for m in range(4)]


@pytest.mark.parametrize("xi, lam, x, k", [(F(2), 1, 1, 2), (F(1, 3), 2, -1, 1), (F(-2), 3, 4, 3)])
def test_against_sympy(xi, lam, x, k):
    q = sp.Rational(xi.numerator, xi.denominator) ** lam
    expr = (lam * t / (q * sp.exp(lam * t) - 1)) ** k * sp.exp(x * t)
    poly = sp.expand(sp.series(expr, t, 0, 6).removeO())
    want = [sp.factorial(m) * poly.coeff(t, m) for m in range(6)]
    got = twisted_bernoulli_eval(k, xi, lam, x, 5)
    assert [sp.Rational(g.numerator, g.denominator) for g in got] == want
    assert twisted_bernoulli_stirling(k, xi, lam, x, 5) == got


@pytest.mark.parametrize("xi, lam", [(F(1), 1), (F(-1), 2), (F(1), 3)])
def test_singular_twist(xi, lam):
    with pytest.raises(DomainError):
        twisted_bernoulli_eval(1, xi, lam, 0, 3)
    with pytest.raises(DomainError):
        FamilySpec(Family.TWISTED_BERNOULLI, xi=xi, lam=F(lam))


def test_spec_requires_bound_integer_lambda():
    with pytest.raises(DomainError):
        FamilySpec(Family.TWISTED_BERNOULLI, xi=F(2))
    with pytest.raises(DomainError):
        FamilySpec(Family.TWISTED_BERNOULLI, xi=F(2), lam=F(1, 2))
    with pytest.raises(DomainError):
        twisted_bernoulli_eval(1, F(2), 0, 0, 2)


def test_unscale_xi():
    xi = MultiPoly.var("xi")
    assert unscale_xi(xi**2 * 3, 2) == 3
    assert unscale_xi(F(8), 3, F(2)) == 1
    with pytest.raises(DomainError):
        unscale_xi(F(1), 1, F(0))
    with pytest.raises(DomainError):
        unscale_xi(xi, 2)


def test_corrected_rhs_first_row():
    # xi^-1 * xi(x - lambda/2) * s2(1,1) = x - lambda/2
    xi, x, lam = (MultiPoly.var(s) for s in ("xi", "x", "lambda"))
    col = [MultiPoly.const(1), xi * (x - lam / 2)]
    assert corrected_rhs(col, 1) == x - lam / 2
    assert corrected_rhs(col, 0) == 1
