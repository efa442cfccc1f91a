from fractions import Fraction

import pytest

from daehee import DomainError, format_rational, parse_rational, rational_make, rational_pow
from daehee.exact import is_unit, unit_inverse


@pytest.mark.parametrize(
    "p, q, want",
    [(2, 4, Fraction(1, 2)), (45, -4, Fraction(-45, 4)), (0, 7, Fraction(0)), (6, 1, Fraction(6))],
)
def test_rational_make_normalizes(p, q, want):
    r = rational_make(p, q)
    assert r == want
    assert r.denominator > 0


def test_rational_make_zero_denominator():
    with pytest.raises(DomainError):
        rational_make(1, 0)


def test_zero_canonical_form():
    r = rational_make(0, 7)
    assert (r.numerator, r.denominator) == (0, 1)
    assert format_rational(r) == "0"


@pytest.mark.parametrize(
    "r, e, want",
    [(Fraction(2), 3, Fraction(8)), (Fraction(1, 2), -2, Fraction(4)), (Fraction(-7, 3), 0, Fraction(1))],
)
def test_rational_pow(r, e, want):
    assert rational_pow(r, e) == want


def test_zero_to_negative_power():
    with pytest.raises(DomainError):
        rational_pow(Fraction(0), -1)
    assert rational_pow(Fraction(0), 0) == 1


@pytest.mark.parametrize("text, want", [("-45/4", Fraction(-45, 4)), ("3", Fraction(3)), (" 2/4 ", Fraction(1, 2)), ("-0", Fraction(0))])
def test_parse_rational(text, want):
    assert parse_rational(text) == want


@pytest.mark.parametrize("text", ["1.5", "1/0", "", "x", "1e3"])
def test_parse_rational_rejects(text):
    with pytest.raises(ValueError):
        parse_rational(text)


def test_format_round_trip():
    for r in (Fraction(-45, 4), Fraction(11, 6), Fraction(0), Fraction(-3)):
        assert parse_rational(format_rational(r)) == r
    assert format_rational(Fraction(-3)) == "-3"


def test_units():
    assert is_unit(Fraction(-2))
    assert not is_unit(Fraction(0))
    assert unit_inverse(Fraction(-2, 3)) == Fraction(-3, 2)
    with pytest.raises(DomainError):
        unit_inverse(Fraction(0))
