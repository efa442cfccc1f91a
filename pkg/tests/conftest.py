from __future__ import annotations

from fractions import Fraction
from pathlib import Path

import sympy as sp

from daehee import MultiPoly

GOLDEN = Path(__file__).parent / "golden"
FIXTURES = Path(__file__).parent / "fixtures"

x, lam, xi, z, t = sp.symbols("x lam xi z t")
SYMS = (x, lam, xi, z)


def to_sympy(value) -> sp.Expr:
    p = MultiPoly.coerce(value)
    expr = sp.Integer(0)
    for exps, c in p.items():
        term = sp.Rational(c.numerator, c.denominator)
        for sym, e in zip(SYMS, exps):
            term *= sym**e
        expr += term
    return expr


def from_sympy(expr) -> MultiPoly:
    poly = sp.Poly(sp.expand(expr), *SYMS)
    return MultiPoly({exps: Fraction(int(c.p), int(c.q)) for exps, c in poly.terms()})


def same(value, expr) -> bool:
    return sp.expand(to_sympy(value) - sp.sympify(expr, locals={"x": x, "lam": lam, "xi": xi, "z": z})) == 0


def grid_mismatches(table, reference) -> list[tuple[int, int]]:
    """(n, k) cells where a SequenceTable differs from a grid of sympy-parsable strings."""
    bad = []
    for n, row in enumerate(reference):
        for k, text in enumerate(row):
            if not same(table[n, k], text):
                bad.append((n, k))
    return bad
