"""Exact higher-order Daehee, Bernoulli and lambda-Daehee numbers and polynomials."""
from .exact import DomainError, Rational, format_rational, parse_rational, rational_make, rational_pow
from .poly import MultiPoly, parse_poly
from .series import TruncatedSeries
from .matrix import SequenceTable, TriMatrix, build_matrix, mat_apply, tri_mul

__version__ = "0.1.0"
