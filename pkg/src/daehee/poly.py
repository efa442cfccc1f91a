"""Sparse multivariate polynomials over the rationals in the fixed symbols x, lambda, xi, z."""
from __future__ import annotations

import math
import re
from fractions import Fraction
from typing import Iterable, Mapping, Union

from .exact import DomainError, Scalar, format_rational

SYMBOLS = ("x", "lambda", "xi", "z")
_INDEX = {name: i for i, name in enumerate(SYMBOLS)}
_ALIASES = {"λ": "lambda", "lam": "lambda", "ξ": "xi"}
_NVARS = len(SYMBOLS)
_ZERO_EXP = (0,) * _NVARS

Exponent = tuple


def symbol_index(name: str) -> int:
    name = _ALIASES.get(name, name)
    try:
        return _INDEX[name]
    except KeyError:
        raise ValueError(f"unknown symbol {name!r}; expected one of {SYMBOLS}") from None


def canonical_symbol(name: str) -> str:
    return SYMBOLS[symbol_index(name)]


class MultiPoly:
    """Immutable polynomial stored as ``{exponent vector: nonzero Fraction}``.

    Exponent vectors have one entry per symbol in :data:`SYMBOLS`. Ints and
    Fractions mix freely with polynomials in arithmetic and comparisons.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Exponent, Scalar] | None = None):
        clean = {}
        if terms:
            for exp, c in terms.items():
                exp = tuple(exp)
                if len(exp) != _NVARS or any(e < 0 for e in exp):
                    raise ValueError(f"bad exponent vector {exp}")
                if c != 0:
                    clean[exp] = Fraction(c)
        self._terms = clean

    @classmethod
    def _raw(cls, terms: dict) -> MultiPoly:
        obj = cls.__new__(cls)
        obj._terms = terms
        return obj

    @classmethod
    def const(cls, c: Scalar) -> MultiPoly:
        return cls._raw({_ZERO_EXP: Fraction(c)} if c != 0 else {})

    @classmethod
    def var(cls, name: str, power: int = 1) -> MultiPoly:
        exp = [0] * _NVARS
        exp[symbol_index(name)] = power
        return cls._raw({tuple(exp): Fraction(1)})

    @staticmethod
    def coerce(value) -> MultiPoly:
        if isinstance(value, MultiPoly):
            return value
        if isinstance(value, (int, Fraction)):
            return MultiPoly.const(value)
        raise TypeError(f"cannot use {type(value).__name__} as a polynomial")

    # -- inspection -------------------------------------------------------

    def items(self):
        return self._terms.items()

    def terms(self) -> list[tuple[Exponent, Fraction]]:
        """Terms in canonical display order: total degree, then exponent vector, both descending."""
        return sorted(self._terms.items(), key=lambda it: (-sum(it[0]), tuple(-e for e in it[0])))

    def coefficient(self, exp: Iterable[int]) -> Fraction:
        return self._terms.get(tuple(exp), Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return not self._terms or (len(self._terms) == 1 and _ZERO_EXP in self._terms)

    def constant_term(self) -> Fraction:
        return self._terms.get(_ZERO_EXP, Fraction(0))

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise DomainError(f"{self} is not a constant")
        return self.constant_term()

    def is_unit(self) -> bool:
        return self.is_constant() and not self.is_zero()

    def unit_inverse(self) -> MultiPoly:
        if not self.is_unit():
            raise DomainError(f"{self} is not a unit of the polynomial ring")
        return MultiPoly.const(1 / self.constant_term())

    def symbols(self) -> set[str]:
        used = set()
        for exp in self._terms:
            used.update(SYMBOLS[i] for i, e in enumerate(exp) if e)
        return used

    def degree(self, symbol: str | None = None) -> int:
        """Degree in one symbol, or total degree; the zero polynomial has degree -1."""
        if not self._terms:
            return -1
        if symbol is None:
            return max(sum(exp) for exp in self._terms)
        i = symbol_index(symbol)
        return max(exp[i] for exp in self._terms)

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other):
        try:
            other = MultiPoly.coerce(other)
        except TypeError:
            return NotImplemented
        out = dict(self._terms)
        for exp, c in other._terms.items():
            s = out.get(exp, 0) + c
            if s:
                out[exp] = s
            else:
                out.pop(exp, None)
        return MultiPoly._raw(out)

    __radd__ = __add__

    def __neg__(self) -> MultiPoly:
        return MultiPoly._raw({exp: -c for exp, c in self._terms.items()})

    def __pos__(self) -> MultiPoly:
        return self

    def __sub__(self, other):
        try:
            other = MultiPoly.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return MultiPoly._raw({})
            return MultiPoly._raw({exp: c * other for exp, c in self._terms.items()})
        if not isinstance(other, MultiPoly):
            return NotImplemented
        out: dict = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                exp = tuple(a + b for a, b in zip(e1, e2))
                out[exp] = out.get(exp, 0) + c1 * c2
        return MultiPoly._raw({exp: c for exp, c in out.items() if c})

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, MultiPoly):
            other = other.constant_value()
        if not isinstance(other, (int, Fraction)):
            return NotImplemented
        if other == 0:
            raise ZeroDivisionError("polynomial division by zero")
        return self * (1 / Fraction(other))

    def __pow__(self, e: int) -> MultiPoly:
        if not isinstance(e, int) or e < 0:
            raise DomainError("polynomial powers must be non-negative integers")
        result = MultiPoly.const(1)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, MultiPoly):
            return self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self.is_constant() and self.constant_term() == other
        return NotImplemented

    def __hash__(self) -> int:
        if self.is_constant():
            return hash(self.constant_term())
        return hash(frozenset(self._terms.items()))

    def __bool__(self) -> bool:
        return bool(self._terms)

    # -- substitution -----------------------------------------------------

    def substitute(self, mapping: Mapping[str, Union[MultiPoly, Scalar]]) -> MultiPoly:
        """Replace symbols by polynomials or scalars simultaneously."""
        if not mapping:
            return self
        subs = {symbol_index(k): MultiPoly.coerce(v) for k, v in mapping.items()}
        powers: dict[tuple[int, int], MultiPoly] = {}

        def power(i: int, e: int) -> MultiPoly:
            key = (i, e)
            if key not in powers:
                powers[key] = subs[i] ** e
            return powers[key]

        result: dict = {}
        for exp, c in self._terms.items():
            kept = tuple(0 if i in subs else e for i, e in enumerate(exp))
            term = MultiPoly._raw({kept: c})
            for i, e in enumerate(exp):
                if e and i in subs:
                    term = term * power(i, e)
            for e2, c2 in term._terms.items():
                result[e2] = result.get(e2, 0) + c2
        return MultiPoly._raw({exp: c for exp, c in result.items() if c})

    def evaluate(self, bindings: Mapping[str, Scalar]) -> MultiPoly:
        return self.substitute({k: Fraction(v) for k, v in bindings.items()})

    def rename(self, old: str, new: str) -> MultiPoly:
        return self.substitute({old: MultiPoly.var(new)})

    def divide_by_power(self, symbol: str, e: int) -> MultiPoly:
        """Exact division by ``symbol**e``; fails if any term would get a negative exponent."""
        i = symbol_index(symbol)
        out = {}
        for exp, c in self._terms.items():
            if exp[i] < e:
                raise DomainError(f"{self} is not divisible by {SYMBOLS[i]}^{e}")
            shifted = list(exp)
            shifted[i] -= e
            out[tuple(shifted)] = c
        return MultiPoly._raw(out)

    # -- display ----------------------------------------------------------

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for idx, (exp, c) in enumerate(self.terms()):
            mono = "*".join(
                SYMBOLS[i] if e == 1 else f"{SYMBOLS[i]}^{e}" for i, e in enumerate(exp) if e
            )
            mag = abs(c)
            if not mono:
                body = format_rational(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{format_rational(mag)}*{mono}"
            if idx == 0:
                parts.append(f"-{body}" if c < 0 else body)
            else:
                parts.append(f" - {body}" if c < 0 else f" + {body}")
        return "".join(parts)

    def __repr__(self) -> str:
        return f"MultiPoly({str(self)!r})"


ZERO = MultiPoly()
ONE = MultiPoly.const(1)
X = MultiPoly.var("x")
LAMBDA = MultiPoly.var("lambda")
XI = MultiPoly.var("xi")
Z = MultiPoly.var("z")


def poly_add(p, q) -> MultiPoly:
    return MultiPoly.coerce(p) + q


def poly_mul(p, q) -> MultiPoly:
    return MultiPoly.coerce(p) * q


def poly_neg(p) -> MultiPoly:
    return -MultiPoly.coerce(p)


def falling_factorial(v, n: int):
    """v(v-1)...(v-n+1) for any ring element ``v``."""
    result = Fraction(1) if isinstance(v, (int, Fraction)) else ONE
    for j in range(n):
        result = result * (v - j)
    return result


def binomial(v, n: int):
    """Generalized binomial coefficient C(v, n) for a scalar or polynomial ``v``."""
    if n < 0:
        raise DomainError("binomial index must be non-negative")
    return falling_factorial(v, n) * Fraction(1, math.factorial(n))


def poly_binomial(symbol: str, n: int) -> MultiPoly:
    return MultiPoly.coerce(binomial(MultiPoly.var(symbol), n))


def poly_eval(p, bindings: Mapping[str, Scalar]) -> MultiPoly:
    return MultiPoly.coerce(p).evaluate(bindings)


def poly_homogenize(p, m: int, symbol: str = "lambda") -> MultiPoly:
    """Return ``symbol**m * p(x/symbol)`` for ``p`` a polynomial in x alone of degree <= m."""
    p = MultiPoly.coerce(p)
    if p.symbols() - {"x"}:
        raise DomainError(f"homogenize expects a polynomial in x only, got {p}")
    if p.degree("x") > m:
        raise DomainError(f"degree {p.degree('x')} exceeds homogenizing degree {m}")
    xi_ = symbol_index("x")
    si = symbol_index(symbol)
    out = {}
    for exp, c in p.items():
        new = [0] * _NVARS
        new[xi_] = exp[xi_]
        new[si] = m - exp[xi_]
        out[tuple(new)] = c
    return MultiPoly._raw(out)


_TOKEN_RE = re.compile(r"\s*(?:(\d+)|(lambda|lam|xi|x|z|λ|ξ)|(\*\*|[-+*/^()]))")


class _Parser:
    def __init__(self, text: str):
        self.tokens = []
        pos = 0
        text = text.strip()
        while pos < len(text):
            m = _TOKEN_RE.match(text, pos)
            if not m or m.end() == pos:
                raise ValueError(f"cannot parse polynomial {text!r} at position {pos}")
            num, sym, op = m.groups()
            if num is not None:
                self.tokens.append(("num", int(num)))
            elif sym is not None:
                self.tokens.append(("sym", sym))
            else:
                self.tokens.append(("op", "^" if op == "**" else op))
            pos = m.end()
        self.i = 0
        self.text = text

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else (None, None)

    def take(self):
        tok = self.peek()
        self.i += 1
        return tok

    def parse(self) -> MultiPoly:
        if not self.tokens:
            raise ValueError("empty polynomial")
        p = self.expr()
        if self.i != len(self.tokens):
            raise ValueError(f"trailing input in {self.text!r}")
        return p

    def expr(self) -> MultiPoly:
        p = self.term()
        while self.peek() in (("op", "+"), ("op", "-")):
            _, op = self.take()
            q = self.term()
            p = p + q if op == "+" else p - q
        return p

    def term(self) -> MultiPoly:
        p = self.unary()
        while self.peek() in (("op", "*"), ("op", "/")):
            _, op = self.take()
            q = self.unary()
            p = p * q if op == "*" else p / q
        return p

    def unary(self) -> MultiPoly:
        if self.peek() in (("op", "-"), ("op", "+")):
            _, op = self.take()
            p = self.unary()
            return -p if op == "-" else p
        return self.power()

    def power(self) -> MultiPoly:
        p = self.atom()
        if self.peek() == ("op", "^"):
            self.take()
            kind, e = self.take()
            if kind != "num":
                raise ValueError(f"exponent must be a non-negative integer in {self.text!r}")
            p = p**e
        return p

    def atom(self) -> MultiPoly:
        kind, val = self.take()
        if kind == "num":
            return MultiPoly.const(val)
        if kind == "sym":
            return MultiPoly.var(val)
        if (kind, val) == ("op", "("):
            p = self.expr()
            if self.take() != ("op", ")"):
                raise ValueError(f"unbalanced parentheses in {self.text!r}")
            return p
        raise ValueError(f"unexpected token {val!r} in {self.text!r}")


def parse_poly(text: str) -> MultiPoly:
    """Parse the canonical display form (and ordinary infix with parentheses)."""
    try:
        return _Parser(text).parse()
    except ZeroDivisionError:
        raise ValueError(f"division by zero in {text!r}") from None
