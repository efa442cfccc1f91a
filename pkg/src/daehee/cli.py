"""Command-line front end.

Exit status: 0 on success (and when every verified identity holds), 1 when a
verification fails, 2 on usage errors.
"""
from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from .exact import DomainError, parse_rational
from .matrix import MATRIX_KINDS, build_matrix
from .poly import MultiPoly, parse_poly
from .render import FORMATS, render_matrix, render_reports, render_series, render_table
from .sequences.families import (
    SYMBOLIC,
    Family,
    FamilySpec,
    bernoulli_kernel,
    family_table,
    lambda_kernel,
    log1p_over_t,
    second_kind_kernel,
)
from .sequences.verify import SUITES, run_suite
from .series import (
    TruncatedSeries,
    series_binomial_pow,
    series_binomial_shifted,
    series_exp,
    series_expm1,
    series_log1p,
    series_pow,
    series_rescale,
)

EXIT_OK, EXIT_FAILED, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def parse_param(text: str | None, default=SYMBOLIC):
    """``sym`` keeps the symbol; otherwise a rational literal ``p/q`` or ``p``."""
    if text is None:
        return default
    if text.strip().lower() in ("sym", "symbolic"):
        return SYMBOLIC
    try:
        return parse_rational(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _value(bound, name: str):
    return MultiPoly.var(name) if bound is None else bound


def _kernel_series(name: str, order: int, args) -> TruncatedSeries:
    k = args.k
    x = _value(parse_param(args.x), "x")
    lam = _value(parse_param(args.lam), "lambda")
    builders = {
        "one": lambda: TruncatedSeries.one(order),
        "log1p": lambda: series_log1p(order),
        "log1p-over-t": lambda: log1p_over_t(order),
        "expm1": lambda: series_expm1(Fraction(1), order),
        "exp": lambda: series_exp(x, order),
        "bernoulli-kernel": lambda: bernoulli_kernel(order),
        "second-kind-kernel": lambda: second_kind_kernel(order),
        "lambda-kernel": lambda: lambda_kernel(lam, order),
        "binomial": lambda: series_binomial_pow(x, order),
        "binomial-shifted": lambda: series_binomial_shifted(lam, order),
    }
    if name not in builders:
        raise UsageError(f"unknown series {name!r}; choose from {', '.join(builders)}")
    f = series_pow(builders[name](), k)
    if args.xi is not None:
        f = series_rescale(f, _value(parse_param(args.xi), "xi"))
    return f


SERIES_NAMES = (
    "one",
    "log1p",
    "log1p-over-t",
    "expm1",
    "exp",
    "bernoulli-kernel",
    "second-kind-kernel",
    "lambda-kernel",
    "binomial",
    "binomial-shifted",
)


def _write(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_table(args) -> int:
    if args.n < 0 or args.k < 0:
        raise UsageError("--n and --k must be non-negative")
    spec = FamilySpec(
        Family(args.family),
        x=parse_param(args.x, default=Fraction(0)),
        lam=parse_param(args.lam),
        xi=parse_param(args.xi),
    )
    table = family_table(spec, args.n, args.k, method=args.method, order=args.order)
    _write(render_table(table, args.format), args.out)
    return EXIT_OK


def cmd_matrix(args) -> int:
    if args.n < 0:
        raise UsageError("--n must be non-negative")
    base = None
    if args.base is not None:
        try:
            base = parse_poly(args.base)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    elif args.kind == "diag":
        raise UsageError("--kind diag needs --base (e.g. lambda, -lambda, xi)")
    matrix = build_matrix(args.kind, args.n, base)
    _write(render_matrix(args.kind, matrix, args.format), args.out)
    return EXIT_OK


def cmd_series(args) -> int:
    if args.order < 0:
        raise UsageError("--order must be non-negative")
    f = _kernel_series(args.name, args.order, args)
    values = f.to_sequence() if args.egf else list(f.coeffs)
    _write(render_series(args.name, values, args.format), args.out)
    return EXIT_OK


def cmd_verify(args) -> int:
    bounds = {
        "n": args.m if args.m is not None else args.n,
        "k": args.k,
    }
    if args.xi is not None:
        bounds["xi"] = parse_param(args.xi)
    if args.lam is not None:
        bounds["lam"] = parse_param(args.lam)
    if args.x is not None:
        bounds["x"] = parse_param(args.x)
    try:
        reports = run_suite(args.suite, **bounds)
    except ValueError as exc:
        if isinstance(exc, DomainError):
            raise
        raise UsageError(str(exc)) from None
    _write(render_reports(reports, args.format), args.out)
    return EXIT_OK if all(r.ok for r in reports) else EXIT_FAILED


def _params(p: argparse.ArgumentParser, x_help: str) -> None:
    p.add_argument("--x", help=x_help)
    p.add_argument("--lambda", dest="lam", help="lambda: 'sym' (default) or p/q")
    p.add_argument("--xi", help="xi: 'sym' (default) or p/q")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="daehee", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    t = sub.add_parser("table", help="tabulate a number/polynomial family for n <= N, k <= K")
    t.add_argument("--family", required=True, choices=[f.value for f in Family])
    t.add_argument("--n", type=int, required=True)
    t.add_argument("--k", type=int, required=True)
    _params(t, "x: 0 (default, numbers), 'sym' for polynomials, or p/q")
    t.add_argument("--method", choices=("series", "stirling"), default="series")
    t.add_argument("--order", type=int, help="series truncation order (default n + k + 2)")
    t.add_argument("--format", choices=FORMATS, default="csv")
    t.add_argument("--out")
    t.set_defaults(func=cmd_table)

    m = sub.add_parser("matrix", help="emit a named lower-triangular matrix")
    m.add_argument("--kind", required=True, choices=MATRIX_KINDS)
    m.add_argument("--n", type=int, required=True, help="largest row index (dimension n+1)")
    m.add_argument("--base", help="polynomial base for pascal (default x) and diag")
    m.add_argument("--format", choices=FORMATS, default="csv")
    m.add_argument("--out")
    m.set_defaults(func=cmd_matrix)

    s = sub.add_parser("series", help="print truncated generating-function coefficients")
    s.add_argument("--name", required=True, choices=SERIES_NAMES)
    s.add_argument("--order", type=int, required=True)
    s.add_argument("--k", type=int, default=1, help="power to raise the series to (default 1)")
    _params(s, "x: 'sym' (default) or p/q")
    s.add_argument("--egf", action="store_true", help="print n! c_n instead of c_n")
    s.add_argument("--format", choices=("text", "json"), default="text")
    s.add_argument("--out")
    s.set_defaults(func=cmd_series)

    v = sub.add_parser("verify", help="run identity suites; exit 1 if any fails")
    v.add_argument("suite", choices=sorted(SUITES) + ["all"])
    v.add_argument("--n", type=int)
    v.add_argument("--m", type=int, help="alias of --n for suites indexed by m")
    v.add_argument("--k", type=int)
    _params(v, "x for the contradiction demos (integer)")
    v.add_argument("--format", choices=("text", "json"), default="text")
    v.add_argument("--out")
    v.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, DomainError, ValueError) as exc:
        print(f"daehee {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
