"""Identity suites: each returns a VerificationReport with one instance per checked case.

Two report kinds exist. An ``identity`` report passes when every instance
holds. A ``refutation`` report passes when at least one ``claim`` instance
fails (the witness) while every ``control`` instance holds.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from ..combinatorics import stirling_first, stirling_first_signless, stirling_second
from ..exact import DomainError
from ..matrix import SequenceTable, build_matrix, mat_apply, tri_mul
from ..poly import MultiPoly, falling_factorial, poly_homogenize
from ..series import series_expm1, series_pow
from .families import (
    Family,
    FamilySpec,
    SYMBOLIC,
    bernoulli_numbers,
    bernoulli_polynomials,
    daehee_family_series,
    daehee_family_stirling,
    daehee_numbers_closed,
    daehee_numbers_composition,
    daehee_poly_via_norlund,
    lambda1_bernoulli,
    lambda_bernoulli,
    lambda_daehee_composition,
    lambda_daehee_substitution,
    norlund_b,
    norlund_polynomial,
    reflected,
)
from .twisted import (
    corrected_rhs,
    original_rhs,
    twisted_bernoulli_eval,
    twisted_bernoulli_stirling,
    unscale_xi,
)


KINDS = ("first", "second")


@dataclass
class Instance:
    params: dict
    passed: bool
    role: str = "claim"
    detail: str = ""

    def describe(self) -> str:
        ps = ", ".join(f"{k}={v}" for k, v in self.params.items())
        return f"{ps}: {self.detail}" if self.detail else ps


@dataclass
class VerificationReport:
    identity: str
    parameters: dict
    kind: str = "identity"
    instances: list[Instance] = field(default_factory=list)
    note: str = ""

    def check(self, passed: bool, role: str = "claim", detail: str = "", **params) -> bool:
        self.instances.append(Instance(params, bool(passed), role, detail))
        return bool(passed)

    def _nonempty(self) -> None:
        if not self.instances:
            raise ValueError(f"report {self.identity!r} has no instances")

    @property
    def claims(self) -> list[Instance]:
        return [i for i in self.instances if i.role == "claim"]

    @property
    def controls(self) -> list[Instance]:
        return [i for i in self.instances if i.role == "control"]

    @property
    def counterexample(self) -> Instance | None:
        self._nonempty()
        return next((i for i in self.claims if not i.passed), None)

    @property
    def ok(self) -> bool:
        self._nonempty()
        if self.kind == "refutation":
            return self.counterexample is not None and all(i.passed for i in self.controls)
        return all(i.passed for i in self.instances)

    @property
    def pass_count(self) -> int:
        return sum(i.passed for i in self.instances)

    def summary(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        bounds = " ".join(f"{k}={v}" for k, v in self.parameters.items())
        line = f"{status} {self.identity} [{bounds}] {self.pass_count}/{len(self.instances)} instances hold"
        if self.kind == "refutation":
            w = self.counterexample
            line += f"; witness: {w.describe()}" if w else "; no witness found"
        elif not self.ok:
            line += f"; counterexample: {self.counterexample.describe()}"
        if self.note:
            line += f" ({self.note})"
        return line


def _diff_detail(lhs, rhs) -> str:
    return f"lhs={lhs} rhs={rhs}"


def _compare_tables(report: VerificationReport, left: SequenceTable, right: SequenceTable, **params) -> None:
    for n in range(left.n_max + 1):
        for k in range(left.k_max + 1):
            a, b = left[n, k], right[n, k]
            report.check(a == b, detail="" if a == b else _diff_detail(a, b), n=n, k=k, **params)


# -- combinatorial identities ------------------------------------------------


def stirling_inverse_check(n_max: int = 25) -> list[VerificationReport]:
    first = VerificationReport("S2*S1 = I", {"dim_max": n_max + 1})
    second = VerificationReport("signed-S2*signless-S1 = I", {"dim_max": n_max + 1})
    for n in range(n_max + 1):
        first.check(tri_mul(build_matrix("s2", n), build_matrix("s1", n)).is_identity(), dim=n + 1)
        second.check(tri_mul(build_matrix("signed-s2", n), build_matrix("signless", n)).is_identity(), dim=n + 1)
    return [first, second]


def stirling_reconstruction_check(n_max: int = 12, signless_max: int = 20) -> list[VerificationReport]:
    x = MultiPoly.var("x")
    falling = VerificationReport("(x)_n = sum s1(n,k) x^k", {"n_max": n_max})
    powers = VerificationReport("x^n = sum s2(n,k) (x)_k", {"n_max": n_max})
    for n in range(n_max + 1):
        lhs = sum((x**k * stirling_first(n, k) for k in range(n + 1)), MultiPoly())
        falling.check(lhs == falling_factorial(x, n), n=n)
        rhs = sum((falling_factorial(x, k) * stirling_second(n, k) for k in range(n + 1)), MultiPoly())
        powers.check(rhs == x**n, n=n)
    signs = VerificationReport("signless s1 = (-1)^(n-k) s1", {"n_max": signless_max})
    for n in range(signless_max + 1):
        for k in range(n + 1):
            signs.check(stirling_first_signless(n, k) == (-1) ** (n - k) * stirling_first(n, k), n=n, k=k)
    return [falling, powers, signs]


def pascal_check(n_max: int = 8) -> list[VerificationReport]:
    report = VerificationReport("P(x) P(z) = P(x+z)", {"n_max": n_max})
    x, z = MultiPoly.var("x"), MultiPoly.var("z")
    for n in range(n_max + 1):
        lhs = tri_mul(build_matrix("pascal", n, x), build_matrix("pascal", n, z))
        report.check(lhs == build_matrix("pascal", n, x + z), n=n)
    return [report]


def gf_stirling_check(m_max: int = 8, l_max: int = 15) -> list[VerificationReport]:
    """(e^t - 1)^m = m! sum_l s2(l, m) t^l / l!."""
    report = VerificationReport("(e^t-1)^m coefficients = m! s2(l,m)/l!", {"m_max": m_max, "l_max": l_max})
    base = series_expm1(Fraction(1), l_max)
    for m in range(1, m_max + 1):
        power = series_pow(base, m)
        for l in range(l_max + 1):
            expected = Fraction(math.factorial(m) * stirling_second(l, m), math.factorial(l))
            report.check(power[l] == expected, m=m, l=l)
    return [report]


# -- Daehee / Bernoulli ------------------------------------------------------


def daehee_threeway_check(n_max: int = 8, k_max: int = 4) -> list[VerificationReport]:
    report = VerificationReport("series = composition sum = s1(n+k,k)/C(n+k,k)", {"n_max": n_max, "k_max": k_max})
    series = daehee_family_series(FamilySpec(Family.DAEHEE1), n_max, k_max)
    for k in range(1, k_max + 1):
        for n in range(n_max + 1):
            a = series[n, k]
            b = daehee_numbers_composition(n, k)
            c = daehee_numbers_closed(n, k)
            ok = a == b == c
            report.check(ok, detail="" if ok else f"series={a} composition={b} closed={c}", n=n, k=k)
    return [report]


def first_kind_transform_check(n_max: int = 15, k_max: int = 6) -> list[VerificationReport]:
    reports = []
    for poly in (False, True):
        x = SYMBOLIC if poly else Fraction(0)
        d = daehee_family_series(FamilySpec(Family.DAEHEE1, x=x), n_max, k_max)
        b = daehee_family_series(FamilySpec(Family.BERNOULLI, x=x), n_max, k_max)
        tag = "(x)" if poly else ""
        r1 = VerificationReport(f"B{tag} = S2 D{tag}", {"n_max": n_max, "k_max": k_max})
        _compare_tables(r1, mat_apply(build_matrix("s2", n_max), d), b)
        r2 = VerificationReport(f"D{tag} = S1 B{tag}", {"n_max": n_max, "k_max": k_max})
        _compare_tables(r2, mat_apply(build_matrix("s1", n_max), b), d)
        reports += [r1, r2]
    return reports


def second_kind_transform_check(n_max: int = 10, k_max: int = 5) -> list[VerificationReport]:
    reports = []
    s_signless = build_matrix("signless", n_max)
    s2_signed = build_matrix("signed-s2", n_max)
    for poly in (False, True):
        x = SYMBOLIC if poly else Fraction(0)
        dhat = daehee_family_series(FamilySpec(Family.DAEHEE2, x=x), n_max, k_max)
        b = daehee_family_series(FamilySpec(Family.BERNOULLI, x=x), n_max, k_max)
        if poly:
            b = reflected(b)
        tag = "(x)" if poly else ""
        btag = "(-x)" if poly else ""
        r1 = VerificationReport(f"Dhat{tag} = signless-S1 B{btag}", {"n_max": n_max, "k_max": k_max})
        _compare_tables(r1, mat_apply(s_signless, b), dhat)
        r2 = VerificationReport(f"B{btag} = signed-S2 Dhat{tag}", {"n_max": n_max, "k_max": k_max})
        _compare_tables(r2, mat_apply(s2_signed, dhat), b)
        reports += [r1, r2]
    return reports


def norlund_check(m_max: int = 12, k_max: int = 5, poly_m_max: int = 8, poly_k_max: int = 4) -> list[VerificationReport]:
    numbers = VerificationReport("D_m^(k) = m! b_m^(-k)", {"m_max": m_max, "k_max": k_max})
    d = daehee_family_series(FamilySpec(Family.DAEHEE1), m_max, k_max)
    for k in range(1, k_max + 1):
        for m in range(m_max + 1):
            numbers.check(d[m, k] == norlund_b(m, k) * math.factorial(m), m=m, k=k)
    polys = VerificationReport("D_m^(k)(z) = m! sum C(z,m-n) b_n^(-k)", {"m_max": poly_m_max, "k_max": poly_k_max})
    dx = daehee_family_series(FamilySpec(Family.DAEHEE1, x=SYMBOLIC), poly_m_max, poly_k_max)
    for k in range(1, poly_k_max + 1):
        for m in range(poly_m_max + 1):
            polys.check(daehee_poly_via_norlund(m, k) == dx[m, k].rename("x", "z"), m=m, k=k)
    generic = VerificationReport("b_n^(x) at x=-k equals b_n^(-k)", {"n_max": poly_m_max, "k_max": poly_k_max})
    for n in range(poly_m_max + 1):
        bx = norlund_polynomial(n)
        for k in range(poly_k_max + 1):
            generic.check(bx.evaluate({"x": -k}) == norlund_b(n, k), n=n, k=k)
    return [numbers, polys, generic]


# -- lambda families ---------------------------------------------------------


def lambda_forms_check(n_max: int = 8, k_max: int = 4) -> list[VerificationReport]:
    bounds = {"n_max": n_max, "k_max": k_max}
    s1, s2 = build_matrix("s1", n_max), build_matrix("s2", n_max)
    d = daehee_family_series(FamilySpec(Family.LAMBDA1, x=SYMBOLIC), n_max, k_max)
    dhat = daehee_family_series(FamilySpec(Family.LAMBDA2, x=SYMBOLIC), n_max, k_max)
    h = lambda_bernoulli(n_max, k_max)
    h1 = lambda1_bernoulli(n_max, k_max)

    fwd1 = VerificationReport("D_lambda(x) = S1 Lambda B(x/lambda)", bounds)
    _compare_tables(fwd1, mat_apply(s1, h), d)
    back1 = VerificationReport("Lambda B(x/lambda) = S2 D_lambda(x)", bounds)
    _compare_tables(back1, mat_apply(s2, d), h)
    fwd2 = VerificationReport("Dhat_lambda(x) = S1 Lambda_1 B(-x/lambda)", bounds)
    _compare_tables(fwd2, mat_apply(s1, h1), dhat)
    back2 = VerificationReport("Lambda_1 B(-x/lambda) = S2 Dhat_lambda(x)", bounds)
    _compare_tables(back2, mat_apply(s2, dhat), h1)

    # lambda^l B_l(k + x/lambda) written directly, without the reflection identity
    bx = bernoulli_polynomials(n_max, k_max)
    lam = MultiPoly.var("lambda")
    h2 = SequenceTable(
        "bernoulli",
        [
            [poly_homogenize(bx[n, k], n).substitute({"x": MultiPoly.var("x") + lam * k}) for k in range(k_max + 1)]
            for n in range(n_max + 1)
        ],
    )
    direct2 = VerificationReport("Dhat_lambda(x) = sum s1 lambda^l B_l(k + x/lambda)", bounds)
    _compare_tables(direct2, mat_apply(s1, h2), dhat)
    shifted = VerificationReport("Lambda B(k + x/lambda) = Lambda_1 B(-x/lambda)", bounds)
    _compare_tables(shifted, h2, h1)

    reduce = VerificationReport("lambda := 1 reduces to the plain families", bounds)
    plain1 = daehee_family_series(FamilySpec(Family.DAEHEE1, x=SYMBOLIC), n_max, k_max)
    _compare_tables(reduce, d.evaluate({"lambda": 1}), plain1, family="lambda1")
    # the second kind at lambda = 1 has generating function (log(1+t)/t)^k (1+t)^(k+x)
    for n in range(n_max + 1):
        for k in range(k_max + 1):
            want = plain1[n, k].substitute({"x": MultiPoly.var("x") + k})
            reduce.check(want == dhat[n, k].evaluate({"lambda": 1}), n=n, k=k, family="lambda2")
    return [fwd1, back1, fwd2, back2, direct2, shifted, reduce]


def lambda_composition_check(m_max: int = 6, k_max: int = 4) -> list[VerificationReport]:
    """D_{m,lambda}^(k)(lambda x) by composition enumeration and by series substitution."""
    report = VerificationReport("D_{m,lambda}(lambda x) composition formula", {"m_max": m_max, "k_max": k_max})
    at_zero = VerificationReport("D_{m,lambda} composition formula at x=0", {"m_max": m_max, "k_max": k_max})
    d = daehee_family_series(FamilySpec(Family.LAMBDA1, x=SYMBOLIC), m_max, k_max)
    lamx = MultiPoly.var("lambda") * MultiPoly.var("x")
    for k in range(k_max + 1):
        via_series = lambda_daehee_substitution(m_max, k)
        via_series0 = lambda_daehee_substitution(m_max, k, x=0)
        for m in range(m_max + 1):
            direct = d[m, k].substitute({"x": lamx})
            brute = lambda_daehee_composition(m, k)
            ok = direct == brute == via_series[m]
            report.check(ok, detail="" if ok else _diff_detail(direct, brute), m=m, k=k)
            direct0 = d[m, k].evaluate({"x": 0})
            ok0 = direct0 == lambda_daehee_composition(m, k, x=0) == via_series0[m]
            at_zero.check(ok0, m=m, k=k)
    return [report, at_zero]


def reflection_check(n_max: int = 10, k_max: int = 5) -> list[VerificationReport]:
    report = VerificationReport("B_n^(k)(k-x) = (-1)^n B_n^(k)(x)", {"n_max": n_max, "k_max": k_max})
    b = bernoulli_polynomials(n_max, k_max)
    x = MultiPoly.var("x")
    for n in range(n_max + 1):
        for k in range(k_max + 1):
            lhs = b[n, k].substitute({"x": k - x})
            rhs = b[n, k] * (-1) ** n
            report.check(lhs == rhs, detail="" if lhs == rhs else _diff_detail(lhs, rhs), n=n, k=k)
    return [report]


# -- twisted families --------------------------------------------------------


def twisted_scaling_check(n_max: int = 8, k_max: int = 4) -> list[VerificationReport]:
    bounds = {"n_max": n_max, "k_max": k_max}
    xi = MultiPoly.var("xi")
    s1, s2 = build_matrix("s1", n_max), build_matrix("s2", n_max)
    xi_diag = build_matrix("diag", n_max, xi)
    reports = []
    for first in (True, False):
        fam, lam_fam = (Family.TWISTED1, Family.LAMBDA1) if first else (Family.TWISTED2, Family.LAMBDA2)
        tag = "D" if first else "Dhat"
        tw = daehee_family_series(FamilySpec(fam, x=SYMBOLIC), n_max, k_max)
        lam_table = daehee_family_series(FamilySpec(lam_fam, x=SYMBOLIC), n_max, k_max)

        scaling = VerificationReport(f"{tag}_xi(x|lambda) = xi^n {tag}_lambda(x)", bounds)
        _compare_tables(scaling, mat_apply(xi_diag, lam_table), tw)
        if first:
            spec = VerificationReport("x=0 and lambda=1 specializations of the scaling law", bounds)
            plain = daehee_family_series(FamilySpec(Family.DAEHEE1, x=SYMBOLIC), n_max, k_max)
            _compare_tables(spec, tw.evaluate({"x": 0}), mat_apply(xi_diag, lam_table.evaluate({"x": 0})), at="x=0")
            _compare_tables(spec, tw.evaluate({"lambda": 1}), mat_apply(xi_diag, plain), at="lambda=1")
            reports.append(spec)

        base = lambda_bernoulli(n_max, k_max) if first else lambda1_bernoulli(n_max, k_max)
        btag = "Lambda B(x/lambda)" if first else "Lambda_1 B(-x/lambda)"
        forward = VerificationReport(f"{tag}_xi(x|lambda) = Xi S1 {btag}", bounds)
        _compare_tables(forward, mat_apply(xi_diag, mat_apply(s1, base)), tw)
        unscaled = tw.map_rows(lambda n, p: unscale_xi(p, n))
        backward = VerificationReport(f"{btag} = S2 Xi^-1 {tag}_xi(x|lambda)", bounds)
        _compare_tables(backward, mat_apply(s2, unscaled), base)
        reports += [scaling, forward, backward]
    return reports


def corrected_inversion_check(which: str, m_max: int = 6, k_max: int = 4, xi=None) -> list[VerificationReport]:
    """lambda^m B_m(x/lambda) (or B_m(k + x/lambda)) = sum_n D_{n,xi} xi^-n s2(m,n).

    With ``xi=None`` the identity is checked symbolically in xi; otherwise at
    the given nonzero rational.
    """
    if which not in KINDS:
        raise ValueError(f"which must be one of {KINDS}")
    if xi is not None and Fraction(xi) == 0:
        raise DomainError("xi must be nonzero")
    first = which == "first"
    fam = Family.TWISTED1 if first else Family.TWISTED2
    label = "lambda^m B_m(x/lambda)" if first else "lambda^m B_m(k + x/lambda)"
    params = {"m_max": m_max, "k_max": k_max, "xi": "symbolic" if xi is None else str(xi)}
    report = VerificationReport(f"{label} = sum D_xi xi^-n s2(m,n)", params)
    tw = daehee_family_series(FamilySpec(fam, x=SYMBOLIC, xi=xi), m_max, k_max)
    bx = bernoulli_polynomials(m_max, k_max)
    lam = MultiPoly.var("lambda")
    for k in range(k_max + 1):
        col = tw.column(k)
        for m in range(m_max + 1):
            lhs = poly_homogenize(bx[m, k], m)
            if not first:
                lhs = lhs.substitute({"x": MultiPoly.var("x") + lam * k})
            rhs = corrected_rhs(col, m, xi)
            report.check(lhs == rhs, detail="" if lhs == rhs else _diff_detail(lhs, rhs), m=m, k=k)
    return [report]


def contradiction_demo(
    which: str, xi=Fraction(2), lam: int = 1, x: int = 1, m_max: int = 3, k_max: int = 2, m_min: int = 1
) -> list[VerificationReport]:
    """Evaluate the originally published inversion and the corrected one at a numeric point.

    Claims are the original inversion at each (k, m); controls are the
    corrected inversion at the same points. With xi^lambda = 1 the twisted
    Bernoulli side does not exist, so only controls are recorded.
    """
    if which not in KINDS:
        raise ValueError(f"which must be one of {KINDS}")
    xi = Fraction(xi)
    if xi == 0:
        raise DomainError("xi must be nonzero")
    if Fraction(x).denominator != 1:
        raise DomainError("x must be an integer so that xi^(-x) is rational")
    x = int(x)
    lam = int(lam)
    first = which == "first"
    fam = Family.TWISTED1 if first else Family.TWISTED2
    params = {"xi": str(xi), "lambda": lam, "x": x, "m_min": m_min, "m_max": m_max, "k_max": k_max}
    singular = xi**lam == 1
    if singular:
        # nothing to refute: only the corrected form is checked
        report = VerificationReport(f"corrected {which}-kind inversion holds", params)
        report.note = "xi^lambda = 1: twisted Bernoulli side undefined, corrected form only"
    else:
        report = VerificationReport(f"original {which}-kind inversion refuted, corrected form holds", params, kind="refutation")
    tw = daehee_family_series(FamilySpec(fam, x=Fraction(x), lam=Fraction(lam), xi=xi), m_max, k_max)
    b = bernoulli_polynomials(m_max, k_max)
    for k in range(1, k_max + 1):
        col = tw.column(k)
        shift = lam * k if not first else 0
        y = x + shift
        corrected_lhs = [b[m, k].evaluate({"x": Fraction(y, lam)}) * Fraction(lam) ** m for m in range(m_max + 1)]
        twisted = None if singular else twisted_bernoulli_eval(k, xi, lam, y, m_max)
        for m in range(m_min, m_max + 1):
            if twisted is not None:
                lhs = twisted[m]
                rhs = original_rhs(col, m, xi, shift + x)
                report.check(lhs == rhs, detail=_diff_detail(lhs, rhs), xi=xi, lam=lam, x=x, k=k, m=m)
            c_rhs = corrected_rhs(col, m, xi)
            report.check(corrected_lhs[m] == c_rhs, role="control", xi=xi, lam=lam, x=x, k=k, m=m)
    return [report]


# -- route agreement ---------------------------------------------------------


def family_routes_check(n_max: int = 6, k_max: int = 3) -> list[VerificationReport]:
    """Series route and Stirling-transform route agree for every family."""
    reports = []
    specs = []
    for fam in (Family.BERNOULLI, Family.DAEHEE1, Family.DAEHEE2, Family.LAMBDA1, Family.LAMBDA2, Family.TWISTED1, Family.TWISTED2):
        specs += [FamilySpec(fam), FamilySpec(fam, x=SYMBOLIC)]
    specs.append(FamilySpec(Family.NORLUND))
    specs.append(FamilySpec(Family.LAMBDA1, x=Fraction(3, 2), lam=Fraction(1, 3)))
    specs.append(FamilySpec(Family.TWISTED2, x=SYMBOLIC, lam=Fraction(2), xi=Fraction(-3, 5)))
    for spec in specs:
        mode = "polynomials" if spec.polynomial else "numbers"
        extra = "".join(f" {k}={v}" for k, v in spec.bindings().items() if k != "x")
        r = VerificationReport(f"{spec.family} {mode}{extra}: series = Stirling route", {"n_max": n_max, "k_max": k_max})
        _compare_tables(r, daehee_family_series(spec, n_max, k_max), daehee_family_stirling(spec, n_max, k_max))
        reports.append(r)
    return reports


def twisted_bernoulli_check(n_max: int = 8, k_max: int = 4) -> list[VerificationReport]:
    report = VerificationReport("twisted Bernoulli: series inversion = Stirling expansion", {"n_max": n_max, "k_max": k_max})
    for xi, lam, x in ((Fraction(2), 1, 0), (Fraction(2), 1, 1), (Fraction(1, 3), 2, -1), (Fraction(-2), 3, 4)):
        for k in range(k_max + 1):
            a = twisted_bernoulli_eval(k, xi, lam, x, n_max)
            b = twisted_bernoulli_stirling(k, xi, lam, x, n_max)
            for m in range(n_max + 1):
                report.check(a[m] == b[m], xi=xi, lam=lam, x=x, k=k, m=m)
    return [report]


@dataclass(frozen=True)
class Suite:
    name: str
    run: Callable[..., list[VerificationReport]]
    description: str


def _bounded(fn, n_key="n_max", k_key="k_max"):
    def run(n=None, k=None, **_):
        kwargs = {}
        if n is not None:
            kwargs[n_key] = n
        if k is not None:
            kwargs[k_key] = k
        return fn(**kwargs)

    return run


def _contradiction(which):
    def run(n=None, k=None, xi=None, lam=None, x=None, **_):
        kwargs = {}
        if n is not None:
            kwargs["m_max"] = n
        if k is not None:
            kwargs["k_max"] = k
        if xi is not None:
            kwargs["xi"] = xi
        if lam is not None:
            kwargs["lam"] = lam
        if x is not None:
            kwargs["x"] = x
        return contradiction_demo(which, **kwargs)

    return run


def _corrected(which):
    def run(n=None, k=None, xi=None, **_):
        kwargs = {"xi": xi}
        if n is not None:
            kwargs["m_max"] = n
        if k is not None:
            kwargs["k_max"] = k
        return corrected_inversion_check(which, **kwargs)

    return run


SUITES = {
    s.name: s
    for s in (
        Suite("stirling-inverse", lambda n=None, **_: stirling_inverse_check(*(() if n is None else (n,))), "S2 S1 = I and signed S2 times signless S1 = I"),
        Suite("stirling-reconstruction", lambda n=None, **_: stirling_reconstruction_check(*(() if n is None else (n,))), "falling factorial expansions and sign relation"),
        Suite("pascal", lambda n=None, **_: pascal_check(*(() if n is None else (n,))), "P(x) P(z) = P(x+z)"),
        Suite("gf-stirling", _bounded(gf_stirling_check, "l_max", "m_max"), "(e^t-1)^m coefficients"),
        Suite("daehee-threeway", _bounded(daehee_threeway_check), "series, composition sum and closed form agree"),
        Suite("transforms-first", _bounded(first_kind_transform_check), "B = S2 D and D = S1 B, numbers and polynomials"),
        Suite("transforms-second", _bounded(second_kind_transform_check), "second-kind Stirling transforms"),
        Suite("norlund", _bounded(norlund_check, "m_max", "k_max"), "Noerlund relations"),
        Suite("lambda-forms", _bounded(lambda_forms_check), "lambda-Daehee matrix forms and lambda=1 reduction"),
        Suite("lambda-composition", _bounded(lambda_composition_check, "m_max", "k_max"), "lambda-Daehee composition formula"),
        Suite("reflection", _bounded(reflection_check), "B_n^(k)(k-x) = (-1)^n B_n^(k)(x)"),
        Suite("twisted-scaling", _bounded(twisted_scaling_check), "xi^n scaling law and twisted matrix forms"),
        Suite("corrected-59", _corrected("first"), "corrected inversion, first kind"),
        Suite("corrected-71", _corrected("second"), "corrected inversion, second kind"),
        Suite("original-54", _contradiction("first"), "counterexample to the original first-kind inversion"),
        Suite("original-67", _contradiction("second"), "counterexample to the original second-kind inversion"),
        Suite("family-routes", _bounded(family_routes_check), "series and Stirling routes agree per family"),
        Suite("twisted-bernoulli", _bounded(twisted_bernoulli_check), "twisted Bernoulli by two routes"),
    )
}


def run_suite(name: str, **bounds) -> list[VerificationReport]:
    if name == "all":
        reports = []
        for suite in SUITES.values():
            reports += suite.run(**bounds)
        return reports
    try:
        suite = SUITES[name]
    except KeyError:
        raise ValueError(f"unknown suite {name!r}; expected one of {sorted(SUITES) + ['all']}") from None
    return suite.run(**bounds)
