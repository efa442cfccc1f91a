"""Acceptance suite: one test per criterion, each printing a single PASS/FAIL line.

All comparisons are exact. Run alone with ``pytest tests/test_acceptance.py -v``
(the lines appear in the output regardless of capture) or as a script with
``python tests/test_acceptance.py``.
"""
from __future__ import annotations

import json
import sys
import time
from fractions import Fraction
from pathlib import Path

import pytest
import sympy as sp

sys.path.insert(0, str(Path(__file__).parent))

from conftest import FIXTURES, GOLDEN, grid_mismatches, t  # noqa: E402
from golden_cases import CASES, run_cli  # noqa: E402
from reference_tables import WORKED  # noqa: E402
from daehee.sequences import Family, FamilySpec, SYMBOLIC, contradiction_demo, family_table  # noqa: E402
from daehee.sequences.verify import (  # noqa: E402
    corrected_inversion_check,
    daehee_threeway_check,
    first_kind_transform_check,
    gf_stirling_check,
    lambda_composition_check,
    lambda_forms_check,
    norlund_check,
    reflection_check,
    second_kind_transform_check,
    stirling_inverse_check,
    twisted_scaling_check,
)

F = Fraction
_capsys = None


@pytest.fixture(autouse=True)
def _grab_capsys(capsys):
    global _capsys
    _capsys = capsys
    yield
    _capsys = None


def record(number: int, title: str, ok: bool, detail: str = "") -> None:
    line = f"criterion {number:2d} {'PASS' if ok else 'FAIL'}: {title}" + (f" ({detail})" if detail else "")
    if _capsys is not None:
        with _capsys.disabled():
            print("\n" + line)
    else:
        print(line)
    assert ok, line


def _failures(reports) -> list[str]:
    return [r.summary() for r in reports if not r.ok]


def test_criterion_01_worked_tables():
    bad = []
    for family, x_mode, reference, stem in WORKED:
        spec = FamilySpec(Family(family), x=SYMBOLIC if x_mode == "sym" else F(0))
        for method in ("series", "stirling"):
            miss = grid_mismatches(family_table(spec, 3, 3, method=method), reference)
            if miss:
                bad.append(f"{stem}/{method}: {miss}")
    num = family_table(FamilySpec(Family.DAEHEE1), 3, 3)
    bern = family_table(FamilySpec(Family.BERNOULLI), 3, 3)
    second = family_table(FamilySpec(Family.DAEHEE2), 3, 3)
    lam = family_table(FamilySpec(Family.LAMBDA1, x=SYMBOLIC), 3, 3)
    spot = [
        num[3, 3] == F(-45, 4),
        bern[3, 3] == F(-9, 4),
        second[2, 2] == F(-1, 6),
        str(lam[2, 1]) == "x^2 - x*lambda + 1/6*lambda^2 - x + 1/2*lambda",
    ]
    ok = not bad and all(spot)
    record(1, f"{len(WORKED)} worked tables reproduced entry-exactly by both routes", ok, "; ".join(bad))


def test_criterion_02_three_way_daehee():
    start = time.perf_counter()
    reports = daehee_threeway_check(8, 4)
    elapsed = time.perf_counter() - start
    ok = not _failures(reports) and elapsed < 10
    record(2, "series = composition sum = closed form, n <= 8, 1 <= k <= 4", ok, f"{elapsed:.2f}s")


def test_criterion_03_inverse_pairs():
    reports = stirling_inverse_check(24)
    record(3, "S2 S1 = I and signed-S2 signless-S1 = I, dimensions 1..25", not _failures(reports))


def test_criterion_04_stirling_transforms():
    reports = first_kind_transform_check(15, 6) + second_kind_transform_check(10, 5)
    bad = _failures(reports)
    record(4, "first-kind transforms n <= 15, k <= 6; second-kind transforms n <= 10", not bad, "; ".join(bad))


def test_criterion_05_norlund():
    bad = _failures(norlund_check(12, 5, 8, 4))
    record(5, "D = m! b^(-k) for m <= 12, k <= 5; polynomial form in z for m <= 8, k <= 4", not bad, "; ".join(bad))


def test_criterion_06_gf_stirling():
    bad = _failures(gf_stirling_check(8, 15))
    record(6, "(e^t-1)^m coefficients = m! s2(l,m)/l!, m <= 8, l <= 15", not bad)


def test_criterion_07_lambda_families():
    reports = lambda_forms_check(8, 4) + lambda_composition_check(6, 4)
    bad = _failures(reports)
    record(7, "lambda matrix forms, lambda=1 reduction, composition formula m <= 6", not bad, "; ".join(bad))


def test_criterion_08_reflection():
    bad = _failures(reflection_check(10, 5))
    record(8, "B_n^(k)(k-x) = (-1)^n B_n^(k)(x), n <= 10, k <= 5", not bad)


def test_criterion_09_twisted():
    bad = _failures(twisted_scaling_check(8, 4))
    record(9, "xi^n scaling and twisted matrix forms, symbolic in xi, n <= 8, k <= 4", not bad, "; ".join(bad))


def _sympy_twisted_value(kind: str, n: int, k: int, xi, lam, x):
    """D_{n,xi} (kind 'first') or Dhat_{n,xi} (kind 'second') at a numeric point, straight from sympy."""
    s = xi * t
    kern = lam * sp.log(1 + s) / ((1 + s) ** lam - 1)
    if kind == "second":
        kern *= (1 + s) ** lam
    expr = kern**k * (1 + s) ** x
    return sp.factorial(n) * sp.series(expr, t, 0, n + 1).removeO().coeff(t, n)


def _sympy_witness(kind: str, xi, lam, x, k, m):
    arg = sp.Rational(x, lam) + (k if kind == "second" else 0)
    q = xi**lam
    twisted_b = sp.factorial(m) * sp.series((t / (q * sp.exp(t) - 1)) ** k * sp.exp(arg * t), t, 0, m + 1).removeO().coeff(t, m)
    extra = x + (lam * k if kind == "second" else 0)
    d = [_sympy_twisted_value(kind, n, k, xi, lam, x) for n in range(m + 1)]
    s2 = sp.functions.combinatorial.numbers.stirling
    original_rhs = sum(d[n] * xi ** (-n - extra) * s2(m, n) for n in range(m + 1))
    corrected_lhs = lam**m * sp.bernoulli(m, arg) if k == 1 else None
    corrected_rhs = sum(d[n] * xi ** (-n) * s2(m, n) for n in range(m + 1))
    return lam**m * twisted_b, original_rhs, corrected_lhs, corrected_rhs


def test_criterion_10_corrected_and_contradiction():
    bad = []
    for which in ("first", "second"):
        bad += _failures(corrected_inversion_check(which, 6, 4))
    fixture = json.loads((FIXTURES / "contradiction_witness.json").read_text())
    for which in ("first", "second"):
        (report,) = contradiction_demo(which)
        w = report.counterexample
        want = fixture[which]
        if not report.ok or w is None:
            bad.append(f"{which}: no witness")
            continue
        got = {k: w.params[k] for k in ("k", "m")}
        if got != {"k": want["k"], "m": want["m"]} or w.detail != f"lhs={want['original_lhs']} rhs={want['original_rhs']}":
            bad.append(f"{which}: witness {w.describe()} differs from fixture")
        # independent recomputation of the witness point
        lhs, rhs, c_lhs, c_rhs = _sympy_witness(which, sp.Integer(2), 1, 1, want["k"], want["m"])
        if lhs == rhs:
            bad.append(f"{which}: sympy finds no contradiction at the witness")
        if c_lhs != c_rhs or str(c_lhs) != want["corrected_lhs"]:
            bad.append(f"{which}: sympy corrected sides {c_lhs} vs {c_rhs}")
        if (str(lhs), str(rhs)) != (want["original_lhs"], want["original_rhs"]):
            bad.append(f"{which}: sympy original sides {lhs} vs {rhs}")
    record(10, "corrected inversions hold for m <= 6, k <= 4; committed witnesses refute the originals", not bad, "; ".join(bad))


def test_criterion_11_cli_goldens():
    bad = []
    for name, argv in sorted(CASES.items()):
        code, out = run_cli(argv)
        if code != 0 or out.encode("utf-8") != (GOLDEN / name).read_bytes():
            bad.append(name)
    code, out = run_cli(["verify", "all"])
    if code != 0:
        bad.append("verify all exit status " + str(code))
    record(11, f"{len(CASES)} golden renderings byte-identical and `verify all` exits 0", not bad, ", ".join(bad))


if __name__ == "__main__":
    failed = 0
    for name, fn in list(globals().items()):
        if name.startswith("test_criterion_"):
            try:
                fn()
            except AssertionError:
                failed += 1
    sys.exit(1 if failed else 0)
