"""Worked example tables for n, k <= 3, transcribed by hand as sympy expressions.

Symbols: x, lam, xi. Rows are n = 0..3, columns k = 0..3. Factored forms are
kept as printed so the comparison also exercises expansion.
"""

DAEHEE_NUMBERS = [
    ["1", "1", "1", "1"],
    ["0", "-1/2", "-1", "-3/2"],
    ["0", "2/3", "11/6", "7/2"],
    ["0", "-3/2", "-5", "-45/4"],
]

BERNOULLI_NUMBERS = [
    ["1", "1", "1", "1"],
    ["0", "-1/2", "-1", "-3/2"],
    ["0", "1/6", "5/6", "2"],
    ["0", "0", "-1/2", "-9/4"],
]

BERNOULLI_POLYS = [
    ["1", "1", "1", "1"],
    ["x", "x - 1/2", "x - 1", "x - 3/2"],
    ["x**2", "x**2 - x + 1/6", "x**2 - 2*x + 5/6", "x**2 - 3*x + 2"],
    ["x**3", "x**3 - 3*x**2/2 + x/2", "x**3 - 3*x**2 + 5*x/2 - 1/2", "x**3 - 9*x**2/2 + 6*x - 9/4"],
]

DAEHEE_POLYS = [
    ["1", "1", "1", "1"],
    ["x", "x - 1/2", "x - 1", "x - 3/2"],
    ["x**2 - x", "x**2 - 2*x + 2/3", "x**2 - 3*x + 11/6", "x**2 - 4*x + 7/2"],
    ["x**3 - 3*x**2 + 2*x", "x**3 - 9*x**2/2 + 11*x/2 - 3/2", "x**3 - 6*x**2 + 21*x/2 - 5", "x**3 - 15*x**2/2 + 17*x - 45/4"],
]

SECOND_KIND_NUMBERS = [
    ["1", "1", "1", "1"],
    ["0", "-1/2", "-1", "-3/2"],
    ["0", "-1/3", "-1/6", "1/2"],
    ["0", "-1/2", "0", "3/4"],
]

SECOND_KIND_POLYS = [
    ["1", "1", "1", "1"],
    ["-x", "-x - 1/2", "-x - 1", "-x - 3/2"],
    ["x**2 - x", "x**2 - 1/3", "x**2 + x - 1/6", "x**2 + 2*x + 1/2"],
    ["3*x**2 - x**3 - 2*x", "3*x**2/2 - x**3 + x/2 - 1/2", "3*x/2 - x**3", "x - 3*x**2/2 - x**3 + 3/4"],
]

# B_n^(k)(-x), the right-hand side of the signed second-kind transform
BERNOULLI_POLYS_REFLECTED = [
    ["1", "1", "1", "1"],
    ["-x", "-x - 1/2", "-x - 1", "-x - 3/2"],
    ["x**2", "x**2 + x + 1/6", "x**2 + 2*x + 5/6", "x**2 + 3*x + 2"],
    ["-x**3", "-x**3 - 3*x**2/2 - x/2", "-x**3 - 3*x**2 - 5*x/2 - 1/2", "-x**3 - 9*x**2/2 - 6*x - 9/4"],
]

LAMBDA_FIRST = [
    ["1", "1", "1", "1"],
    ["x", "x - lam/2", "x - lam", "x - 3*lam/2"],
    [
        "x*(x - 1)",
        "lam**2/6 - lam*x + lam/2 + x**2 - x",
        "5*lam**2/6 - 2*lam*x + lam + x**2 - x",
        "2*lam**2 - 3*lam*x + 3*lam/2 + x**2 - x",
    ],
    [
        "x*(x - 1)*(x - 2)",
        "-(lam - 2*x + 2)*(lam - 2*x + x**2 - lam*x)/2",
        "-(lam - x + 1)*(lam**2 - 4*lam*x + 4*lam + 2*x**2 - 4*x)/2",
        "-(3*lam - 2*x + 2)*(3*lam**2 - 6*lam*x + 6*lam + 2*x**2 - 4*x)/4",
    ],
]

LAMBDA_SECOND = [
    ["1", "1", "1", "1"],
    ["x", "lam/2 + x", "lam + x", "3*lam/2 + x"],
    [
        "x*(x - 1)",
        "lam**2/6 + lam*x - lam/2 + x**2 - x",
        "5*lam**2/6 + 2*lam*x - lam + x**2 - x",
        "2*lam**2 + 3*lam*x - 3*lam/2 + x**2 - x",
    ],
    [
        "x*(x - 1)*(x - 2)",
        "-(lam + 2*x - 2)*(lam + 2*x - x**2 - lam*x)/2",
        "(lam + x - 1)*(lam**2 + 4*lam*x - 4*lam + 2*x**2 - 4*x)/2",
        "(3*lam + 2*x - 2)*(3*lam**2 + 6*lam*x - 6*lam + 2*x**2 - 4*x)/4",
    ],
]

# Row 1, k = 3 of both twisted tables is printed with 3*xi inside the bracket;
# only 3*lam is consistent with the xi^n scaling of the lambda tables, so that
# is what is transcribed here.
TWISTED_FIRST = [
    ["1", "1", "1", "1"],
    ["xi*x", "-xi/2*(lam - 2*x)", "-xi*(lam - x)", "-xi/2*(3*lam - 2*x)"],
    [
        "xi**2*x*(x - 1)",
        "xi**2*(lam**2/6 - lam*x + lam/2 + x**2 - x)",
        "xi**2*(5*lam**2/6 - 2*lam*x + lam + x**2 - x)",
        "xi**2*(2*lam**2 - 3*lam*x + 3*lam/2 + x**2 - x)",
    ],
    [
        "xi**3*x*(x - 1)*(x - 2)",
        "-xi**3/2*(lam - 2*x + 2)*(lam - 2*x + x**2 - lam*x)",
        "-xi**3/2*(lam - x + 1)*(lam**2 - 4*lam*x + 4*lam + 2*x**2 - 4*x)",
        "-xi**3/4*(3*lam - 2*x + 2)*(3*lam**2 - 6*lam*x + 6*lam + 2*x**2 - 4*x)",
    ],
]

TWISTED_SECOND = [
    ["1", "1", "1", "1"],
    ["xi*x", "xi/2*(lam + 2*x)", "xi*(lam + x)", "xi/2*(3*lam + 2*x)"],
    [
        "xi**2*x*(x - 1)",
        "xi**2*(lam**2/6 + lam*x - lam/2 + x**2 - x)",
        "xi**2*(5*lam**2/6 + 2*lam*x - lam + x**2 - x)",
        "xi**2*(2*lam**2 + 3*lam*x - 3*lam/2 + x**2 - x)",
    ],
    [
        "xi**3*x*(x - 1)*(x - 2)",
        "-xi**3/2*(lam + 2*x - 2)*(lam + 2*x - x**2 - lam*x)",
        "xi**3/2*(lam + x - 1)*(lam**2 + 4*lam*x - 4*lam + 2*x**2 - 4*x)",
        "xi**3/4*(3*lam + 2*x - 2)*(3*lam**2 + 6*lam*x - 6*lam + 2*x**2 - 4*x)",
    ],
]

# (family, x mode, reference grid, golden file stem)
WORKED = [
    ("daehee1", "0", DAEHEE_NUMBERS, "table_daehee1_numbers"),
    ("bernoulli", "0", BERNOULLI_NUMBERS, "table_bernoulli_numbers"),
    ("daehee1", "sym", DAEHEE_POLYS, "table_daehee1_polys"),
    ("bernoulli", "sym", BERNOULLI_POLYS, "table_bernoulli_polys"),
    ("daehee2", "0", SECOND_KIND_NUMBERS, "table_daehee2_numbers"),
    ("daehee2", "sym", SECOND_KIND_POLYS, "table_daehee2_polys"),
    ("lambda1", "sym", LAMBDA_FIRST, "table_lambda1_polys"),
    ("lambda2", "sym", LAMBDA_SECOND, "table_lambda2_polys"),
    ("twisted1", "sym", TWISTED_FIRST, "table_twisted1_polys"),
    ("twisted2", "sym", TWISTED_SECOND, "table_twisted2_polys"),
]
