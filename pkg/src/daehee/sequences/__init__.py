"""Special number and polynomial families, their identities and verification suites."""
from .families import (
    SYMBOLIC,
    Family,
    FamilySpec,
    bernoulli_numbers,
    bernoulli_polynomials,
    daehee_family_series,
    daehee_family_stirling,
    daehee_numbers_closed,
    daehee_numbers_composition,
    daehee_poly_via_norlund,
    daehee_polynomial_closed,
    family_table,
    lambda_daehee_composition,
    lambda_daehee_substitution,
    norlund_b,
    norlund_polynomial,
)
from .twisted import twisted_bernoulli_eval, twisted_bernoulli_stirling
from .verify import (
    SUITES,
    VerificationReport,
    contradiction_demo,
    corrected_inversion_check,
    reflection_check,
    run_suite,
    twisted_scaling_check,
)
