"""Exact arithmetic: integer polynomials, rational functions, cyclotomic numbers, Z[q]-matrices."""
from fractions import Fraction as BigRational

from .cyclo import ConductorMismatch, CycloElement, cyclo_mul
from .linalg import (
    PolyMatrix,
    clear_denominators,
    nullspace,
    rank_over_fraction_field,
    solve_in_image,
    solve_many,
)
from .poly import ONE, Q, ZERO, IntPolynomial, cyclotomic_polynomial, poly_gcd, pseudo_remainder
from .ratfunc import NotExpandableError, RationalFunction, rf_normalize, rf_series

__all__ = [
    "BigRational",
    "ConductorMismatch",
    "CycloElement",
    "IntPolynomial",
    "NotExpandableError",
    "ONE",
    "PolyMatrix",
    "Q",
    "RationalFunction",
    "ZERO",
    "clear_denominators",
    "cyclo_mul",
    "cyclotomic_polynomial",
    "nullspace",
    "poly_gcd",
    "pseudo_remainder",
    "rank_over_fraction_field",
    "rf_normalize",
    "rf_series",
    "solve_in_image",
    "solve_many",
]
