"""Exact computations with Coxeter groups, their Hecke algebras, the Deodhar
complex, and the Euler characteristic identity chi_H * p_(W,S)(q) = 1."""
from .coxeter import CoxeterMatrix, build_ball, catalog, parse_coxeter, poincare_exact
from .deodhar import build_complex, homology, sign_map, verify_truncated_acyclicity
from .euler import chi, verify_theorem_A
from .expr import format_element, parse_element
from .hecke import HeckeElement, canonical_trace, idempotent, mul

__version__ = "0.1.0"

__all__ = [
    "CoxeterMatrix",
    "HeckeElement",
    "build_ball",
    "build_complex",
    "canonical_trace",
    "catalog",
    "chi",
    "format_element",
    "homology",
    "idempotent",
    "mul",
    "parse_coxeter",
    "parse_element",
    "poincare_exact",
    "sign_map",
    "verify_theorem_A",
    "verify_truncated_acyclicity",
]
