"""JSON encodings.  Polynomials are ascending arrays of decimal strings."""
from __future__ import annotations

from fractions import Fraction

from .exactmath import IntPolynomial, RationalFunction


def poly_json(p: IntPolynomial) -> list[str]:
    return [str(c) for c in p.coeffs] or ["0"]


def rf_json(f: RationalFunction) -> dict:
    return {"num": poly_json(f.num), "den": poly_json(f.den)}


def rf_from_json(d: dict) -> RationalFunction:
    return RationalFunction(IntPolynomial(int(c) for c in d["num"]), IntPolynomial(int(c) for c in d["den"]))


def fraction_str(x: Fraction) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
