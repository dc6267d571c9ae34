"""Reduced rational functions in q with integer polynomial numerator and denominator."""
from __future__ import annotations

from fractions import Fraction
from math import gcd

from .poly import ONE, ZERO, IntPolynomial, format_poly, poly_gcd


class NotExpandableError(ValueError):
    pass


class RationalFunction:
    """A fraction ``num/den`` kept in canonical form.

    Canonical form: numerator and denominator share no common polynomial or
    integer factor, the denominator has positive leading coefficient, and
    zero is ``0/1``.  Equality is therefore structural.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=ONE):
        num = IntPolynomial.coerce(num)
        den = IntPolynomial.coerce(den)
        if not den:
            raise ZeroDivisionError("zero denominator")
        if not num:
            self.num, self.den = ZERO, ONE
            return
        if den.is_one():
            self.num, self.den = num, den
            return
        g = poly_gcd(num, den)
        if not g.is_one():
            num, den = num.exact_div(g), den.exact_div(g)
        c = gcd(num.content(), den.content())
        if den.lead < 0:
            c = -c
        if c != 1:
            num, den = num.exact_div(c), den.exact_div(c)
        self.num, self.den = num, den

    @classmethod
    def coerce(cls, x) -> "RationalFunction":
        if isinstance(x, RationalFunction):
            return x
        if isinstance(x, Fraction):
            return cls(IntPolynomial.constant(x.numerator), IntPolynomial.constant(x.denominator))
        return cls(x)

    def is_zero(self) -> bool:
        return not self.num

    def __bool__(self) -> bool:
        return bool(self.num)

    def is_polynomial(self) -> bool:
        return self.den.is_one()

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, IntPolynomial, Fraction)):
            other = RationalFunction.coerce(other)
        if not isinstance(other, RationalFunction):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def __neg__(self) -> "RationalFunction":
        r = object.__new__(RationalFunction)
        r.num, r.den = -self.num, self.den
        return r

    def __add__(self, other) -> "RationalFunction":
        try:
            other = RationalFunction.coerce(other)
        except TypeError:
            return NotImplemented
        if self.den == other.den:
            return RationalFunction(self.num + other.num, self.den)
        return RationalFunction(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __sub__(self, other) -> "RationalFunction":
        try:
            other = RationalFunction.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "RationalFunction":
        return (-self) + other

    def __mul__(self, other) -> "RationalFunction":
        try:
            other = RationalFunction.coerce(other)
        except TypeError:
            return NotImplemented
        return RationalFunction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def inverse(self) -> "RationalFunction":
        if not self.num:
            raise ZeroDivisionError("inverse of zero rational function")
        return RationalFunction(self.den, self.num)

    def __truediv__(self, other) -> "RationalFunction":
        other = RationalFunction.coerce(other)
        return self * other.inverse()

    def __rtruediv__(self, other) -> "RationalFunction":
        return RationalFunction.coerce(other) * self.inverse()

    def __pow__(self, n: int) -> "RationalFunction":
        if n < 0:
            return self.inverse() ** (-n)
        return RationalFunction(self.num ** n, self.den ** n)

    def __call__(self, x) -> Fraction:
        d = self.den(Fraction(x))
        if d == 0:
            raise ZeroDivisionError(f"pole at q = {x}")
        return Fraction(self.num(Fraction(x))) / d

    def __str__(self) -> str:
        if self.den.is_one():
            return str(self.num)
        n = format_poly(self.num.coeffs)
        if len([c for c in self.num.coeffs if c]) > 1:
            n = f"({n})"
        return f"{n}/({format_poly(self.den.coeffs)})"

    def __repr__(self) -> str:
        return f"RationalFunction({list(self.num.coeffs)}, {list(self.den.coeffs)})"


def rf_normalize(num: IntPolynomial, den: IntPolynomial) -> RationalFunction:
    return RationalFunction(num, den)


def rf_series(f: RationalFunction, order: int) -> list[Fraction]:
    """First ``order + 1`` Taylor coefficients of f at q = 0."""
    if order < 0:
        raise ValueError("order must be nonnegative")
    d = f.den.coeffs
    if not d[0]:
        raise NotExpandableError("not expandable at 0: denominator vanishes at q = 0")
    d0 = Fraction(d[0])
    out: list[Fraction] = []
    for n in range(order + 1):
        acc = Fraction(f.num[n])
        for k in range(1, min(n, len(d) - 1) + 1):
            if d[k]:
                acc -= d[k] * out[n - k]
        out.append(acc / d0)
    return out
