"""Dense univariate polynomials over the integers, in the variable ``q``.

Coefficients are stored in ascending order of degree as a tuple of Python
ints, trimmed so that the last stored coefficient is nonzero.  The zero
polynomial is the empty tuple.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence, Union

Scalar = Union[int, Fraction]


class IntPolynomial:
    __slots__ = ("coeffs", "_hash")

    def __init__(self, coeffs: Iterable[int] = ()):
        c = list(coeffs)
        while c and not c[-1]:
            c.pop()
        for x in c:
            if not isinstance(x, int):
                raise TypeError(f"integer coefficients required, got {x!r}")
        self.coeffs = tuple(c)
        self._hash = None

    # -- constructors -------------------------------------------------
    @classmethod
    def _raw(cls, coeffs: tuple) -> "IntPolynomial":
        # coeffs already trimmed ints
        p = object.__new__(cls)
        p.coeffs = coeffs
        p._hash = None
        return p

    @classmethod
    def constant(cls, c: int) -> "IntPolynomial":
        return cls._raw((c,)) if c else ZERO

    @classmethod
    def monomial(cls, c: int, k: int) -> "IntPolynomial":
        if not c:
            return ZERO
        return cls._raw((0,) * k + (c,))

    @classmethod
    def coerce(cls, x) -> "IntPolynomial":
        if isinstance(x, IntPolynomial):
            return x
        if isinstance(x, int):
            return cls.constant(x)
        raise TypeError(f"cannot coerce {x!r} to IntPolynomial")

    # -- basic queries ------------------------------------------------
    @property
    def degree(self) -> int:
        """Degree, with ``-1`` for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def lead(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    @property
    def valuation(self) -> int:
        """Lowest power of q with a nonzero coefficient (-1 for zero)."""
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        return -1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_one(self) -> bool:
        return self.coeffs == (1,)

    def is_monomial(self) -> bool:
        return sum(1 for c in self.coeffs if c) == 1

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __len__(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __eq__(self, other) -> bool:
        if isinstance(other, IntPolynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, int):
            return self.coeffs == ((other,) if other else ())
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(("IntPolynomial", self.coeffs))
        return self._hash

    # -- ring operations ----------------------------------------------
    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial._raw(tuple(-c for c in self.coeffs))

    def __add__(self, other) -> "IntPolynomial":
        if isinstance(other, int):
            other = IntPolynomial.constant(other)
        elif not isinstance(other, IntPolynomial):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        while out and not out[-1]:
            out.pop()
        return IntPolynomial._raw(tuple(out))

    __radd__ = __add__

    def __sub__(self, other) -> "IntPolynomial":
        if isinstance(other, int):
            other = IntPolynomial.constant(other)
        elif not isinstance(other, IntPolynomial):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "IntPolynomial":
        return (-self) + other

    def __mul__(self, other) -> "IntPolynomial":
        if isinstance(other, int):
            if not other:
                return ZERO
            return IntPolynomial._raw(tuple(c * other for c in self.coeffs))
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return ZERO
        if len(b) == 1:
            return self * b[0]
        if len(a) == 1:
            return other * a[0]
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        out[i + j] += x * y
        while out and not out[-1]:
            out.pop()
        return IntPolynomial._raw(tuple(out))

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "IntPolynomial":
        if n < 0:
            raise ValueError("negative power")
        result, base = ONE, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, k: int) -> "IntPolynomial":
        """Multiply by q**k."""
        if not self.coeffs or k == 0:
            return self
        return IntPolynomial._raw((0,) * k + self.coeffs)

    def __call__(self, x: Scalar) -> Scalar:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    # -- division -----------------------------------------------------
    def divmod_exact(self, other: "IntPolynomial") -> tuple["IntPolynomial", "IntPolynomial"]:
        """Long division over the integers.

        Raises ``ArithmeticError`` if a quotient coefficient would not be an
        integer; that is always the case when the divisor is monic.
        """
        if not other.coeffs:
            raise ZeroDivisionError("polynomial division by zero")
        r = list(self.coeffs)
        b = other.coeffs
        db, lb = len(b) - 1, b[-1]
        if len(r) - 1 < db:
            return ZERO, self
        quot = [0] * (len(r) - db)
        for i in range(len(r) - 1, db - 1, -1):
            c = r[i]
            if not c:
                continue
            t, rem = divmod(c, lb)
            if rem:
                raise ArithmeticError("inexact integer polynomial division")
            quot[i - db] = t
            off = i - db
            for j, y in enumerate(b):
                if y:
                    r[off + j] -= t * y
        return IntPolynomial(quot), IntPolynomial(r[:db])

    def exact_div(self, other) -> "IntPolynomial":
        if isinstance(other, int):
            out = []
            for c in self.coeffs:
                t, rem = divmod(c, other)
                if rem:
                    raise ArithmeticError("inexact integer division")
                out.append(t)
            return IntPolynomial._raw(tuple(out))
        if other.coeffs == (1,):
            return self
        if len(other.coeffs) == 1:
            return self.exact_div(other.coeffs[0])
        quot, rem = self.divmod_exact(other)
        if rem:
            raise ArithmeticError(f"{other} does not divide {self}")
        return quot

    def __floordiv__(self, other) -> "IntPolynomial":
        return self.exact_div(other)

    def content(self) -> int:
        """gcd of the coefficients, carrying the sign of the leading one."""
        g = 0
        for c in self.coeffs:
            g = gcd(g, c)
            if g == 1:
                break
        if self.coeffs and self.coeffs[-1] < 0:
            g = -g
        return g

    def primitive(self) -> "IntPolynomial":
        """Primitive part with positive leading coefficient."""
        if not self.coeffs:
            return self
        return self.exact_div(self.content())

    def derivative(self) -> "IntPolynomial":
        return IntPolynomial(i * c for i, c in enumerate(self.coeffs) if i)

    # -- display ------------------------------------------------------
    def __str__(self) -> str:
        return format_poly(self.coeffs)

    def __repr__(self) -> str:
        return f"IntPolynomial({list(self.coeffs)})"


def format_poly(coeffs: Sequence, var: str = "q") -> str:
    """Render ascending coefficients as e.g. ``q^2-q+1`` (descending powers)."""
    parts = []
    for k in range(len(coeffs) - 1, -1, -1):
        c = coeffs[k]
        if not c:
            continue
        sign = "-" if c < 0 else "+"
        a = -c if c < 0 else c
        if k == 0:
            body = str(a)
        else:
            mono = var if k == 1 else f"{var}^{k}"
            body = mono if a == 1 else f"{a}*{mono}"
        parts.append((sign, body))
    if not parts:
        return "0"
    out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for sign, body in parts[1:]:
        out += sign + body
    return out


ZERO = IntPolynomial._raw(())
ONE = IntPolynomial._raw((1,))
Q = IntPolynomial._raw((0, 1))


def pseudo_remainder(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    """Remainder of lc(b)**k * a by b, for the smallest k that keeps it integral."""
    if not b:
        raise ZeroDivisionError("pseudo-remainder by zero")
    r = list(a.coeffs)
    bc = b.coeffs
    db, lb = len(bc) - 1, bc[-1]
    while len(r) - 1 >= db and r:
        c = r[-1]
        off = len(r) - 1 - db
        g = gcd(c, lb)
        mr, mc = lb // g, c // g
        r = [x * mr for x in r]
        for j, y in enumerate(bc):
            r[off + j] -= mc * y
        while r and not r[-1]:
            r.pop()
    return IntPolynomial(r)


def poly_gcd(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    """gcd in Z[q] via the primitive polynomial remainder sequence.

    The result has positive leading coefficient; gcd(0, 0) = 0.
    """
    if not a:
        return b.primitive() * abs(b.content()) if b else ZERO
    if not b:
        return a.primitive() * abs(a.content())
    c = gcd(a.content(), b.content())
    f, g = a.primitive(), b.primitive()
    if f.degree < g.degree:
        f, g = g, f
    while g:
        r = pseudo_remainder(f, g)
        f, g = g, (r.primitive() if r else r)
    return f.primitive() * c


def cyclotomic_polynomial(n: int) -> IntPolynomial:
    """The n-th cyclotomic polynomial, by dividing q^n - 1 by Phi_d for d | n, d < n."""
    if n < 1:
        raise ValueError("n must be positive")
    return _cyclotomic(n)


_CYCLO_CACHE: dict[int, IntPolynomial] = {}


def _cyclotomic(n: int) -> IntPolynomial:
    if n in _CYCLO_CACHE:
        return _CYCLO_CACHE[n]
    p = IntPolynomial.monomial(1, n) - ONE
    for d in range(1, n):
        if n % d == 0:
            p = p.exact_div(_cyclotomic(d))
    _CYCLO_CACHE[n] = p
    return p
