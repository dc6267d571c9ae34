"""Elements of the cyclotomic field Q(zeta_n), as residues modulo Phi_n."""
from __future__ import annotations

from fractions import Fraction

from .poly import cyclotomic_polynomial


class ConductorMismatch(ValueError):
    pass


def _reduce(coeffs: list, n: int) -> tuple:
    phi = cyclotomic_polynomial(n).coeffs
    d = len(phi) - 1
    r = list(coeffs)
    # Phi_n is monic, so integral coefficients stay integral
    for i in range(len(r) - 1, d - 1, -1):
        c = r[i]
        if c:
            off = i - d
            for j in range(d):
                if phi[j]:
                    r[off + j] -= c * phi[j]
            r[i] = 0
    r = r[:d]
    while r and not r[-1]:
        r.pop()
    return tuple(r)


class CycloElement:
    __slots__ = ("conductor", "coeffs")

    def __init__(self, conductor: int, coeffs=()):
        if conductor < 1:
            raise ValueError("conductor must be positive")
        self.conductor = conductor
        self.coeffs = _reduce(list(coeffs), conductor)

    @classmethod
    def _raw(cls, n: int, coeffs: tuple) -> "CycloElement":
        e = object.__new__(cls)
        e.conductor = n
        e.coeffs = coeffs
        return e

    @classmethod
    def zeta(cls, n: int, k: int = 1) -> "CycloElement":
        k %= n
        return cls(n, [0] * k + [1])

    @classmethod
    def rational(cls, n: int, x) -> "CycloElement":
        return cls._raw(n, (x,) if x else ())

    def _check(self, other: "CycloElement") -> None:
        if self.conductor != other.conductor:
            raise ConductorMismatch(f"conductors differ: {self.conductor} vs {other.conductor}")

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            return self.coeffs == ((other,) if other else ())
        if not isinstance(other, CycloElement):
            return NotImplemented
        return self.conductor == other.conductor and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.conductor, self.coeffs))

    def __neg__(self) -> "CycloElement":
        return CycloElement._raw(self.conductor, tuple(-c for c in self.coeffs))

    def __add__(self, other) -> "CycloElement":
        if isinstance(other, (int, Fraction)):
            other = CycloElement.rational(self.conductor, other)
        self._check(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        while out and not out[-1]:
            out.pop()
        return CycloElement._raw(self.conductor, tuple(out))

    __radd__ = __add__

    def __sub__(self, other) -> "CycloElement":
        if isinstance(other, (int, Fraction)):
            other = CycloElement.rational(self.conductor, other)
        return self + (-other)

    def __mul__(self, other) -> "CycloElement":
        if isinstance(other, (int, Fraction)):
            if not other:
                return CycloElement._raw(self.conductor, ())
            return CycloElement._raw(self.conductor, tuple(c * other for c in self.coeffs))
        self._check(other)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return CycloElement._raw(self.conductor, ())
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return CycloElement._raw(self.conductor, _reduce(out, self.conductor))

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "CycloElement":
        if k < 0:
            raise ValueError("negative powers are not supported")
        result = CycloElement.rational(self.conductor, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __repr__(self) -> str:
        return f"CycloElement({self.conductor}, {list(self.coeffs)})"


def cyclo_mul(a: CycloElement, b: CycloElement) -> CycloElement:
    return a * b
