"""The one-parameter Hecke algebra H_q(W, S) on a Cayley ball.

Elements are sparse maps from ball indices to coefficients in Z[q].  Products
are computed from the defining relations

    T_s T_w = T_sw                    if l(sw) > l(w)
    T_s T_w = (q-1) T_w + q T_sw      if l(sw) < l(w)

by folding a reduced word of the left factor onto the right factor.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Optional, Union

from .coxeter import CayleyBall, RadiusError, group_order, is_finite_type, poincare_exact
from .coxeter.ball import _decompose
from .exactmath import ONE, Q, ZERO, IntPolynomial, RationalFunction

Q_MINUS_ONE = Q - ONE

Coeff = Union[int, IntPolynomial]


class NotInvertibleError(ArithmeticError):
    pass


class HeckeElement:
    __slots__ = ("ball", "support")

    def __init__(self, ball: CayleyBall, support: Optional[Mapping[int, Coeff]] = None):
        self.ball = ball
        clean = {}
        for w, c in (support or {}).items():
            c = IntPolynomial.coerce(c)
            if c:
                if not 0 <= w < len(ball):
                    raise IndexError(f"element index {w} not in ball")
                clean[w] = c
        self.support: dict[int, IntPolynomial] = clean

    @classmethod
    def _raw(cls, ball: CayleyBall, support: dict) -> "HeckeElement":
        e = object.__new__(cls)
        e.ball = ball
        e.support = support
        return e

    def coeff(self, w: int) -> IntPolynomial:
        return self.support.get(w, ZERO)

    def max_length(self) -> int:
        return max((self.ball.lengths[w] for w in self.support), default=0)

    def is_zero(self) -> bool:
        return not self.support

    def __bool__(self) -> bool:
        return bool(self.support)

    def _same_ball(self, other: "HeckeElement") -> None:
        if other.ball is not self.ball:
            raise ValueError("elements live in different balls")

    def __eq__(self, other) -> bool:
        if isinstance(other, HeckeElement):
            return self.ball is other.ball and self.support == other.support
        if isinstance(other, int) and other == 0:
            return not self.support
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self.support.items()))

    def __add__(self, other: "HeckeElement") -> "HeckeElement":
        self._same_ball(other)
        out = dict(self.support)
        for w, c in other.support.items():
            v = out.get(w, ZERO) + c
            if v:
                out[w] = v
            else:
                out.pop(w, None)
        return HeckeElement._raw(self.ball, out)

    def __neg__(self) -> "HeckeElement":
        return HeckeElement._raw(self.ball, {w: -c for w, c in self.support.items()})

    def __sub__(self, other: "HeckeElement") -> "HeckeElement":
        return self + (-other)

    def scale(self, c: Coeff) -> "HeckeElement":
        c = IntPolynomial.coerce(c)
        if not c:
            return HeckeElement._raw(self.ball, {})
        return HeckeElement._raw(self.ball, {w: v * c for w, v in self.support.items()})

    def __mul__(self, other):
        if isinstance(other, HeckeElement):
            return mul(self, other)
        if isinstance(other, (int, IntPolynomial)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, IntPolynomial)):
            return self.scale(other)
        return NotImplemented

    def __repr__(self) -> str:
        from .expr import format_element

        return f"HeckeElement({format_element(self)})"


def t(ball: CayleyBall, w) -> HeckeElement:
    """The basis element T_w."""
    w = getattr(w, "index", w)
    if not 0 <= w < len(ball):
        raise IndexError(f"element index {w} not in ball of size {len(ball)}")
    return HeckeElement._raw(ball, {w: ONE})


def one(ball: CayleyBall) -> HeckeElement:
    return HeckeElement._raw(ball, {0: ONE})


def _left_generator(s: int, x: dict, ball: CayleyBall) -> dict:
    out: dict[int, IntPolynomial] = {}
    lm, lengths = ball.left_mul[s], ball.lengths
    for w, c in x.items():
        sw = lm[w]
        if sw is None:
            raise RadiusError(
                f"product needs elements of length {lengths[w] + 1}, beyond radius {ball.radius}",
                lengths[w] + 1,
            )
        if lengths[sw] > lengths[w]:
            out[sw] = out.get(sw, ZERO) + c
        else:
            out[w] = out.get(w, ZERO) + c * Q_MINUS_ONE
            out[sw] = out.get(sw, ZERO) + c.shift(1)
    return {w: c for w, c in out.items() if c}


def left_by_generator(s: int, a: HeckeElement) -> HeckeElement:
    """T_s * a."""
    return HeckeElement._raw(a.ball, _left_generator(s, a.support, a.ball))


def mul(a: HeckeElement, b: HeckeElement) -> HeckeElement:
    a._same_ball(b)
    ball = a.ball
    if not ball.complete:
        need = a.max_length() + b.max_length()
        if need > ball.radius:
            raise RadiusError(f"product requires radius {need}, ball radius is {ball.radius}", need)
    total: dict[int, IntPolynomial] = {}
    for u, cu in a.support.items():
        x = b.support
        for s in reversed(ball.word(u)):
            x = _left_generator(s, x, ball)
        for w, c in x.items():
            total[w] = total.get(w, ZERO) + c * cu
    return HeckeElement._raw(ball, {w: c for w, c in total.items() if c})


def antipode(a: HeckeElement) -> HeckeElement:
    inv = a.ball.inverse
    return HeckeElement._raw(a.ball, {inv[w]: c for w, c in a.support.items()})


class LinearCharacter(enum.Enum):
    AUGMENTATION_Q = "augmentation_q"
    SIGN = "sign"

    def on_generator(self) -> IntPolynomial:
        return Q if self is LinearCharacter.AUGMENTATION_Q else IntPolynomial.constant(-1)


def character(chi: LinearCharacter, a: HeckeElement) -> IntPolynomial:
    """epsilon_q (T_w -> q^l(w)) or epsilon_{-1} (T_w -> (-1)^l(w)), extended linearly."""
    acc = ZERO
    for w, c in a.support.items():
        ln = a.ball.lengths[w]
        if chi is LinearCharacter.AUGMENTATION_Q:
            acc = acc + c.shift(ln)
        else:
            acc = acc + (c if ln % 2 == 0 else -c)
    return acc


def bilinear_form(a: HeckeElement, b: HeckeElement) -> IntPolynomial:
    """<a, b> with <T_u, T_v> = delta_uv q^l(u)."""
    a._same_ball(b)
    acc = ZERO
    small, big = (a, b) if len(a.support) <= len(b.support) else (b, a)
    for w, c in small.support.items():
        d = big.support.get(w)
        if d is not None:
            acc = acc + (c * d).shift(a.ball.lengths[w])
    return acc


def canonical_trace(a: HeckeElement) -> IntPolynomial:
    """<T_1, a>, i.e. the coefficient of T_1."""
    return a.support.get(0, ZERO)


def tau(ball: CayleyBall, subset: Iterable[int]) -> HeckeElement:
    """Sum of T_w over the finite parabolic subgroup W_I."""
    subset = frozenset(subset)
    m = ball.coxeter
    if not is_finite_type(m, subset):
        raise ValueError(f"parabolic subgroup {m.subset_name(subset)} is infinite")
    elems = ball.parabolic_elements(subset)
    order = group_order(m, subset)
    if len(elems) != order:
        raise RadiusError(
            f"ball holds {len(elems)} of the {order} elements of W_{m.subset_name(subset)}"
        )
    return HeckeElement._raw(ball, {w: ONE for w in elems})


@dataclass(frozen=True)
class Idempotent:
    """e_I = tau_I / p_I, carried as the integral element tau_I and the polynomial p_I."""

    subset: frozenset
    tau: HeckeElement
    p: IntPolynomial

    @property
    def inv_p(self) -> RationalFunction:
        return RationalFunction(ONE, self.p)

    def check_specialization(self, q0) -> None:
        if self.p(Fraction(q0)) == 0:
            raise NotInvertibleError(f"Poincaré value not invertible: p_I({q0}) = 0")


def idempotent(ball: CayleyBall, subset: Iterable[int]) -> Idempotent:
    subset = frozenset(subset)
    tau_i = tau(ball, subset)
    p = poincare_exact(ball.coxeter, subset)
    assert p.is_polynomial()
    return Idempotent(subset, tau_i, p.num)


# ---------------------------------------------------------------------------
# induced modules Ind_I^S(R_q), basis T_w eta_I for w in W^I


class InducedVector:
    __slots__ = ("ball", "subset", "support")

    def __init__(self, ball: CayleyBall, subset: Iterable[int], support: Optional[Mapping[int, Coeff]] = None):
        self.ball = ball
        self.subset = frozenset(subset)
        clean = {}
        for w, c in (support or {}).items():
            c = IntPolynomial.coerce(c)
            if c:
                if ball.right_desc[w] & self.subset:
                    raise ValueError(f"element {ball.word_str(w)} is not a minimal coset representative")
                clean[w] = c
        self.support: dict[int, IntPolynomial] = clean

    @classmethod
    def _raw(cls, ball, subset, support) -> "InducedVector":
        v = object.__new__(cls)
        v.ball, v.subset, v.support = ball, subset, support
        return v

    def __eq__(self, other) -> bool:
        if not isinstance(other, InducedVector):
            return NotImplemented
        return self.ball is other.ball and self.subset == other.subset and self.support == other.support

    def __add__(self, other: "InducedVector") -> "InducedVector":
        out = dict(self.support)
        for w, c in other.support.items():
            v = out.get(w, ZERO) + c
            if v:
                out[w] = v
            else:
                out.pop(w, None)
        return InducedVector._raw(self.ball, self.subset, out)

    def scale(self, c: Coeff) -> "InducedVector":
        c = IntPolynomial.coerce(c)
        return InducedVector._raw(self.ball, self.subset, {w: v * c for w, v in self.support.items() if c})

    def __repr__(self) -> str:
        terms = ", ".join(f"{self.ball.word_str(w)}: {c}" for w, c in sorted(self.support.items()))
        return f"InducedVector(I={self.ball.coxeter.subset_name(self.subset)}, {{{terms}}})"


def eta(ball: CayleyBall, subset: Iterable[int]) -> InducedVector:
    """The generator eta_I = T_1 (x) 1."""
    return InducedVector._raw(ball, frozenset(subset), {0: ONE})


def eta_image(a: HeckeElement, subset: Iterable[int]) -> InducedVector:
    """a * eta_I, using T_w eta_I = q^l(w_I) T_{w^I} eta_I."""
    subset = frozenset(subset)
    ball = a.ball
    out: dict[int, IntPolynomial] = {}
    for w, c in a.support.items():
        y, u = _decompose(ball, w, subset)
        out[y] = out.get(y, ZERO) + c.shift(ball.lengths[u])
    return InducedVector._raw(ball, subset, {w: c for w, c in out.items() if c})


def induced_action(s: int, v: InducedVector) -> InducedVector:
    """T_s acting on a vector of Ind_I^S(R_q)."""
    ball, subset = v.ball, v.subset
    lengths = ball.lengths
    out: dict[int, IntPolynomial] = {}

    def put(w: int, c: IntPolynomial) -> None:
        y, u = _decompose(ball, w, subset)
        out[y] = out.get(y, ZERO) + c.shift(lengths[u])

    for w, c in v.support.items():
        sw = ball.left_mul[s][w]
        if sw is None:
            raise RadiusError(f"induced action needs length {lengths[w] + 1}, beyond radius {ball.radius}", lengths[w] + 1)
        if lengths[sw] > lengths[w]:
            put(sw, c)
        else:
            out[w] = out.get(w, ZERO) + c * Q_MINUS_ONE
            put(sw, c.shift(1))
    return InducedVector._raw(ball, subset, {w: c for w, c in out.items() if c})


def act(a: HeckeElement, v: InducedVector) -> InducedVector:
    """a * v for a general Hecke element."""
    total = InducedVector._raw(v.ball, v.subset, {})
    for u, cu in a.support.items():
        x = v
        for s in reversed(a.ball.word(u)):
            x = induced_action(s, x)
        total = total + x.scale(cu)
    return total
