"""Euler characteristic of a Hecke algebra and the identity chi_H * p_(W,S)(q) = 1.

For spherical W the augmentation module R_q is the projective left ideal
H e_S, and chi_H is the canonical trace of e_S.  For non-spherical W the
Deodhar complex resolves R_q and chi_H is the alternating sum of the
parabolic contributions.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Optional

from .coxeter import (
    DEFAULT_MEM_CAP,
    CayleyBall,
    CoxeterMatrix,
    RadiusError,
    build_ball,
    is_finite_type,
    poincare_exact,
    poincare_truncated,
)
from .exactmath import ONE, RationalFunction, rf_series
from .hecke import canonical_trace, idempotent


class SpecializationError(ArithmeticError):
    """q0 violates the invertibility hypothesis on spherical Poincaré polynomials."""

    def __init__(self, q0, offending: list[str]):
        self.q0, self.offending = q0, offending
        super().__init__(
            f"hypothesis violated at q = {q0}: "
            + ", ".join(f"p_{name}({q0}) = 0 not invertible" for name in offending)
        )


class PoleError(ZeroDivisionError):
    def __init__(self, q0):
        self.q0 = q0
        super().__init__(f"pole at {q0}")


def _sign(k: int) -> int:
    return 1 if k % 2 == 0 else -1


def _proper_subsets(subset: frozenset):
    items = sorted(subset)
    for size in range(len(items)):
        for sub in combinations(items, size):
            yield frozenset(sub)


def hs_rank_trace_idempotent(m: CoxeterMatrix, subset: Iterable[int], ball: Optional[CayleyBall] = None) -> RationalFunction:
    """mu(r_{H e_I}) = canonical_trace(e_I) = (coefficient of T_1 in tau_I) / p_I.

    Computed inside the parabolic Hecke algebra H_I, which embeds in H with
    the same canonical trace.
    """
    subset = m.subset(subset)
    if not is_finite_type(m, subset):
        raise ValueError(f"parabolic subgroup {m.subset_name(subset)} is infinite")
    return _hs_rank(m, subset) if ball is None else _hs_rank_on(ball, subset)


@lru_cache(maxsize=None)
def _hs_rank(m: CoxeterMatrix, subset: frozenset) -> RationalFunction:
    sub = m.restrict(subset)
    ball = build_ball(sub)
    return _hs_rank_on(ball, sub.generators)


def _hs_rank_on(ball: CayleyBall, subset: frozenset) -> RationalFunction:
    e = idempotent(ball, subset)
    return RationalFunction(canonical_trace(e.tau), e.p)


def chi(m: CoxeterMatrix, subset: Optional[Iterable[int]] = None) -> RationalFunction:
    """chi of H_q(W_I, I): 1/p_I when spherical, else the alternating parabolic sum."""
    subset = m.generators if subset is None else m.subset(subset)
    return _chi(m, subset)


@lru_cache(maxsize=None)
def _chi(m: CoxeterMatrix, subset: frozenset) -> RationalFunction:
    if is_finite_type(m, subset):
        return poincare_exact(m, subset).inverse()
    total = RationalFunction(0)
    for sub in _proper_subsets(subset):
        total = total + _chi(m, sub) * _sign(len(subset) - len(sub) - 1)
    return total


def chi_via_complex(m: CoxeterMatrix) -> RationalFunction:
    """Alternating sum of the Hattori-Stallings contributions of the Deodhar complex terms.

    Each summand Ind_I^S(R_q) contributes mu_{H_I}(r_{R_q}); for spherical I
    that is the trace of the idempotent e_I, otherwise it is recursively the
    Euler characteristic of the (non-spherical) parabolic H_I.
    """
    if is_finite_type(m):
        raise ValueError("the Deodhar complex is not a resolution for finite W; use chi()")
    return _chi_complex(m, m.generators)


def _chi_complex(m: CoxeterMatrix, subset: frozenset) -> RationalFunction:
    total = RationalFunction(0)
    for sub in _proper_subsets(subset):
        if is_finite_type(m, sub):
            term = hs_rank_trace_idempotent(m, sub)
        else:
            term = _chi_complex(m, sub)
        total = total + term * _sign(len(subset) - len(sub) - 1)
    return total


@dataclass
class EulerResult:
    chi: RationalFunction
    poincare: RationalFunction
    product_ok: bool
    per_parabolic: dict[frozenset, tuple[int, RationalFunction]]
    trace_route_ok: Optional[bool] = None
    specializations: dict[str, str] = field(default_factory=dict)


def verify_theorem_A(m: CoxeterMatrix, mem_cap: int = DEFAULT_MEM_CAP) -> EulerResult:
    c = chi(m)
    p = poincare_exact(m, mem_cap=mem_cap)
    ok = (c * p) == RationalFunction(ONE)
    full = m.generators
    per: dict[frozenset, tuple[int, RationalFunction]] = {}
    trace_ok = None
    if is_finite_type(m):
        per[full] = (1, p.inverse())
        if _fits(m, mem_cap):
            trace_ok = hs_rank_trace_idempotent(m, full) == c
    else:
        for sub in _proper_subsets(full):
            per[sub] = (_sign(len(full) - len(sub) - 1), chi(m, sub))
    return EulerResult(c, p, ok, per, trace_ok)


def _fits(m: CoxeterMatrix, mem_cap: int) -> bool:
    from .coxeter import group_order

    order = group_order(m)
    return order is not None and order <= mem_cap


def verify_poincare_series_identity(ball: CayleyBall, order: int) -> bool:
    """The power series of chi times the length-count series is 1 + O(q^(order+1))."""
    if not ball.complete and ball.radius < order:
        raise RadiusError(f"ball radius {ball.radius} < series order {order}", order)
    counts = poincare_truncated(ball, order)
    series = rf_series(chi(ball.coxeter), order)
    for n in range(order + 1):
        acc = sum(series[k] * counts[n - k] for k in range(n + 1))
        if acc != (1 if n == 0 else 0):
            return False
    return True


def spherical_parabolics(m: CoxeterMatrix) -> list[frozenset]:
    subs = []
    for size in range(m.rank + 1):
        for sub in combinations(range(m.rank), size):
            if is_finite_type(m, sub):
                subs.append(frozenset(sub))
    return subs


def check_hypothesis(m: CoxeterMatrix, q0) -> None:
    """Raise SpecializationError unless p_I(q0) != 0 for every spherical I."""
    q0 = Fraction(q0)
    bad = []
    for sub in spherical_parabolics(m):
        if sub and poincare_exact(m, sub).num(q0) == 0:
            bad.append(m.subset_name(sub))
    if bad:
        raise SpecializationError(_fmt(q0), bad)


def specialize(f: RationalFunction, q0, m: CoxeterMatrix) -> Fraction:
    """Evaluate f at q0 after checking the invertibility hypothesis for (W, S)."""
    q0 = Fraction(q0)
    check_hypothesis(m, q0)
    if f.den(q0) == 0:
        raise PoleError(_fmt(q0))
    return f(q0)


def chi_specialized(m: CoxeterMatrix, q0) -> Fraction:
    """The parabolic recursion for chi carried out in Q at q = q0."""
    q0 = Fraction(q0)
    check_hypothesis(m, q0)
    return _chi_at(m, m.generators, q0)


def _chi_at(m: CoxeterMatrix, subset: frozenset, q0: Fraction) -> Fraction:
    if is_finite_type(m, subset):
        return 1 / Fraction(poincare_exact(m, subset).num(q0))
    return sum(
        (_chi_at(m, sub, q0) * _sign(len(subset) - len(sub) - 1) for sub in _proper_subsets(subset)),
        Fraction(0),
    )


def _fmt(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
