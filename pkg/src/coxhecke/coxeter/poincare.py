"""Poincaré series of Coxeter systems and their parabolic subsystems."""
from __future__ import annotations

from functools import lru_cache
from itertools import combinations
from typing import Iterable, Optional

from ..exactmath import ONE, IntPolynomial, RationalFunction
from .ball import DEFAULT_MEM_CAP, CayleyBall, RadiusError, build_ball
from .system import CoxeterMatrix, component_degrees, component_order, component_type, is_finite_type


ENUMERATION_LIMIT = 5000  # finite components above this size use the degree formula


def poincare_truncated(ball: CayleyBall, max_length: int) -> IntPolynomial:
    """Sum of q^l(w) over ball elements of length <= max_length."""
    if not ball.complete and ball.radius < max_length:
        raise RadiusError(f"ball radius {ball.radius} < requested length {max_length}", max_length)
    counts = [0] * (max_length + 1)
    for ln in ball.lengths:
        if ln <= max_length:
            counts[ln] += 1
    return IntPolynomial(counts)


def q_integer(d: int) -> IntPolynomial:
    """[d]_q = 1 + q + ... + q^(d-1)."""
    return IntPolynomial([1] * d)


def poincare_from_degrees(kind: str) -> IntPolynomial:
    p = ONE
    for d in component_degrees(kind):
        p = p * q_integer(d)
    return p


def poincare_exact(m: CoxeterMatrix, subset: Optional[Iterable[int]] = None, mem_cap: int = DEFAULT_MEM_CAP) -> RationalFunction:
    """p_{(W_I, I)}(q) as a reduced rational function.

    Finite parabolics are handled component by component: small components
    are enumerated, larger ones use the product formula over their degrees.
    Infinite ones use the alternating recursion over proper subsets.
    """
    subset = m.generators if subset is None else m.subset(subset)
    return _poincare(m, subset, mem_cap)


@lru_cache(maxsize=None)
def _poincare(m: CoxeterMatrix, subset: frozenset, mem_cap: int) -> RationalFunction:
    if is_finite_type(m, subset):
        p = ONE
        for comp in m.components(subset):
            p = p * _finite_component(m.restrict(comp), mem_cap)
        return RationalFunction(p)
    inv = RationalFunction(0)
    k = len(subset)
    for size in range(k):
        sign = 1 if (k - size - 1) % 2 == 0 else -1
        for sub in combinations(sorted(subset), size):
            inv = inv + _poincare(m, frozenset(sub), mem_cap).inverse() * sign
    return inv.inverse()


@lru_cache(maxsize=None)
def _finite_component(m: CoxeterMatrix, mem_cap: int) -> IntPolynomial:
    kind = component_type(m, m.generators)
    if component_order(kind) > min(mem_cap, ENUMERATION_LIMIT):
        return poincare_from_degrees(kind)
    ball = build_ball(m, mem_cap=mem_cap)
    return poincare_truncated(ball, ball.radius)


def group_order(m: CoxeterMatrix, subset: Optional[Iterable[int]] = None) -> Optional[int]:
    """|W_I| for finite type, else None."""
    subset = m.generators if subset is None else m.subset(subset)
    if not is_finite_type(m, subset):
        return None
    n = 1
    for comp in m.components(subset):
        n *= component_order(component_type(m, comp))
    return n
