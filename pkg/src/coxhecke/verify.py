"""Invariant suites run by ``coxhecke verify``.

Exhaustive checks are used for finite groups whose ball is small enough;
otherwise triples are drawn from a seeded RNG within the radius that keeps
every product inside the ball.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, product
from typing import Callable, Iterable, Optional

from .coxeter import (
    CayleyBall,
    CoxeterMatrix,
    build_ball,
    coset_reps,
    group_order,
    is_finite_type,
    parabolic_decompose,
    poincare_exact,
    poincare_truncated,
)
from .deodhar import build_complex, homology, sign_axiom_holds, sign_map, verify_chain, verify_truncated_acyclicity
from .euler import (
    SpecializationError,
    chi,
    chi_specialized,
    chi_via_complex,
    specialize,
    spherical_parabolics,
    verify_poincare_series_identity,
    verify_theorem_A,
)
from .exactmath import IntPolynomial, rf_series
from .hecke import (
    HeckeElement,
    LinearCharacter,
    antipode,
    bilinear_form,
    canonical_trace,
    character,
    idempotent,
    mul,
    t,
)

EXHAUSTIVE_LIMIT = 8  # |W| up to which triple checks are exhaustive


@dataclass
class SuiteResult:
    name: str
    passed: int = 0
    failed: int = 0
    notes: list[str] = field(default_factory=list)

    def record(self, ok: bool, note: str = "") -> None:
        if ok:
            self.passed += 1
        else:
            self.failed += 1
            if note and len(self.notes) < 5:
                self.notes.append(note)

    @property
    def ok(self) -> bool:
        return self.failed == 0


@dataclass
class VerifyConfig:
    max_length: int = 6
    samples: int = 200
    seed: int = 0
    coradius_extra: int = 2


class Verifier:
    def __init__(self, m: CoxeterMatrix, config: VerifyConfig = VerifyConfig()):
        self.m = m
        self.config = config
        self.finite = is_finite_type(m)
        if self.finite:
            self.ball = build_ball(m)
        else:
            self.ball = build_ball(m, config.max_length)
        self.results: list[SuiteResult] = []

    # -- helpers ------------------------------------------------------
    def _rng(self) -> random.Random:
        return random.Random(self.config.seed)

    def _triples(self, budget_fn: Callable[[int, int, int], bool]) -> Iterable[tuple[int, int, int]]:
        ball = self.ball
        n = len(ball)
        if self.finite and n <= EXHAUSTIVE_LIMIT:
            yield from product(range(n), repeat=3)
            return
        rng = self._rng()
        got = tries = 0
        while got < self.config.samples and tries < 100 * self.config.samples:
            tries += 1
            u, v, w = (rng.randrange(n) for _ in range(3))
            if budget_fn(ball.lengths[u], ball.lengths[v], ball.lengths[w]):
                got += 1
                yield u, v, w

    def _radius(self) -> int:
        return 10**9 if self.ball.complete else self.ball.radius

    # -- suites -------------------------------------------------------
    def run(self) -> list[SuiteResult]:
        self.results = []
        for fn in (self.coxeter_suite, self.hecke_suite, self.form_suite, self.idempotent_suite,
                   self.deodhar_suite, self.euler_suite):
            self.results.append(fn())
        return self.results

    def coxeter_suite(self) -> SuiteResult:
        res = SuiteResult("coxeter")
        ball, m = self.ball, self.m
        n = len(ball)
        for w in range(n):
            for s in range(m.rank):
                sw = ball.left_mul[s][w]
                if sw is not None:
                    res.record(abs(ball.lengths[sw] - ball.lengths[w]) == 1, "l(sw) = l(w) +- 1")
            res.record(ball.lengths[ball.inverse[w]] == ball.lengths[w], "l(w^-1) = l(w)")
        # every element of length <= radius - 1 is either free of the left descent s or s times such
        inner = {w for w in range(n) if ball.complete or ball.lengths[w] < ball.radius}
        for s in range(m.rank):
            free = {w for w in inner if s not in ball.left_desc[w]}
            shifted = {ball.left_mul[s][w] for w in free}
            res.record(not (free & shifted), "partition disjoint")
            res.record(inner <= free | shifted, "partition covers")
        subsets = [frozenset(c) for k in range(m.rank + 1) for c in combinations(range(m.rank), k)]
        reps = {I: {r.index for r in coset_reps(ball, I)} for I in subsets}
        for I, J in product(subsets, repeat=2):
            if I <= J:
                res.record(reps[J] <= reps[I], "monotonicity of W^I")
        for I in subsets:
            for w in range(n):
                d = parabolic_decompose(ball, w, I)
                y, u = d.coset_part.index, d.parabolic_part.index
                res.record(
                    ball.multiply(y, u) == w
                    and ball.lengths[y] + ball.lengths[u] == ball.lengths[w]
                    and y in reps[I]
                    and ball.in_parabolic(u, I),
                    f"reconstruction w={ball.word_str(w)} I={m.subset_name(I)}",
                )
        return res

    def hecke_suite(self) -> SuiteResult:
        res = SuiteResult("hecke")
        ball = self.ball
        R = self._radius()
        for u, v, w in self._triples(lambda a, b, c: a + b + c <= R):
            a, b, c = t(ball, u), t(ball, v), t(ball, w)
            ab = mul(a, b)
            res.record(mul(ab, c) == mul(a, mul(b, c)), "associativity")
            res.record(antipode(ab) == mul(antipode(b), antipode(a)), "antipode anti-automorphism")
            for ch in LinearCharacter:
                res.record(character(ch, ab) == character(ch, a) * character(ch, b), f"{ch.value} multiplicative")
                res.record(character(ch, antipode(a)) == character(ch, a), f"{ch.value} antipode symmetric")
            res.record(canonical_trace(ab) == canonical_trace(mul(b, a)), "trace property")
        return res

    def form_suite(self) -> SuiteResult:
        res = SuiteResult("bilinear form")
        ball = self.ball
        R = self._radius()
        for u, v, w in self._triples(lambda a, b, c: a + b <= R and a + c <= R):
            a, b, c = t(ball, u), t(ball, v), t(ball, w)
            lhs = bilinear_form(mul(a, b), c)
            rhs = bilinear_form(b, mul(antipode(a), c))
            res.record(lhs == rhs, f"<T_u T_v, T_w> at u={ball.word_str(u)} v={ball.word_str(v)} w={ball.word_str(w)}")
        return res

    def idempotent_suite(self) -> SuiteResult:
        res = SuiteResult("idempotents")
        ball, m = self.ball, self.m
        R = self._radius()
        for I in spherical_parabolics(m):
            order = group_order(m, I)
            if len(ball.parabolic_elements(I)) != order:
                continue
            e = idempotent(ball, I)
            top = max(ball.lengths[w] for w in e.tau.support)
            if 2 * top > R:
                continue
            res.record(mul(e.tau, e.tau) == e.tau.scale(e.p), f"tau^2 = p tau for I={m.subset_name(I)}")
            res.record(antipode(e.tau) == e.tau, "e_I antipode invariant")
            for s in I:
                ts = t(ball, ball.left_mul[s][0])
                res.record(mul(ts, e.tau) == mul(e.tau, ts), "e_I central in H_I")
            for w in range(len(ball)):
                if ball.lengths[w] + top > R:
                    continue
                d = parabolic_decompose(ball, w, I)
                lhs = mul(t(ball, w), e.tau)
                shift = IntPolynomial.monomial(1, ball.lengths[d.parabolic_part.index])
                rhs = mul(t(ball, d.coset_part.index), e.tau).scale(shift)
                res.record(lhs == rhs, f"T_w e_I at w={ball.word_str(w)}")
        return res

    def deodhar_suite(self) -> SuiteResult:
        res = SuiteResult("deodhar")
        m = self.m
        for order in _orders(m.rank):
            res.record(sign_axiom_holds(sign_map(order), m.rank), f"sign axiom for order {order}")
        sgn = sign_map(range(m.rank))
        if self.finite:
            c = build_complex(self.ball, sgn)
            res.record(verify_chain(c), "d^2 = 0")
            if m.rank >= 1:
                rep = homology(c)
                expect = _expected_homology(m.rank)
                res.record(rep.homology == expect, f"homology {rep.homology} != {expect}")
                res.record(rep.actions_verified, f"generator actions {rep.actions}")
                res.record(rep.euler_ok(), "Euler-Poincare")
        else:
            L = max(1, self.ball.radius - self.config.coradius_extra)
            c = build_complex(self.ball, sgn, self.ball.radius)
            res.record(verify_chain(c), "d^2 = 0 (truncated)")
            rep = verify_truncated_acyclicity(self.ball, sgn, L, self.ball.radius)
            res.record(rep.certified, f"truncated acyclicity at ({L}, {self.ball.radius})")
        return res

    def euler_suite(self) -> SuiteResult:
        res = SuiteResult("euler")
        m = self.m
        r = verify_theorem_A(m)
        res.record(r.product_ok, "chi * p = 1")
        if r.trace_route_ok is not None:
            res.record(r.trace_route_ok, "canonical_trace(e_S) = chi")
        if not self.finite:
            res.record(chi_via_complex(m) == r.chi, "complex route = recursion")
            L = min(self.ball.radius, 10)
            res.record(verify_poincare_series_identity(self.ball, L), "series identity")
            counts = poincare_truncated(self.ball, L)
            res.record(rf_series(poincare_exact(m), L) == [counts[k] for k in range(L + 1)], "p-series = length counts")
        else:
            res.record(verify_poincare_series_identity(self.ball, self.ball.radius), "series identity")
            res.record(chi(m)(1) == Fraction(1, group_order(m)), "chi(1) = 1/|W|")
        for q0 in (Fraction(2), Fraction(1, 2), Fraction(3)):
            try:
                res.record(specialize(r.chi, q0, m) == chi_specialized(m, q0), f"specialization at {q0}")
            except SpecializationError as exc:
                res.record(False, str(exc))
        return res


def _orders(rank: int):
    from itertools import permutations

    if rank <= 4:
        return list(permutations(range(rank)))
    return [tuple(range(rank)), tuple(reversed(range(rank)))]


def _expected_homology(rank: int) -> list[int]:
    if rank == 1:
        return [2]
    return [1] + [0] * (rank - 2) + [1]


def run_verify(m: CoxeterMatrix, config: VerifyConfig = VerifyConfig()) -> list[SuiteResult]:
    return Verifier(m, config).run()
