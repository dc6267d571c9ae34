from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from coxhecke.exactmath import (
    ConductorMismatch,
    CycloElement,
    IntPolynomial,
    NotExpandableError,
    PolyMatrix,
    RationalFunction,
    cyclotomic_polynomial,
    nullspace,
    poly_gcd,
    rank_over_fraction_field,
    rf_series,
    solve_in_image,
)

q = IntPolynomial((0, 1))
X = sympy.Symbol("q")

small_ints = st.integers(min_value=-5, max_value=5)
polys = st.lists(small_ints, max_size=4).map(IntPolynomial)
nonzero_polys = polys.filter(bool)
rfs = st.builds(RationalFunction, polys, nonzero_polys)


def to_sympy(p: IntPolynomial):
    return sum(c * X**k for k, c in enumerate(p.coeffs))


def from_sympy(expr) -> IntPolynomial:
    coeffs = sympy.Poly(expr, X).all_coeffs()[::-1]
    return IntPolynomial(int(c) for c in coeffs)


def long_division(num, den):
    """Schoolbook division of ascending integer coefficient lists; returns (quotient, remainder)."""
    num = list(num)
    quot = [0] * max(1, len(num) - len(den) + 1)
    while len(num) >= len(den) and any(num):
        shift = len(num) - len(den)
        c, r = divmod(num[-1], den[-1])
        assert r == 0
        quot[shift] = c
        for i, d in enumerate(den):
            num[i + shift] -= c * d
        while num and num[-1] == 0:
            num.pop()
    return quot, num


# -- polynomials -----------------------------------------------------------


def test_basic_polynomial_ops():
    assert (q + 1) * (q - 1) == q**2 - 1
    assert IntPolynomial(()).degree == -1
    assert (q**3 - q).valuation == 1
    assert (2 * q**2 + 3)(2) == 11
    assert str(q**2 - q + 1) == "q^2-q+1"
    quo, rem = (q**3 + 1).divmod_exact(q + 1)
    assert quo == q**2 - q + 1 and not rem
    with pytest.raises(ArithmeticError):
        (q**2 + 1).exact_div(q + 1)


@pytest.mark.parametrize("n,expected", [(1, q - 1), (2, q + 1), (12, q**4 - q**2 + 1)])
def test_cyclotomic_examples(n, expected):
    assert cyclotomic_polynomial(n) == expected


def test_phi12_by_long_division():
    den = IntPolynomial((1,))
    for d in (1, 2, 3, 4, 6):
        den = den * cyclotomic_polynomial(d)
    quot, rem = long_division([-1] + [0] * 11 + [1], list(den.coeffs))
    assert not rem
    assert IntPolynomial(quot) == cyclotomic_polynomial(12)


@pytest.mark.parametrize("n", range(1, 31))
def test_cyclotomic_matches_sympy(n):
    assert cyclotomic_polynomial(n) == from_sympy(sympy.cyclotomic_poly(n, X))


@given(polys, polys)
def test_gcd_matches_sympy(a, b):
    g = poly_gcd(a, b)
    if not a and not b:
        assert not g
        return
    expected = from_sympy(sympy.gcd(to_sympy(a), to_sympy(b)))
    assert g == expected or g == -expected
    assert g.lead > 0


@given(polys, polys, polys)
def test_polynomial_ring_axioms(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a
    assert a - a == IntPolynomial(())


@given(polys, nonzero_polys)
def test_exact_division_roundtrip(a, b):
    assert (a * b).exact_div(b) == a


# -- cyclotomic field elements --------------------------------------------


def test_cyclo_examples():
    y4 = CycloElement.zeta(4)
    assert y4 * y4 == CycloElement.rational(4, -1)
    y12 = CycloElement.zeta(12)
    assert y12 * y12**11 == CycloElement.rational(12, 1)
    x = CycloElement(10, (3, -1, 2))
    assert CycloElement.rational(10, 1) * x == x
    with pytest.raises(ConductorMismatch):
        CycloElement.zeta(4) + CycloElement.zeta(6)


@pytest.mark.parametrize("n", [3, 5, 8, 12, 20])
def test_root_of_unity_order(n):
    z = CycloElement.zeta(n)
    assert z**n == CycloElement.rational(n, 1)
    assert all(z**k != CycloElement.rational(n, 1) for k in range(1, n))


# -- rational functions ----------------------------------------------------


def test_rf_normalisation_examples():
    f = RationalFunction(q**2 - 1, q - 1)
    assert (f.num, f.den) == (q + 1, IntPolynomial((1,)))
    z = RationalFunction(IntPolynomial(()), q + 1)
    assert (z.num, z.den) == (IntPolynomial(()), IntPolynomial((1,)))
    g = RationalFunction(2 * q + 2, IntPolynomial((-2,)))
    assert (g.num, g.den) == (-q - 1, IntPolynomial((1,)))
    with pytest.raises(ZeroDivisionError):
        RationalFunction(q, IntPolynomial(()))


def test_rf_series_examples():
    one = IntPolynomial((1,))
    assert rf_series(RationalFunction(one, 1 - q), 3) == [1, 1, 1, 1]
    assert rf_series(RationalFunction(1 + q, 1 - q), 4) == [1, 2, 2, 2, 2]
    assert rf_series(RationalFunction(q + 1), 2) == [1, 1, 0]
    with pytest.raises(NotExpandableError):
        rf_series(RationalFunction(one, q), 3)


@given(rfs, rfs, rfs)
@settings(max_examples=60, deadline=None)
def test_rf_field_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == RationalFunction(0)
    if a:
        assert a * a.inverse() == RationalFunction(1)


@given(rfs)
def test_rf_canonical_form(f):
    assert poly_gcd(f.num, f.den).degree == 0
    assert f.den.lead > 0
    assert sympy.simplify(to_sympy(f.num) / to_sympy(f.den) - sympy.cancel(to_sympy(f.num) / to_sympy(f.den))) == 0


@given(polys, st.lists(small_ints, min_size=1, max_size=3).filter(lambda c: c[0] != 0).map(IntPolynomial))
@settings(deadline=None)
def test_series_resummation(num, den):
    # multiplying the expansion back by den reproduces num to the same order
    order = 8
    f = RationalFunction(num, den)
    s = rf_series(f, order)
    for n in range(order + 1):
        acc = sum(s[k] * f.den.coeffs[n - k] for k in range(n + 1) if n - k < len(f.den.coeffs))
        expect = f.num.coeffs[n] if n < len(f.num.coeffs) else 0
        assert acc == expect


@given(rfs, st.fractions(min_value=-3, max_value=3, max_denominator=4))
def test_rf_evaluation_is_a_homomorphism(f, x):
    if f.den(x) == 0:
        with pytest.raises(ZeroDivisionError):
            f(x)
    else:
        assert f(x) == Fraction(f.num(x)) / f.den(x)
        assert (f * f)(x) == f(x) ** 2


# -- matrices --------------------------------------------------------------


def test_rank_examples():
    one = IntPolynomial((1,))
    zero = IntPolynomial(())
    assert rank_over_fraction_field(PolyMatrix(3, 3)) == 0
    diag = PolyMatrix.from_dense([[q, zero, zero], [zero, q**2, zero], [zero, zero, one]])
    assert rank_over_fraction_field(diag) == 3
    assert rank_over_fraction_field(PolyMatrix.from_dense([[q, q**2], [one, q]])) == 1


def test_solve_examples():
    one = IntPolynomial((1,))
    zero = IntPolynomial(())
    assert solve_in_image(PolyMatrix(2, 2), [zero, zero]) == [RationalFunction(0)] * 2
    assert solve_in_image(PolyMatrix.from_dense([[q]]), [q**2]) == [RationalFunction(q)]
    assert solve_in_image(PolyMatrix.from_dense([[q], [one]]), [one, zero]) is None
    with pytest.raises(ValueError):
        solve_in_image(PolyMatrix.from_dense([[q]]), [one, one])


matrices = st.integers(1, 3).flatmap(
    lambda r: st.integers(1, 3).flatmap(
        lambda c: st.lists(st.lists(st.lists(st.integers(-2, 2), max_size=3), min_size=c, max_size=c), min_size=r, max_size=r)
    )
)


@given(matrices)
@settings(max_examples=60, deadline=None)
def test_rank_matches_sympy(rows):
    m = PolyMatrix.from_dense([[IntPolynomial(e) for e in row] for row in rows])
    expected = sympy.Matrix([[to_sympy(IntPolynomial(e)) for e in row] for row in rows]).rank(simplify=True)
    assert rank_over_fraction_field(m) == expected


@given(matrices, st.integers(2, 7))
@settings(max_examples=60, deadline=None)
def test_rank_bounds_specialised_rank(rows, x):
    # specialising q can only lose rank; generic points recover it
    m = PolyMatrix.from_dense([[IntPolynomial(e) for e in row] for row in rows])
    specialised = sympy.Matrix([[IntPolynomial(e)(x) for e in row] for row in rows]).rank()
    assert specialised <= rank_over_fraction_field(m)


@given(matrices)
@settings(max_examples=60, deadline=None)
def test_rank_nullity_and_kernel(rows):
    m = PolyMatrix.from_dense([[IntPolynomial(e) for e in row] for row in rows])
    kernel = nullspace(m)
    assert rank_over_fraction_field(m) + len(kernel) == m.cols
    for v in kernel:
        assert all(not x for x in m.apply(v))


@given(matrices, st.data())
@settings(max_examples=60, deadline=None)
def test_solve_recovers_image_vectors(rows, data):
    m = PolyMatrix.from_dense([[IntPolynomial(e) for e in row] for row in rows])
    x = [IntPolynomial(data.draw(st.lists(st.integers(-2, 2), max_size=2))) for _ in range(m.cols)]
    v = m.apply(x)
    w = solve_in_image(m, v)
    assert w is not None
    lhs = [sum((RationalFunction(m[i, j]) * w[j] for j in range(m.cols)), RationalFunction(0)) for i in range(m.rows)]
    assert lhs == [RationalFunction(e) for e in v]
