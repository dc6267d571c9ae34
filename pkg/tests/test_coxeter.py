from collections import Counter
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from coxhecke.coxeter import (
    CATALOG_NAMES,
    BallError,
    BallTooLarge,
    CoxeterMatrix,
    CoxeterParseError,
    RadiusError,
    build_ball,
    catalog,
    coset_reps,
    group_order,
    is_finite_type,
    parabolic_decompose,
    parse_coxeter,
    poincare_exact,
    poincare_truncated,
    type_name,
)
from coxhecke.exactmath import IntPolynomial, RationalFunction, rf_series
from oracles import compose, enumerate_group, perm_generators, word_to_perm

q = IntPolynomial((0, 1))
ORACLE_TYPES = ["A1", "A2", "A3", "A4", "B2", "B3", "B4", "I2(5)", "I2(7)", "I2(8)"]


def subsets(n):
    return [frozenset(c) for k in range(n + 1) for c in combinations(range(n), k)]


# -- parsing ---------------------------------------------------------------


def test_parse_examples():
    m = parse_coxeter({"labels": [[1, 3], [3, 1]]})
    assert m.rank == 2 and m.m(0, 1) == 3 and type_name(m) == "A2"
    assert parse_coxeter("Atilde1").labels == ((1, 0), (0, 1))
    with pytest.raises(CoxeterParseError, match="not symmetric"):
        parse_coxeter({"labels": [[1, 2], [3, 1]]})


@pytest.mark.parametrize(
    "source,where",
    [
        ('{"labels": [[2, 3], [3, 1]]}', "labels[0][0]"),
        ('{"labels": [[1, 1], [1, 1]]}', "labels[0][1]"),
        ('{"labels": [[1, 3]]}', "labels"),
        ('{"labels": [[1, 3], [3, 1]], "rank": 3}', "rank"),
        ('{"labels": [[1, 3], [3, 1]], "names": ["a", "a"]}', "names"),
        ("Z9", "type"),
        ('{"type": "Q7"}', "type"),
    ],
)
def test_parse_errors_have_locations(source, where):
    with pytest.raises(CoxeterParseError) as info:
        parse_coxeter(source)
    assert info.value.location.startswith(where.split("[")[0])


def test_parse_infinity_spellings_and_names():
    a = parse_coxeter('{"labels": [[1, "inf"], [null, 1]], "names": ["a", "b"]}')
    assert a.labels == ((1, 0), (0, 1)) and a.names == ("a", "b")
    assert parse_coxeter('{"type": "A2", "names": ["x", "y"]}').names == ("x", "y")
    with pytest.raises(CoxeterParseError, match="malformed JSON"):
        parse_coxeter("{oops")


def test_json_roundtrip():
    for name in ["A3", "Atilde2", "Hyp334", "I2(7)"]:
        m = catalog(name)
        assert parse_coxeter(m.to_json()) == m


def test_products():
    m = catalog("A1xA1")
    assert m.labels == ((1, 2), (2, 1))
    assert group_order(m) == 4
    assert len(catalog("A2xB2").components()) == 2


# -- classification --------------------------------------------------------


KNOWN_ORDERS = {
    "A1": 2, "A2": 6, "A3": 24, "A4": 120, "A5": 720, "B2": 8, "B3": 48, "B4": 384, "D4": 192, "D5": 1920,
    "E6": 51840, "E7": 2903040, "E8": 696729600, "F4": 1152, "H3": 120, "H4": 14400,
    "I2(5)": 10, "I2(7)": 14, "I2(12)": 24,
}


@pytest.mark.parametrize("name,order", sorted(KNOWN_ORDERS.items()))
def test_catalog_orders(name, order):
    m = catalog(name)
    assert is_finite_type(m)
    assert group_order(m) == order
    assert poincare_exact(m).num(1) == order


@pytest.mark.parametrize("name", ["Atilde1", "Atilde2", "Btilde2", "Hyp334"])
def test_infinite_types(name):
    m = catalog(name)
    assert not is_finite_type(m)
    assert is_finite_type(m, [])
    assert group_order(m) is None


def test_atilde1_ball_grows_without_bound():
    ball = build_ball(catalog("Atilde1"), 50)
    assert ball.length_histogram() == [1] + [2] * 50


def _label_lists(n):
    # label 5 only below rank 4 keeps every finite case small (F4, 1152 elements, is the largest)
    choices = [2, 3, 4, 6, 0] + ([5] if n < 4 else [])
    k = n * (n - 1) // 2
    return st.lists(st.sampled_from(choices), min_size=k, max_size=k).map(lambda xs: (n, xs))


@given(st.integers(2, 4).flatmap(_label_lists))
@settings(max_examples=40, deadline=None)
def test_classification_agrees_with_enumeration(data):
    n, xs = data
    lab = [[1] * n for _ in range(n)]
    for (i, j), x in zip(combinations(range(n), 2), xs):
        lab[i][j] = lab[j][i] = x
    m = CoxeterMatrix(tuple(tuple(r) for r in lab))
    try:
        ball = build_ball(m, 30, mem_cap=2000)
        finite = ball.complete
    except BallTooLarge:
        finite = False
    assert is_finite_type(m) == finite
    if finite:
        assert len(ball) == group_order(m)


# -- ball vs permutation oracle -------------------------------------------


@pytest.mark.parametrize("name", ORACLE_TYPES)
def test_ball_matches_permutation_model(name):
    m = catalog(name)
    ball = build_ball(m)
    gens = perm_generators(name)
    oracle = enumerate_group(gens)
    assert len(ball) == len(oracle)
    assert ball.length_histogram() == [c for _, c in sorted(Counter(oracle.values()).items())]
    image = [word_to_perm(ball.word(w), gens) for w in range(len(ball))]
    assert len(set(image)) == len(ball)
    for w in range(len(ball)):
        assert oracle[image[w]] == ball.lengths[w]
        for s in range(m.rank):
            assert image[ball.right_mul[w][s]] == compose(image[w], gens[s])
            assert image[ball.left_mul[s][w]] == compose(gens[s], image[w])
        assert compose(image[w], image[ball.inverse[w]]) == tuple(range(len(gens[0])))


def test_ball_examples():
    a2 = build_ball(catalog("A2"))
    assert len(a2) == 6 and a2.length_histogram() == [1, 2, 2, 1]
    at = build_ball(catalog("Atilde1"), 4)
    assert len(at) == 9 and at.length_histogram() == [1, 2, 2, 2, 2]
    assert len(build_ball(CoxeterMatrix(()))) == 1


def test_ball_errors():
    with pytest.raises(BallError, match="infinite"):
        build_ball(catalog("Atilde1"))
    with pytest.raises(BallTooLarge) as info:
        build_ball(catalog("A5"), mem_cap=100)
    assert info.value.radius >= 0
    ball = build_ball(catalog("Atilde1"), 3)
    with pytest.raises(RadiusError):
        ball.element_from_word([0, 1, 0, 1])


def test_element_words_are_reduced_and_consistent():
    ball = build_ball(catalog("Atilde2"), 5)
    for w in range(len(ball)):
        word = ball.word(w)
        assert len(word) == ball.lengths[w]
        assert ball.element_from_word(word) == w
        assert ball.word(ball.inverse[w]) == tuple(reversed(word)) or ball.element_from_word(tuple(reversed(word))) == ball.inverse[w]


# -- cosets ---------------------------------------------------------------


def test_coset_examples():
    m = catalog("A2")
    ball = build_ball(m)
    assert [r.index for r in coset_reps(ball, m.generators)] == [0]
    assert len(coset_reps(ball, [])) == 6
    words = sorted(ball.word_str(r.index) for r in coset_reps(ball, [1]))
    assert words == sorted(["[]", "[s]", "[t,s]"])
    sts = ball.element_from_word([0, 1, 0])
    d = parabolic_decompose(ball, sts, [1])
    assert ball.word(d.coset_part.index) == (1, 0)
    assert ball.word(d.parabolic_part.index) == (1,)
    for w in range(len(ball)):
        d = parabolic_decompose(ball, w, [])
        assert (d.coset_part.index, d.parabolic_part.index) == (w, 0)
    d = parabolic_decompose(ball, 0, [0, 1])
    assert (d.coset_part.index, d.parabolic_part.index) == (0, 0)


@pytest.mark.parametrize("name,radius", [("A2", None), ("B2", None), ("A3", None), ("H3", None), ("Atilde1", 8), ("Atilde2", 5)])
def test_coset_machinery(name, radius):
    m = catalog(name)
    ball = build_ball(m, radius)
    inner = [w for w in range(len(ball)) if ball.complete or ball.lengths[w] < ball.radius]
    reps = {}
    for I in subsets(m.rank):
        reps[I] = {r.index for r in coset_reps(ball, I)}
        # W^I = elements with no right descent in I
        assert reps[I] == {w for w in range(len(ball)) if not (ball.right_desc[w] & I)}
        for w in range(len(ball)):
            d = parabolic_decompose(ball, w, I)
            y, u = d.coset_part.index, d.parabolic_part.index
            assert ball.multiply(y, u) == w
            assert ball.lengths[y] + ball.lengths[u] == ball.lengths[w]
            assert y in reps[I] and ball.in_parabolic(u, I)
        # each coset meets W^I exactly once
        if ball.complete and is_finite_type(m, I):
            assert len(reps[I]) * group_order(m, I) == len(ball)
    for I in subsets(m.rank):
        for J in subsets(m.rank):
            if I <= J:
                assert reps[J] <= reps[I]
    assert reps[m.generators] == {0}
    assert reps[frozenset()] == set(range(len(ball)))
    for s in range(m.rank):
        free = {w for w in inner if s not in ball.left_desc[w]}
        assert not (free & {ball.left_mul[s][w] for w in free})
        assert set(inner) <= free | {ball.left_mul[s][w] for w in free}


# -- Poincare series ------------------------------------------------------


def test_poincare_examples():
    assert poincare_exact(catalog("A2")) == RationalFunction(1 + 2 * q + 2 * q**2 + q**3)
    assert poincare_exact(catalog("Atilde1")) == RationalFunction(1 + q, 1 - q)
    assert poincare_exact(catalog("Atilde1"), []) == RationalFunction(1)
    assert poincare_truncated(build_ball(catalog("A2")), 3) == 1 + 2 * q + 2 * q**2 + q**3
    at = build_ball(catalog("Atilde1"), 3)
    assert poincare_truncated(at, 3) == 1 + 2 * q + 2 * q**2 + 2 * q**3
    assert poincare_truncated(at, 0) == IntPolynomial((1,))
    with pytest.raises(RadiusError):
        poincare_truncated(at, 4)


def test_dihedral_poincare():
    for n in range(5, 13):
        expected = (1 + q) * sum((q**k for k in range(n)), IntPolynomial(()))
        assert poincare_exact(catalog(f"I2({n})")) == RationalFunction(expected)


@pytest.mark.parametrize("name", ["A4", "B4", "D4", "F4", "H3"])
def test_degree_formula_matches_enumeration(name):
    m = catalog(name)
    assert poincare_exact(m) == RationalFunction(poincare_truncated(build_ball(m), 10**6))


@pytest.mark.parametrize("name,order", [("Atilde1", 10), ("Atilde2", 8), ("Btilde2", 8), ("Hyp334", 6)])
def test_series_matches_length_counts(name, order):
    m = catalog(name)
    counts = poincare_truncated(build_ball(m, order), order)
    assert rf_series(poincare_exact(m), order) == [counts[k] for k in range(order + 1)]


FINITE_CATALOG = [n for n in CATALOG_NAMES if is_finite_type(catalog(n))]


@pytest.mark.parametrize("name", FINITE_CATALOG + ["A1xA1", "A2xI2(5)"])
def test_finite_catalog_series_and_order(name):
    m = catalog(name)
    p = poincare_exact(m)
    assert p.is_polynomial()
    assert p.num(1) == group_order(m)
    L = 10
    if group_order(m) <= 2000:
        counts = poincare_truncated(build_ball(m), L)
        assert rf_series(p, L) == [counts[k] for k in range(L + 1)]


def test_large_types_use_degree_product():
    p = poincare_exact(catalog("E8"))
    assert p.num(1) == 696729600
    assert p.num.degree == 120
