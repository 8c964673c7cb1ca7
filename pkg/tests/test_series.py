from itertools import product
from math import comb

import pytest
from hypothesis import given, strategies as st

from spin7kit import series
from spin7kit.errors import DegeneratePartialError, TruncationError
from spin7kit.series import RationalSeriesSpec, coefficient, expand, graded_dimension, jacobian_spec


def count_monomials(weights, m, caps=None):
    """Monomials z^k of weighted degree m with k_i < caps[i]; the brute-force oracle."""
    ranges = [range((m // a) + 1 if caps is None else min(caps[i], m // a + 1)) for i, a in enumerate(weights)]
    return sum(1 for k in product(*ranges) if sum(e * a for e, a in zip(k, weights)) == m)


def test_quartic_jacobian_series():
    s = expand(RationalSeriesSpec((7, 7, 7, 7), (1, 1, 1, 1), 8))
    assert list(s.coeffs) == [1, 4, 10, 20, 35, 56, 84, 116, 149]
    assert coefficient(s, 7) == comb(10, 3) - 4 * comb(3, 3)


def test_residue_ring_coefficient():
    s = expand(RationalSeriesSpec((8, 8), (1, 1, 1, 1, 4), 8))
    assert coefficient(s, 8) == 199


def test_geometric_series_and_zero_ring():
    assert list(expand(RationalSeriesSpec((), (1,), 6)).coeffs) == [1] * 7
    assert set(expand(RationalSeriesSpec((0, 3), (1, 1), 5)).coeffs) == {0}


def test_default_order_and_truncation():
    s = expand(RationalSeriesSpec((7, 7), (1, 1)))
    assert s.order == 14
    assert coefficient(s, -1) == 0
    with pytest.raises(TruncationError):
        coefficient(s, 15)
    assert graded_dimension(RationalSeriesSpec((7, 7), (1, 1)), 30) == 0


def test_invalid_specs():
    with pytest.raises(ValueError):
        RationalSeriesSpec((1,), (0,))
    with pytest.raises(ValueError):
        RationalSeriesSpec((-1,), (1,))
    with pytest.raises(ValueError):
        RationalSeriesSpec((1,), (1,), -2)


def test_jacobian_spec_examples():
    assert jacobian_spec((1, 1, 1, 1, 4), 8) == RationalSeriesSpec((7, 7, 7, 7), (1, 1, 1, 1))
    assert jacobian_spec((1, 1, 1, 1, 4, 4), 8) == RationalSeriesSpec((7, 7, 7, 7), (1, 1, 1, 1))
    assert jacobian_spec((1, 1, 1, 1), 4) == RationalSeriesSpec((3, 3, 3, 3), (1, 1, 1, 1))
    assert jacobian_spec((1, 1, 1, 1, 4, 4), 4).is_zero
    with pytest.raises(DegeneratePartialError):
        jacobian_spec((1, 1, 5), 4)


weights_st = st.lists(st.integers(1, 4), min_size=1, max_size=4)


@given(weights_st, st.integers(0, 14))
def test_polynomial_ring_matches_monomial_count(weights, m):
    assert graded_dimension(RationalSeriesSpec((), tuple(weights)), m) == count_monomials(weights, m)


@given(st.lists(st.integers(1, 4), min_size=1, max_size=3), st.integers(1, 3), st.integers(0, 16))
def test_fermat_jacobian_matches_monomial_count(heavy, mult, m):
    # f = sum z_i^(d/a_i); R(f) has basis z^k with k_i < d/a_i - 1
    w = [1, *heavy]
    d = 12 * mult
    caps = [d // a - 1 for a in w]
    assert graded_dimension(jacobian_spec(w, d), m) == count_monomials(w, m, caps)


specs = st.builds(RationalSeriesSpec, st.lists(st.integers(1, 6), max_size=3).map(tuple),
                  st.lists(st.integers(1, 4), min_size=1, max_size=4).map(tuple), st.just(20))


@given(specs, st.integers(1, 5))
def test_pascal_recurrence(spec, a):
    # multiplying by 1/(1-t^a) is c'_m = c_m + c'_{m-a}
    s = expand(spec)
    t = expand(RationalSeriesSpec(spec.numerator, spec.denominator + (a,), 20))
    for m in range(21):
        assert t[m] == s[m] + (t[m - a] if m >= a else 0)


@given(specs, st.integers(0, 20))
def test_prefix_agreement(spec, n):
    short = expand(spec.with_order(n))
    long = expand(spec)
    assert short.coeffs == long.coeffs[:n + 1]


@given(st.lists(st.integers(1, 4), min_size=1, max_size=4), st.integers(1, 4).map(lambda k: 12 * k))
def test_regular_sequence_coefficients_nonnegative(weights, d):
    w = [*weights, 1]
    spec = jacobian_spec(w, d).with_order(3 * d)
    assert all(c >= 0 for c in expand(spec).coeffs)
    ci = series.complete_intersection_spec(w, (d, d)).with_order(3 * d)
    assert all(c >= 0 for c in expand(ci).coeffs)


def test_simplified_cancels_common_factors():
    assert RationalSeriesSpec((4, 7), (1, 4)).simplified() == RationalSeriesSpec((7,), (1,))
    assert str(RationalSeriesSpec((7,), (1,))) == "(1-t^7)/(1-t^1)"


def test_big_integer_coefficients():
    s = expand(RationalSeriesSpec((), (1,) * 12, 400))
    assert s[400] == comb(411, 11)
