from fractions import Fraction
from itertools import combinations
from math import gcd

import pytest
from hypothesis import given, strategies as st

from spin7kit import wps
from spin7kit.errors import UnsupportedStratumError
from spin7kit.polynomial import parse_polynomial, restrict
from spin7kit.wps import ConstructionConfig, SingularStratum, Weights

weight_vectors = st.lists(st.integers(1, 12), min_size=2, max_size=6).filter(
    lambda a: gcd(*a) == 1 if len(a) > 1 else a == [1])


def test_weights_validation():
    with pytest.raises(ValueError):
        Weights((2, 4))
    with pytest.raises(ValueError):
        Weights((1, 0, 2))
    with pytest.raises(ValueError):
        Weights((1,))


def test_well_formed_examples():
    assert wps.is_well_formed((1, 1, 1, 1, 4))
    assert not wps.is_well_formed((1, 2, 2))
    assert wps.is_well_formed((1, 1))


def test_normalize_examples():
    assert wps.normalize((1, 2, 2)).a == (1, 1, 1)
    assert wps.normalize((1, 1, 1, 1, 4)).a == (1, 1, 1, 1, 4)
    assert wps.normalize((2, 3, 3)).a == (2, 1, 1)
    assert wps.normalize((6, 10, 15)).a == (1, 1, 1)


@given(weight_vectors)
def test_normalize_idempotent_and_well_formed(a):
    w = wps.normalize(a)
    assert wps.is_well_formed(w)
    assert wps.normalize(w) == w


def test_strata_examples():
    assert wps.singular_strata((1, 1, 1, 1, 4)) == [SingularStratum((4,), 4, (1, 1, 1, 1))]
    assert wps.singular_strata((1, 1, 1, 1, 4, 4)) == [SingularStratum((4, 5), 4, (1, 1, 1, 1))]
    assert wps.singular_strata((1, 1, 1, 1)) == []
    assert wps.singular_strata((1, 1, 1, 1, 4, 4))[0].dimension == 1


def brute_force_maximal(a):
    """All index sets with gcd > 1, keep the maximal ones."""
    sets = [set(s) for r in range(1, len(a) + 1) for s in combinations(range(len(a)), r)
            if gcd(*(a[i] for i in s)) > 1]
    return sorted(tuple(sorted(s)) for s in sets if not any(s < t for t in sets))


@given(weight_vectors)
def test_strata_match_subset_oracle(a):
    strata = wps.singular_strata(a)
    assert [s.support for s in strata] == brute_force_maximal(a)
    for s, t in combinations(strata, 2):
        assert not set(s.support) <= set(t.support) and not set(t.support) <= set(s.support)


def test_count_points_examples():
    assert wps.count_stratum_points({(2, 0): 1, (0, 2): -1}) == 2  # z4^2 - z5^2
    assert wps.count_stratum_points({(1, 0): 2, (0, 1): 1}) == 1  # 2 z4 + z5
    assert wps.count_stratum_points({(2, 0): 1}) == 1  # z4^2
    assert wps.count_stratum_points({(0,): 0}) == 1
    assert wps.count_stratum_points({(3,): 1}) == 0
    with pytest.raises(UnsupportedStratumError):
        wps.count_stratum_points({(1, 0, 0): 1})
    with pytest.raises(ValueError):
        wps.count_stratum_points({(1, 1): 0})


def test_count_points_roots_at_infinity():
    # x * y * (x - y): three points, one of them [1:0]
    assert wps.count_stratum_points({(2, 1): 1, (1, 2): -1}) == 3
    # x^2 + y^2 has no rational roots but two complex ones
    assert wps.count_stratum_points({(2, 0): 1, (0, 2): 1}) == 2


@st.composite
def binary_forms(draw):
    roots = draw(st.lists(st.integers(-4, 4), min_size=1, max_size=4))
    inf = draw(st.integers(0, 2))
    # prod (x - r y) * y^inf, expanded in dense form indexed by power of x
    poly = [Fraction(1)]
    for r in roots:
        nxt = [Fraction(0)] * (len(poly) + 1)
        for i, c in enumerate(poly):
            nxt[i + 1] += c
            nxt[i] -= r * c
        poly = nxt
    deg = len(poly) - 1 + inf
    form = {(i, deg - i): c for i, c in enumerate(poly) if c}
    return form, len(set(roots)) + (1 if inf else 0)


@given(binary_forms(), st.integers(1, 7))
def test_point_count_matches_roots_and_is_scale_invariant(case, scale):
    form, expected = case
    assert wps.count_stratum_points(form) == expected
    assert wps.count_stratum_points({k: scale * c for k, c in form.items()}) == expected
    assert wps.count_stratum_points({k: -c for k, c in form.items()}) == expected


def test_restriction_of_table_equations():
    f = parse_polynomial("z0^8 + z1^8 + z2^8 + z3^8 + z4^2 - z5^2", 6)
    assert wps.count_stratum_points(restrict(f, (4, 5))) == 2
    g = parse_polynomial("z0^4 + z1^4 + z2^4 + z3^4 + 2*z4 + z5", 6)
    assert wps.count_stratum_points(restrict(g, (4, 5))) == 1


def test_scalar_z4_action():
    assert wps.is_scalar_z4_action(SingularStratum((4,), 4, (1, 1, 1, 1)))
    assert wps.is_scalar_z4_action(SingularStratum((4,), 4, (3, 3, 3, 3)))
    assert not wps.is_scalar_z4_action(SingularStratum((4,), 4, (1, 1, 3, 3)))
    assert not wps.is_scalar_z4_action(SingularStratum((4,), 2, (1, 1, 1, 1)))
    assert not wps.is_scalar_z4_action(SingularStratum((4,), 4, (2, 2, 2, 2)))


def _config(weights, v, d, s, **flags):
    return ConstructionConfig(Weights(weights), v, d, s, {k: (v_, "test") for k, v_ in flags.items()})


def _status(report, label):
    return next(r.status for r in report if r.label == label)


def test_conditions_pass():
    rep = wps.check_conditions(_config((1, 1, 1, 1, 4), (), 8, 8))
    assert rep.ok
    assert _status(rep, "(1)") == "PASS"
    assert _status(rep, "(4) degree") == "PASS"
    rep = wps.check_conditions(_config((1, 1, 1, 1, 4, 4), (8,), 4, 4))
    assert rep.ok
    assert "8 + 4 = 12" in next(r.detail for r in rep if r.label == "(1)")


def test_conditions_fail_with_both_sides():
    rep = wps.check_conditions(_config((1, 1, 1, 1, 4), (), 7, 8))
    assert not rep.ok
    bad = {r.label: r.detail for r in rep.failures()}
    assert "7" in bad["(1)"] and "8" in bad["(1)"]
    assert "(4) degree" in bad


def test_conditions_assertions():
    rep = wps.check_conditions(_config((1, 1, 1, 1, 4), (), 8, 8, quasismooth=True, s_smooth=False))
    assert _status(rep, "(2)") == "ASSERTED"
    assert [r.label for r in rep.failures()] == ["(4)"]
    assert _status(rep, "(3)") == "MISSING"
    with pytest.raises(ValueError):
        _config((1, 1, 1, 1, 4), (), 8, 8, bogus=True)


def test_fermat_quasismooth():
    assert wps.fermat_quasismooth((1, 1, 1, 1, 4), 8)
    assert not wps.fermat_quasismooth((1, 1, 1, 1, 3), 8)
