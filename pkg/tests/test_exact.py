from fractions import Fraction
from itertools import permutations

from hypothesis import given, strategies as st

from spin7kit import exact

small = st.integers(-5, 5)


def matrices(n, m=None):
    return st.lists(st.lists(small, min_size=m or n, max_size=m or n), min_size=n, max_size=n)


def leibniz(m):
    n = len(m)
    total = 0
    for p in permutations(range(n)):
        inversions = sum(p[i] > p[j] for i in range(n) for j in range(i + 1, n))
        term = (-1) ** inversions
        for i in range(n):
            term *= m[i][p[i]]
        total += term
    return total


def test_det_identity_and_singular():
    assert exact.det([[1, 0], [0, 1]]) == 1
    assert exact.det([[1, 2], [2, 4]]) == 0
    assert exact.det([[Fraction(1, 2), 0], [0, 4]]) == 2


@given(st.integers(1, 4).flatmap(matrices))
def test_det_matches_leibniz(m):
    assert exact.det(m) == leibniz(m)


@given(st.integers(1, 4).flatmap(matrices))
def test_rank_full_iff_det_nonzero(m):
    assert (exact.rank(m) == len(m)) == (leibniz(m) != 0)


@given(matrices(3, 5))
def test_nullspace_is_kernel_of_right_size(m):
    kernel = exact.nullspace(m, ncols=5)
    assert len(kernel) == 5 - exact.rank(m)
    for v in kernel:
        assert all(sum(a * x for a, x in zip(row, v)) == 0 for row in m)


def test_rank_of_empty_and_zero():
    assert exact.rank([]) == 0
    assert exact.rank([[0, 0], [0, 0]]) == 0


def test_rref_pivots_and_span():
    rows, pivots = exact.rref([[2, 4, 6], [1, 2, 4]])
    assert pivots == [0, 2]
    assert rows[0][0] == 1 and rows[1][2] == 1
    assert exact.in_span([3, 6, 10], [[2, 4, 6], [1, 2, 4]])
    assert not exact.in_span([0, 1, 0], [[2, 4, 6], [1, 2, 4]])


def test_primitive_clears_denominators():
    assert exact.primitive([Fraction(1, 2), Fraction(-3, 4), 0]) == [2, -3, 0]
