import pytest
from hypothesis import given, strategies as st

from spin7kit import chern, cohomology
from spin7kit.cohomology import HodgeDiamond
from spin7kit.errors import DegeneratePartialError, InconsistencyError

S_ROWS = [[1], [0, 0], [199, 976, 199], [0, 0], [1]]
S1_ROWS = [[1], [0, 0], [35, 232, 35], [0, 0], [1]]


def test_calabi_yau_divisor():
    d = cohomology.hypersurface_hodge((1, 1, 1, 1, 4), 8)
    assert d.n == 3
    assert d[2, 1] == 149 and d[1, 1] == 1 and d[3, 0] == 1
    assert d.euler() == -296
    assert d.betti() == (1, 0, 1, 300, 1, 0, 1)


def test_fourfold_middle_rows():
    assert cohomology.hypersurface_hodge((1, 1, 1, 1, 4, 4), 8).middle_row() == (0, 35, 232, 35, 0)
    assert cohomology.hypersurface_hodge((1, 1, 1, 1, 4, 4), 4).middle_row() == (0, 0, 1, 0, 0)


def test_classical_hypersurfaces():
    k3 = cohomology.hypersurface_hodge((1, 1, 1, 1), 4)
    assert k3.middle_row() == (1, 20, 1)
    quintic = cohomology.hypersurface_hodge((1, 1, 1, 1, 1), 5)
    assert quintic[2, 1] == 101 and quintic.euler() == -200
    with pytest.raises(DegeneratePartialError):
        cohomology.hypersurface_hodge((1, 1, 5), 4)


@given(st.integers(2, 5), st.integers(1, 7))
def test_hypersurface_euler_matches_chern(n, d):
    diamond = cohomology.hypersurface_hodge((1,) * (n + 1), d)
    assert diamond.euler() == chern.euler_ci(n, (d,))
    assert diamond.is_hodge_symmetric() and diamond.is_serre_symmetric()


@pytest.mark.parametrize("w,d", [((1, 1, 1, 1, 4), 8), ((1, 1, 1, 1, 4, 4), 8), ((1, 1, 1, 1, 4, 4), 4),
                                 ((1, 1, 1, 1, 2), 6), ((1, 1, 1, 2, 5), 10)])
def test_produced_diamonds_are_symmetric(w, d):
    diamond = cohomology.hypersurface_hodge(w, d)
    assert diamond.is_hodge_symmetric()
    assert diamond.is_serre_symmetric()


def test_ci_h0q():
    assert cohomology.ci_h0q((1, 1, 1, 1, 4), (8, 8), 0, 2) == 199
    assert cohomology.ci_h0q((1, 1, 1, 1, 4), (8, 8), 0, 1) == 0
    assert cohomology.ci_h0q((1, 1, 1, 1, 4), (8, 8), 0, 0) == 1
    assert cohomology.ci_h0q((1, 1, 1, 1, 4, 4), (8, 4, 4), 0, 2) == 35
    assert cohomology.ci_h0q((1, 1, 1, 1, 4, 4), (4, 8, 8), 0, 2) == 199
    with pytest.raises(ValueError):
        cohomology.ci_h0q((1, 1, 1, 1, 4), (8, 8), 0, 3)


def test_surface_assembly():
    s = cohomology.surface_from_chi_h02(1376, 199)
    assert s.diamond[1, 1] == 976
    assert s.tau == -576
    assert s.betti == (1, 0, 1374, 0, 1)
    s1 = cohomology.surface_from_chi_h02(304, 35)
    assert (s1.diamond[1, 1], s1.tau) == (232, -160)
    t = cohomology.surface_from_chi_h02(4, 0)
    assert (t.diamond[1, 1], t.tau) == (2, 0)
    with pytest.raises(InconsistencyError):
        cohomology.surface_from_chi_h02(10, 5)


def test_signature_by_hodge_index():
    assert cohomology.hodge_signature(HodgeDiamond.from_rows(S_ROWS)) == -576
    assert cohomology.hodge_signature(HodgeDiamond.from_rows(S1_ROWS)) == -160
    p2 = HodgeDiamond(2, ((1, 0, 0), (0, 1, 0), (0, 0, 1)))
    assert cohomology.hodge_signature(p2) == 1
    with pytest.raises(ValueError):
        cohomology.hodge_signature(cohomology.hypersurface_hodge((1, 1, 1, 1, 4), 8))


def test_surface_from_diamond_agrees():
    d = HodgeDiamond.from_rows(S_ROWS)
    s = cohomology.surface_from_diamond(d)
    assert s == cohomology.surface_from_chi_h02(1376, 199)


def test_cy3_betti():
    assert cohomology.cy3_betti(-296, 1) == (1, 0, 1, 300, 1, 0, 1)
    assert cohomology.cy3_diamond(-296, 1)[2, 1] == 149
    assert cohomology.cy3_diamond(-296, 1) == cohomology.hypersurface_hodge((1, 1, 1, 1, 4), 8)
    with pytest.raises(InconsistencyError):
        cohomology.cy3_betti(-295, 1)
    with pytest.raises(InconsistencyError):
        cohomology.cy3_betti(10, 1)


@given(st.integers(0, 50))
def test_cy3_zero_euler(h):
    assert cohomology.cy3_betti(0, h)[3] == 2 + 2 * h


@given(st.integers(0, 300), st.integers(0, 100))
def test_surface_diamond_symmetric(h11, h02):
    s = cohomology.surface_from_chi_h02(2 + 2 * h02 + h11, h02)
    assert s.diamond.is_hodge_symmetric() and s.diamond.is_serre_symmetric()
    assert s.diamond.euler() == s.chi


@given(st.integers(1, 4).flatmap(
    lambda n: st.lists(st.integers(0, 9), min_size=(n + 1) ** 2, max_size=(n + 1) ** 2).map(lambda v: (n, v))))
def test_rows_round_trip(case):
    n, values = case
    d = HodgeDiamond(n, tuple(tuple(values[p * (n + 1):(p + 1) * (n + 1)]) for p in range(n + 1)))
    assert HodgeDiamond.from_rows(d.rows()) == d


def test_from_rows_validation_and_pretty():
    with pytest.raises(ValueError):
        HodgeDiamond.from_rows([[1], [0, 0]])
    with pytest.raises(ValueError):
        HodgeDiamond.from_rows([[1], [0], [1]])
    text = HodgeDiamond.from_rows(S_ROWS).pretty()
    assert "976" in text and text.count("\n") == 4
