import pytest
from hypothesis import given, strategies as st

from spin7kit import pipeline
from spin7kit.cohomology import HodgeDiamond, SurfaceInvariants, surface_from_chi_h02
from spin7kit.errors import ClassificationError, InconsistencyError, StageError
from spin7kit.pipeline import BlockInvariants, Holonomy, Stage

CP4 = {i: int(i % 2 == 0) for i in range(9)}


def v_block(chi=5, tau=1, betti=None, k=1):
    return BlockInvariants("V", chi, tau, Stage.V, CP4 if betti is None else betti, k)


def zero_surface():
    return SurfaceInvariants(0, 0, (0, 0, 0, 0, 0), HodgeDiamond(2, ((0,) * 3,) * 3))


def section4_chain():
    xbar = pipeline.blow_up(v_block(), surface_from_chi_h02(1376, 199))
    x = pipeline.open_part(xbar, -296, 1)
    z = pipeline.quotient(x, 1)
    mt = pipeline.glue(z, z)
    return xbar, x, z, mt, pipeline.resolve(mt, simply_connected=True)


def test_section4_chain():
    xbar, x, z, mt, report = section4_chain()
    assert (xbar.chi, xbar.tau, xbar.b(2), xbar.b(3)) == (1381, 577, 2, 0)
    assert (x.chi, x.tau, x.b(2), x.b(3)) == (1677, 577, 1, 0)
    assert (z.chi, z.tau) == (839, 289)
    assert (mt.chi, mt.tau, mt.b(4), mt.sing_points) == (1678, 578, 1676, 2)
    f = report.final
    assert (f.chi, f.tau, f.b(2), f.b(3), f.b(4)) == (1680, 576, 0, 0, 1678)
    assert report.a_hat == 1 and report.holonomy is Holonomy.SPIN7
    assert any("simply connected" in a for a in report.assumption_log)
    assert any("sigma-invariant" in a for a in report.assumption_log)


def test_blow_up_with_empty_surface_keeps_v():
    v = v_block()
    xbar = pipeline.blow_up(v, zero_surface())
    assert (xbar.chi, xbar.tau, xbar.betti, xbar.sing_points) == (v.chi, v.tau, v.betti, v.sing_points)


def test_blow_up_table_block():
    v1 = BlockInvariants("V1", 306, 162, Stage.V, {0: 1, 1: 0, 2: 1, 3: 0, 4: 302, 5: 0, 6: 1, 7: 0, 8: 1}, 2)
    xbar = pipeline.blow_up(v1, surface_from_chi_h02(304, 35))
    assert (xbar.chi, xbar.tau) == (610, 322)


def test_blow_up_needs_b2_b3():
    with pytest.raises(StageError):
        pipeline.blow_up(BlockInvariants("V", 5, 1, Stage.V, {}), zero_surface())


def test_open_part_trivial_divisor():
    xbar = pipeline.blow_up(v_block(), surface_from_chi_h02(1376, 199))
    assert pipeline.open_part(xbar, 0, 1).chi == xbar.chi


@given(st.integers(-500, 500), st.integers(-500, 500))
def test_free_quotient_halves(c, t):
    x = BlockInvariants("X", 2 * c, 2 * t, Stage.X, {2: 0, 3: 0})
    z = pipeline.quotient(x, 0)
    assert (z.chi, z.tau) == (c, t)


@given(st.integers(-500, 500), st.integers(-500, 500), st.integers(0, 5))
def test_doubling_symmetry(c, t, k):
    z = BlockInvariants("Z", c, t, Stage.Z, {2: 0, 3: 0}, k)
    if 2 * c - 2 < 0:
        with pytest.raises(InconsistencyError):
            pipeline.glue(z, z)
        return
    mt = pipeline.glue(z, z)
    assert (mt.chi, mt.tau, mt.sing_points) == (2 * c, 2 * t, 2 * k)


def test_mixed_glue():
    z1 = BlockInvariants("Z1", 454, 162, Stage.Z, {2: 0, 3: 0}, 2)
    z2 = BlockInvariants("Z2", 839, 289, Stage.Z, {2: 0, 3: 0}, 1)
    mt = pipeline.glue(z1, z2)
    assert (mt.chi, mt.sing_points) == (1293, 3)
    report = pipeline.resolve(mt, simply_connected=True)
    assert (report.final.chi, report.final.tau, report.final.b(4), report.a_hat) == (1296, 448, 1294, 1)


def test_glue_with_zero_block():
    z = BlockInvariants("Z", 839, 289, Stage.Z, {2: 0, 3: 0}, 1)
    mt = pipeline.glue(z, BlockInvariants("0", 0, 0, Stage.Z, {2: 0, 3: 0}))
    assert (mt.chi, mt.tau, mt.sing_points) == (839, 289, 1)


def test_stage_guards():
    v = v_block()
    with pytest.raises(StageError):
        pipeline.open_part(v, 0, 0)
    with pytest.raises(StageError):
        pipeline.quotient(v, 1)
    with pytest.raises(StageError):
        pipeline.glue(v, v)
    with pytest.raises(StageError):
        pipeline.resolve(v)
    with pytest.raises(StageError):
        pipeline.crepant_block(v)
    with pytest.raises(StageError):
        pipeline.cy_double(v, 0)


def test_halving_guard_on_corrupted_fixed_count():
    _, x, *_ = section4_chain()
    with pytest.raises(InconsistencyError, match="odd"):
        pipeline.quotient(x, 2)
    with pytest.raises(ValueError):
        pipeline.quotient(x, -1)


def test_a_hat_guard_on_corrupted_invariants():
    _, _, _, mt, _ = section4_chain()
    corrupted = BlockInvariants("Mt", mt.chi + 2, mt.tau, Stage.MTRIANGLE, {}, mt.sing_points)
    with pytest.raises(InconsistencyError, match="48"):
        pipeline.resolve(corrupted)
    with pytest.raises(InconsistencyError):
        pipeline.a_hat(1680, 577)


def test_betti_sum_guard():
    with pytest.raises(InconsistencyError):
        BlockInvariants("M", 1681, 576, Stage.M, {0: 1, 1: 0, 2: 0, 3: 0, 4: 1678, 5: 0, 6: 0, 7: 0, 8: 1})
    with pytest.raises(ValueError):
        BlockInvariants("M", 0, 0, Stage.M, {}, -1)


def test_classification_error_when_simply_connected():
    mt = BlockInvariants("Mt", 142, 50, Stage.MTRIANGLE, {}, 2)  # resolves to chi 144, tau 48: A-hat 0
    with pytest.raises(ClassificationError):
        pipeline.resolve(mt, simply_connected=True)
    assert pipeline.resolve(mt).holonomy is Holonomy.INDETERMINATE


def test_crepant_block_and_cy_double():
    xbar, *_ = section4_chain()
    xhat = pipeline.crepant_block(xbar)
    assert (xhat.chi, xhat.tau) == (1384, 576)
    report = pipeline.cy_double(xhat, -296, simply_connected=True)
    assert (report.final.chi, report.final.tau, report.a_hat) == (3360, 1152, 2)
    assert report.holonomy is Holonomy.SU4


def test_crepant_synthetic_and_trivial():
    xbar = BlockInvariants("Xbar", 610, 322, Stage.XBAR, {}, 2)
    assert (pipeline.crepant_block(xbar).chi, pipeline.crepant_block(xbar).tau) == (616, 320)
    plain = BlockInvariants("Xbar", 100, 10, Stage.XBAR, {}, 0)
    assert (pipeline.crepant_block(plain).chi, pipeline.crepant_block(plain).tau) == (100, 10)


def test_cy_double_degenerate():
    xhat = BlockInvariants("Xhat", 0, 0, Stage.XHAT)
    report = pipeline.cy_double(xhat, 0, simply_connected=True)
    assert report.final.chi == 0 and report.a_hat == 0
    assert report.holonomy is Holonomy.INDETERMINATE


def test_holonomy_table():
    expected = {1: Holonomy.SPIN7, 2: Holonomy.SU4, 3: Holonomy.SP2, 4: Holonomy.SP1XSP1}
    for a, h in expected.items():
        assert pipeline.classify_holonomy(a, True) is h
        assert pipeline.classify_holonomy(a, False) is Holonomy.INDETERMINATE
    assert pipeline.classify_holonomy(5, True) is Holonomy.INDETERMINATE


@given(st.integers(-40, 40), st.integers(0, 40))
def test_a_hat_identity(a, tau):
    chi = 3 * tau - 48 * a
    assert pipeline.a_hat(chi, tau) == a


def test_report_round_trip():
    report = section4_chain()[-1]
    assert pipeline.GluingReport.from_dict(report.to_dict()) == report
    b = report.final
    assert BlockInvariants.from_dict(b.to_dict()) == b
