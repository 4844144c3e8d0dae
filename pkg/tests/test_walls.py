from fractions import Fraction as F

import pytest

from tiltbound.chern import X24, ChernVec, grr_push_to_k3, CurveClass
from tiltbound.exactnum import QuadNum, qn_compare, scalar_sign
from tiltbound.tilt import TiltParams
from tiltbound.walls import (
    BN_THRESHOLD_POLY,
    DegenerateWall,
    NoIntersection,
    OutOfRange,
    WallLine,
    ZeroReducedCharacter,
    bn_threshold,
    first_wall_bounds,
    gamma_curve,
    gamma_piece,
    gamma_piece_index,
    intersect_line_with_piece,
    line_gamma_intersection,
    nested_wall_line,
)


# -- nested wall lines -----------------------------------------------------------


def test_nested_wall_line_structure_sheaf():
    line = nested_wall_line(ChernVec(X24, (1, 0, 0, 0)), TiltParams(F(1, 2), -1))
    # alpha + beta/2 = 0
    assert (line.a, line.b, line.c) == (1, F(1, 2), 0)
    assert line.contains(TiltParams(F(1, 2), -1))
    assert line.contains(TiltParams(0, 0))


def test_nested_wall_line_torsion_slope():
    v = grr_push_to_k3(CurveClass(1, 16))  # ch0 = 0, slope mu/4 - 16 = -12
    p0 = TiltParams(F(1), F(0))
    line = nested_wall_line(v, p0)
    assert line.contains(p0)
    # alpha = s*beta + c with s = inum2/inum1 = -48/32 (the K3 chart scales
    # this by H^2, recovering the mu/4 - 16 figure)
    s = v.inum(2) / v.inum(1)
    assert s == F(-3, 2)
    assert line.contains(TiltParams(1 + s, 1))


def test_nested_wall_line_degenerate():
    v = ChernVec(X24, (1, 1, F(1, 2), F(1, 6)))
    p_h = TiltParams(v.inum(2) / v.inum(0), v.inum(1) / v.inum(0))
    with pytest.raises(DegenerateWall):
        nested_wall_line(v, p_h)
    with pytest.raises(ZeroReducedCharacter):
        nested_wall_line(ChernVec(X24, (0, 0, 0, 1)), TiltParams(1, 0))


# -- Gamma ------------------------------------------------------------------------


def test_gamma_values():
    assert gamma_curve(0) == 0
    assert gamma_curve(F(1, 2)) == F(1, 4)
    assert gamma_curve(2) == 16  # integer convention 4n^2
    assert gamma_curve(F(-7, 2)) == gamma_piece(-3).evaluate(F(-7, 2))
    assert gamma_curve(F(-7, 2)) == gamma_piece(-4).evaluate(F(-7, 2))


def test_gamma_piece_index():
    assert gamma_piece_index(F(3, 4)) == 1
    assert gamma_piece_index(F(-3, 4)) == -1
    assert gamma_piece_index(F(5, 2)) == 3  # ties go to the upper piece


def test_gamma_below_parabola():
    for k in range(-128, 129):
        x = F(k, 32)
        g = gamma_curve(x)
        if x.denominator == 1:
            assert g == 4 * x * x
        else:
            assert g < 4 * x * x


def test_gamma_quadnum_argument():
    x = QuadNum(0, F(1, 5), 5)  # sqrt(5)/5 ~ 0.447
    val = gamma_curve(x)
    # piece 0: 5x^2 - 1 = 5/5 - 1 = 0
    assert scalar_sign(val) == 0


# -- line/Gamma intersections ------------------------------------------------------


def test_intersection_examples():
    assert line_gamma_intersection(F(97, 10), "right") == F(5, 2)
    assert line_gamma_intersection(F(-63, 4), "left") == F(-4)
    x = line_gamma_intersection(0, "right")
    assert isinstance(x, QuadNum) and x == QuadNum(0, F(1, 5), 5)


def test_intersection_residuals_sweep():
    from tiltbound.walls import _LEFT_RANGES, _RIGHT_RANGES

    for side, table in (("right", _RIGHT_RANGES), ("left", _LEFT_RANGES)):
        for lo, hi, n in table:
            piece = gamma_piece(n)
            for i in range(24):
                k = lo + (hi - lo) * F(i, 24)
                x = line_gamma_intersection(k, side)
                assert scalar_sign(k * x - piece.evaluate(x)) == 0


def test_intersection_out_of_table():
    with pytest.raises(OutOfRange):
        line_gamma_intersection(F(1, 3), "right")  # gap (1/4, 1/2)
    with pytest.raises(OutOfRange):
        line_gamma_intersection(F(20), "right")


def test_intersection_no_intersection():
    with pytest.raises(NoIntersection):
        intersect_line_with_piece(F(1), 2, True)  # y = x misses 5x^2-4x+3


def test_rational_piece_intersections():
    # piece 1 intersections are rational: x0 = (2+k)/5
    for k in (F(1, 2), F(3, 2), F(5), F(11, 2)):
        x = line_gamma_intersection(k, "right")
        assert x == (2 + k) / 5


# -- first wall --------------------------------------------------------------------


def test_first_wall_basic():
    fw = first_wall_bounds(16)
    assert (fw.beta1_min, fw.beta2_max) == (F(-7, 2), F(1, 2))
    assert not fw.bn_semistable
    assert fw.exceptional_case is None


def test_first_wall_bn_flag():
    assert first_wall_bounds(2).bn_semistable
    assert not first_wall_bounds(3).bn_semistable
    # exact threshold root
    thr = bn_threshold()
    assert scalar_sign(BN_THRESHOLD_POLY.evaluate(thr)) == 0
    assert first_wall_bounds(F(2024, 1000)).bn_semistable
    assert not first_wall_bounds(F(2025, 1000)).bn_semistable
    assert qn_compare(F(2024, 1000), thr) < 0 < qn_compare(F(2025, 1000), thr)


def test_first_wall_exceptions():
    fw = first_wall_bounds(F(127, 2))
    assert fw.exceptional_case == "mu_63_64" and fw.beta2_max == 2
    fw = first_wall_bounds(F(63, 2))
    assert fw.exceptional_case == "mu_31_32" and fw.beta2_max == 1
    fw = first_wall_bounds(F(65, 2))
    assert fw.exceptional_case == "mu_32_33" and fw.beta1_min == -3
    assert fw.beta2_max == F(65, 64)


def test_first_wall_assume_maximal():
    fw = first_wall_bounds(F(127, 2), assume_maximal=True)
    assert fw.beta2_max == F(127, 64) and fw.exceptional_case is None


def test_first_wall_out_of_range():
    with pytest.raises(OutOfRange):
        first_wall_bounds(65)
    with pytest.raises(OutOfRange):
        first_wall_bounds(-1)


def test_first_wall_width_invariant():
    for k in range(0, 257):
        mu = F(64 * k, 256)
        fw = first_wall_bounds(mu)
        width = fw.beta2_max - fw.beta1_min
        cap = 4 if fw.exceptional_case is None else F(4) + F(1, 32)
        assert width <= cap
        assert fw.beta1_min >= -4 and fw.beta2_max <= 4
        assert fw.beta1_min < fw.beta2_max


def test_secant_relation():
    # Gamma(mu/32) - Gamma(mu/32 - 4) = mu - 64, all mu (periodic correction cancels)
    for k in range(0, 257):
        mu = F(64 * k, 256)
        assert gamma_curve(mu / 32) - gamma_curve(mu / 32 - 4) == mu - 64


def test_wall_line_normalization():
    line = WallLine(F(-8), F(-4), 0)
    assert (line.a, line.b, line.c) == (1, F(1, 2), 0)
    line2 = WallLine(0, F(3), F(6))
    assert (line2.a, line2.b, line2.c) == (0, 1, 2)
    with pytest.raises(ValueError):
        WallLine(0, 0, 1)
