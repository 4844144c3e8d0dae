import random
from fractions import Fraction as F

import pytest

from tiltbound.bounds import (
    CLIFFORD_BREAK,
    OutOfDomain,
    SlopeOutOfTable,
    SlopeOutsideTheorem,
    SPADE_CASES,
    bg_bound_surface,
    bg_bound_threefold,
    bg_linear_family,
    bg_quadratic_family,
    bg_refined_family,
    clifford_bound,
    piecewise_check,
    spade,
    spade_case_for_slope,
    spade_fallback,
)
from tiltbound.exactnum import QuadNum, compare_scalars, qn_compare, scalar_sign


# -- spade -------------------------------------------------------------------------


def test_spade_examples():
    assert spade((0, 1)) == QuadNum(0, 1, 5)
    assert spade((-1, 1)) == F(5, 3)


def test_spade_homogeneity():
    rng = random.Random(3)
    count = 0
    while count < 200:
        x = F(rng.randrange(-40, 41), rng.randrange(1, 8))
        y = F(rng.randrange(1, 40), rng.randrange(1, 8))
        t = F(rng.randrange(1, 30), rng.randrange(1, 8))
        try:
            base = spade((x, y))
        except SlopeOutOfTable:
            continue
        scaled = spade((t * x, t * y))
        assert compare_scalars(scaled, t * base) == 0
        count += 1


def test_spade_fallback_homogeneous():
    p = spade_fallback((F(1, 3), F(1, 2)))
    q = spade_fallback((F(7, 3), F(7, 2)))
    assert compare_scalars(q, 7 * p) == 0


def test_spade_out_of_table_and_fallback():
    with pytest.raises(SlopeOutOfTable):
        spade((F(1, 3), 1))  # slope in the gap (1/4, 1/2)
    v = spade((F(1, 3), 1), fallback=True)
    assert compare_scalars(v, spade_fallback((F(1, 3), 1))) == 0


def test_spade_requires_positive_y():
    with pytest.raises(OutOfDomain):
        spade((1, 0))
    with pytest.raises(OutOfDomain):
        spade((1, -1))


def test_spade_case_dispatch():
    assert spade_case_for_slope(F(6)).case_id == 1
    assert spade_case_for_slope(F(2)).case_id == 2
    assert spade_case_for_slope(F(0)).case_id == 3
    assert spade_case_for_slope(F(-2)).case_id == 4
    assert spade_case_for_slope(F(-9)).case_id == 5
    assert spade_case_for_slope(F(-23, 2)).case_id == 6
    assert spade_case_for_slope(F(-17)).case_id == 7
    # band rows own their endpoints
    assert spade_case_for_slope(F(-3)).case_id == 8
    assert spade_case_for_slope(F(-4)).case_id == 8
    assert spade_case_for_slope(F(3)).case_id == 9
    assert spade_case_for_slope(F(4)).case_id == 9
    assert spade_case_for_slope(F(15, 2)).case_id == 9
    assert spade_case_for_slope(F(8)).case_id == 9
    assert spade_case_for_slope(F(-199, 10)).case_id == 8  # n = 5 band [-20, -99/5]
    with pytest.raises(SlopeOutOfTable):
        spade_case_for_slope(F(11))  # gap (97/10, 35/3)


def test_spade_agreement_at_shared_closed_boundaries():
    # -11/2: cases 4 and 5; -97/10: cases 5 and 6; -193/14: cases 6 and 7;
    # 11/2: cases 2 and 1 -- the formulas agree exactly there
    pairs = {
        F(11, 2): (1, 0),
        F(-11, 2): (3, 4),
        F(-97, 10): (4, 5),
        F(-193, 14): (5, 6),
    }
    for s, (i, j) in pairs.items():
        va = SPADE_CASES[i].value(s, F(1))
        vb = SPADE_CASES[j].value(s, F(1))
        assert compare_scalars(va, vb) == 0


def test_spade_gap_at_band_boundaries():
    # at 15/2 the case-1 and case-9 formulas differ by exactly 1/30
    v1 = SPADE_CASES[0].value(F(15, 2), F(1))
    v9 = SPADE_CASES[8].value(F(15, 2), F(1))
    assert v9 - v1 == F(1, 30)
    # at -3 the case-4 and case-8 rows genuinely differ
    v4 = SPADE_CASES[3].value(F(-3), F(1))
    v8 = SPADE_CASES[7].value(F(-3), F(1))
    assert v8 - v4 == F(4, 3) - F(5, 5)  # 4/3 vs 1 = 1/3
    assert v8 == F(4, 3) and v4 == F(1)


def test_spade_irrational_slope_dispatch():
    s = QuadNum(0, 1, 2)  # sqrt 2 in [1/2, 3)
    assert spade_case_for_slope(s).case_id == 2


# -- clifford -----------------------------------------------------------------------


def test_clifford_examples():
    assert clifford_bound((1, 0)) == 1
    assert clifford_bound((1, 16)) == F(9, 4)
    assert clifford_bound((1, 64)) == 18


def test_clifford_forced_values():
    for r in range(1, 8):
        assert clifford_bound((r, 0)) == r
        assert clifford_bound((r, 64 * r)) == 18 * r


def test_clifford_break_switch():
    # the sqrt(69) breakpoint is a root of 5 mu^2 - 1152 mu + 52224
    val = 5 * CLIFFORD_BREAK * CLIFFORD_BREAK - 1152 * CLIFFORD_BREAK + 52224
    assert scalar_sign(val) == 0
    below = F(62)  # < (576-32 sqrt69)/5 ~ 62.036
    above = F(6204, 100)
    assert qn_compare(below, CLIFFORD_BREAK) < 0 < qn_compare(above, CLIFFORD_BREAK)
    r, d = below.denominator, below.numerator
    assert clifford_bound((r, d)) == 5 * d * d / F(1024 * r) + 5 * r - F(d, 8)
    r, d = above.denominator, above.numerator
    assert clifford_bound((r, d)) == d - 46 * r


def test_clifford_uncovered_band():
    with pytest.raises(SlopeOutsideTheorem):
        clifford_bound((1, 32))
    with pytest.raises(SlopeOutsideTheorem):
        clifford_bound((1, 65))
    with pytest.raises(OutOfDomain):
        clifford_bound((0, 1))


# -- bg families ----------------------------------------------------------------------


def test_bg_surface_examples():
    assert bg_bound_surface(F(1, 10)) == F(-9, 100)
    assert bg_bound_surface(F(1, 2)) == F(1, 32)
    # continuity at (4-sqrt13)/3, root of 3x^2-8x+1
    bp = (4 - QuadNum(0, 1, 13)) / 3
    p1 = bg_quadratic_family.pieces[0].poly.evaluate(bp)
    p2 = bg_quadratic_family.pieces[1].poly.evaluate(bp)
    assert compare_scalars(p1, p2) == 0


def test_bg_surface_domain():
    with pytest.raises(OutOfDomain):
        bg_bound_surface(F(0))
    with pytest.raises(OutOfDomain):
        bg_bound_surface(F(1))


def test_bg_threefold_linear_examples():
    assert bg_bound_threefold(F(1, 5), "linear") == F(-1, 10)
    assert bg_bound_threefold(F(10, 11), "linear") == F(79, 242)
    assert bg_bound_threefold(F(-10, 11), "linear") == F(79, 242)  # |x|
    with pytest.raises(OutOfDomain):
        bg_bound_threefold(F(3, 2), "linear")


def test_bg_threefold_quadratic():
    assert bg_bound_threefold(0, "quadratic") == 0
    assert bg_bound_threefold(F(3, 2), "quadratic") == bg_bound_threefold(F(1, 2), "quadratic")
    assert bg_bound_threefold(F(1, 2), "quadratic") == F(1, 32)


def test_bg_threefold_refined():
    # on [1/5, 1/4] the refined value is the parabola (the stronger of the two)
    x = F(9, 40)
    line = F(9, 32) * x - F(5, 32)
    parabola = F(5, 8) * x * x - F(1, 8)
    assert bg_bound_threefold(x, "refined") == min(line, parabola) == parabola
    with pytest.raises(OutOfDomain):
        bg_bound_threefold(F(6, 10), "refined")


def test_bg_strictly_below_classical():
    for k in range(1, 256):
        x = F(k, 256)
        assert bg_bound_surface(x) < x * x / 2
        assert bg_bound_threefold(x, "quadratic") < x * x / 2


# -- piecewise engine -----------------------------------------------------------------


def test_linear_continuity_values():
    rep = piecewise_check(bg_linear_family, "continuity")
    assert rep.ok
    assert bg_linear_family.evaluate(F(1, 5)) == F(-1, 10)
    assert bg_linear_family.evaluate(F(1, 2)) == F(1, 32)
    assert bg_linear_family.evaluate(F(4, 5)) == F(1, 5)
    assert bg_linear_family.evaluate(F(10, 11)) == F(79, 242)


def test_quadratic_continuity():
    rep = piecewise_check(bg_quadratic_family, "continuity")
    assert rep.ok


def test_dominance_equality_set():
    rep = piecewise_check(bg_linear_family, "dominance", bg_quadratic_family)
    assert rep.ok
    points, has_interval, witness = rep.details
    assert not has_interval and witness is None
    expected = [F(0), F(1, 5), F(1, 2), F(4, 5), F(10, 11), F(1)]
    assert len(points) == 6
    for got, want in zip(points, expected):
        assert compare_scalars(got, want) == 0


def test_refined_dominance():
    secant, parabola, tail = bg_refined_family
    rep = piecewise_check(secant, "dominance", bg_quadratic_family)
    assert rep.ok
    pts, _, _ = rep.details
    assert [str(p) for p in pts] == ["1/5", "1/4"]
    assert piecewise_check(parabola, "dominance", bg_quadratic_family).ok
    assert piecewise_check(tail, "dominance", bg_quadratic_family).ok


def test_convexity_check():
    rep = piecewise_check(bg_quadratic_family, "convexity_on")
    # every piece is convex, but the bound itself has concave kinks at the
    # first and third breakpoints (slope drops); the report records them
    per_piece, kinks = rep.details
    assert all(per_piece)
    assert len(kinks) == 3


def test_piece_table_export():
    table = bg_linear_family.to_table()
    assert len(table) == 5
    assert table[0]["poly"] == ["0", "-1/2"]


def test_out_of_domain_evaluate():
    with pytest.raises(OutOfDomain):
        bg_linear_family.evaluate(F(2))
