"""Piecewise bounds: the nine-case global-section bound on the K3 (spade),
the Clifford bound for the genus-65 curve, and the surface/threefold
Bogomolov-Gieseker families, plus a small exact piecewise-function engine
(continuity, convexity, dominance with exact equality sets).

Coordinates for spade: points (x, y) = (ch2, H.ch1/H^2) on the K3 with
H^2 = 8; the case selector is the slope x/y and every formula is
homogeneous of degree 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .chern import CurveClass
from .exactnum import (
    Poly1,
    QuadNum,
    compare_scalars,
    format_scalar,
    scalar_min,
    scalar_sign,
    sqrt_exact,
)

__all__ = [
    "BoundsError",
    "SlopeOutOfTable",
    "SlopeOutsideTheorem",
    "OutOfDomain",
    "SpadeInput",
    "SPADE_CASES",
    "spade_case_for_slope",
    "spade",
    "spade_fallback",
    "CLIFFORD_BREAK",
    "clifford_bound",
    "bg_bound_surface",
    "bg_bound_threefold",
    "bg_quadratic_family",
    "bg_linear_family",
    "bg_refined_family",
    "classical_bogomolov",
    "Interval",
    "Piece",
    "PiecewiseBound",
    "piecewise_check",
    "CheckReport",
]


class BoundsError(Exception):
    pass


class SlopeOutOfTable(BoundsError):
    """x/y falls in none of the nine spade ranges."""


class SlopeOutsideTheorem(BoundsError):
    """mu outside [0,16] u [48,64]; the Clifford theorem does not cover it."""


class OutOfDomain(BoundsError):
    """Argument outside a bound's stated domain."""


# ---------------------------------------------------------------------------
# spade
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SpadeInput:
    """(ch2, H.ch1/H^2) on the K3; y > 0 for chain use."""

    x: object
    y: object

    def __post_init__(self):
        for name in ("x", "y"):
            v = getattr(self, name)
            if not isinstance(v, QuadNum):
                object.__setattr__(self, name, Fraction(v))


@dataclass(frozen=True)
class SpadeCase:
    """One row of the slope table.

    value(x, y) = lin_x*x + lin_y*y + srt*sqrt(q_xx x^2 + q_xy xy + q_yy y^2)
                + num(x,y)/den(x,y)   (num quadratic form, den linear form)
    with at most one of the sqrt / ratio parts present.
    """

    case_id: int
    ranges: tuple | None  # ((lo, lo_closed, hi, hi_closed), ...); None for band rows
    lin: tuple  # (coeff of x, coeff of y)
    srt: Fraction | None = None
    q: tuple | None = None  # (xx, xy, yy)
    num: tuple | None = None  # quadratic form (xx, xy, yy)
    den: tuple | None = None  # linear form (x, y)

    def value(self, x, y):
        out = self.lin[0] * x + self.lin[1] * y
        if self.srt is not None:
            xx, xy, yy = self.q
            rad = xx * x * x + xy * x * y + yy * y * y
            if isinstance(rad, QuadNum):
                if not rad.is_rational:
                    raise SlopeOutOfTable("nested radical: use the closed-form optimizer")
                rad = rad.as_fraction()
            if rad < 0:
                raise SlopeOutOfTable("negative radicand outside the case range")
            out = out + self.srt * sqrt_exact(rad)
        if self.num is not None:
            xx, xy, yy = self.num
            dx, dy = self.den
            denom = dx * x + dy * y
            if scalar_sign(denom) == 0:
                raise SlopeOutOfTable("ratio denominator vanishes")
            out = out + (xx * x * x + xy * x * y + yy * y * y) / denom
        return out


def _rng(lo, lo_c, hi, hi_c):
    return (Fraction(lo), lo_c, Fraction(hi), hi_c)


SPADE_CASES: tuple[SpadeCase, ...] = (
    SpadeCase(
        1,
        (_rng(Fraction(11, 2), True, Fraction(15, 2), False), _rng(8, False, Fraction(97, 10), True)),
        (Fraction(7, 6), Fraction(2, 3)),
        srt=Fraction(-1, 6),
        q=(Fraction(1), Fraction(8), Fraction(-44)),
    ),
    SpadeCase(
        2,
        (_rng(Fraction(1, 2), True, 3, False), _rng(4, False, Fraction(11, 2), True)),
        (Fraction(1), Fraction(0)),
        num=(Fraction(0), Fraction(0), Fraction(5)),
        den=(Fraction(1), Fraction(2)),
    ),
    SpadeCase(
        3,
        (_rng(Fraction(-1, 4), True, Fraction(1, 4), True),),
        (Fraction(1, 2), Fraction(0)),
        srt=Fraction(1, 2),
        q=(Fraction(1), Fraction(0), Fraction(20)),
    ),
    SpadeCase(
        4,
        (_rng(Fraction(-11, 2), True, -4, False), _rng(-3, False, Fraction(-1, 2), True)),
        (Fraction(0), Fraction(0)),
        num=(Fraction(0), Fraction(0), Fraction(5)),
        den=(Fraction(-1), Fraction(2)),
    ),
    SpadeCase(
        5,
        (_rng(Fraction(-97, 10), True, -8, False), _rng(Fraction(-15, 2), False, Fraction(-11, 2), True)),
        (Fraction(-1, 6), Fraction(2, 3)),
        srt=Fraction(-1, 6),
        q=(Fraction(1), Fraction(-8), Fraction(-44)),
    ),
    SpadeCase(
        6,
        (_rng(Fraction(-193, 14), True, -12, False), _rng(Fraction(-35, 3), False, Fraction(-97, 10), True)),
        (Fraction(-1, 16), Fraction(3, 8)),
        srt=Fraction(-1, 16),
        q=(Fraction(1), Fraction(-12), Fraction(-124)),
    ),
    SpadeCase(
        7,
        (_rng(Fraction(-107, 6), True, -16, False), _rng(Fraction(-63, 4), False, Fraction(-193, 14), True)),
        (Fraction(-1, 30), Fraction(4, 15)),
        srt=Fraction(-1, 30),
        q=(Fraction(1), Fraction(-16), Fraction(-236)),
    ),
    SpadeCase(
        8,
        None,
        (Fraction(0), Fraction(0)),
        num=(Fraction(0), Fraction(0), Fraction(-4)),
        den=(Fraction(1), Fraction(0)),
    ),
    SpadeCase(
        9,
        None,
        (Fraction(1), Fraction(0)),
        num=(Fraction(0), Fraction(0), Fraction(4)),
        den=(Fraction(1), Fraction(0)),
    ),
)

_FALLBACK_CASE = SpadeCase(
    0,
    (),
    (Fraction(1, 2), Fraction(0)),
    srt=Fraction(1, 2),
    q=(Fraction(1), Fraction(0), Fraction(20)),
)


def _nearest_band(s) -> int:
    """Integer n with 4n closest to the slope (0 when s is near zero)."""
    if isinstance(s, QuadNum):
        q = s
        n = round(float(s) / 4)
        # correct the float guess exactly: want |s - 4n| minimal
        while compare_scalars(q, 4 * n + 2) > 0:
            n += 1
        while compare_scalars(q, 4 * n - 2) < 0:
            n -= 1
        return n
    s = Fraction(s)
    return int((s / 4 + Fraction(1, 2)).__floor__())


def _in_range(s, lo, lo_c, hi, hi_c) -> bool:
    cl = compare_scalars(s, lo)
    ch = compare_scalars(s, hi)
    return (cl > 0 or (lo_c and cl == 0)) and (ch < 0 or (hi_c and ch == 0))


def spade_case_for_slope(s) -> SpadeCase:
    """Slope-table dispatch; band rows (cases 8, 9) own their endpoints."""
    if isinstance(s, QuadNum) and s.is_rational:
        s = s.as_fraction()
    n = _nearest_band(s)
    if n != 0:
        n_abs = abs(n)
        if n < 0 and _in_range(s, -4 * n_abs, True, Fraction(1 - 4 * n_abs * n_abs, n_abs), True):
            return SPADE_CASES[7]  # case 8
        if n > 0 and _in_range(s, Fraction(4 * n_abs * n_abs - 1, n_abs), True, 4 * n_abs, True):
            return SPADE_CASES[8]  # case 9
    for row in SPADE_CASES[:7]:
        for lo, lo_c, hi, hi_c in row.ranges:
            if _in_range(s, lo, lo_c, hi, hi_c):
                return row
    raise SlopeOutOfTable(f"slope {format_scalar(s)} not covered by the table")


def spade(p: SpadeInput | tuple, fallback: bool = False):
    """Global-section excess bound for a Brill-Noether semistable class.

    Exact value of the slope-table row containing x/y; homogeneous of
    degree 1.  Raises SlopeOutOfTable off the table unless ``fallback``
    requests the universal formula x/2 + sqrt(x^2 + 20 y^2)/2.
    """
    if isinstance(p, tuple):
        p = SpadeInput(*p)
    x, y = p.x, p.y
    if scalar_sign(y) <= 0:
        raise OutOfDomain("spade needs y > 0")
    s = x / y
    try:
        row = spade_case_for_slope(s)
    except SlopeOutOfTable:
        if fallback:
            return _FALLBACK_CASE.value(x, y)
        raise
    return row.value(x, y)


def spade_fallback(p: SpadeInput | tuple):
    """The universal bound x/2 + sqrt(x^2 + 20y^2)/2 (valid on every slope)."""
    if isinstance(p, tuple):
        p = SpadeInput(*p)
    return _FALLBACK_CASE.value(p.x, p.y)


# ---------------------------------------------------------------------------
# Clifford bound on the curve
# ---------------------------------------------------------------------------

# switch point between the two [48, 64] pieces: root of 5 mu^2 - 1152 mu + 52224
CLIFFORD_BREAK = QuadNum(Fraction(576, 5), Fraction(-32, 5), 69)


def clifford_bound(e: CurveClass | tuple):
    """Upper bound for h^0 of a semistable bundle of rank r, degree d on C.

    Four cases over mu = d/r: 64r^2/(64r - d) on [0, (256-32*sqrt(61))/3),
    r + 5d^2/1024r up to 16, 5d^2/1024r + 5r - d/8 from 48 to the sqrt(69)
    switch, d - 46r beyond; SlopeOutsideTheorem on (16, 48) and off [0, 64].
    """
    if isinstance(e, tuple):
        e = CurveClass(*e)
    if e.r < 1:
        raise OutOfDomain("clifford_bound needs r >= 1")
    mu = e.slope
    if not (0 <= mu <= 16 or 48 <= mu <= 64):
        raise SlopeOutsideTheorem(f"mu = {mu} outside [0,16] u [48,64]")
    r, d = e.r, e.d
    from .walls import bn_threshold

    if mu <= 16:
        if compare_scalars(mu, bn_threshold()) < 0:
            return 64 * r * r / (64 * r - d)
        return r + 5 * d * d / (1024 * r)
    if compare_scalars(mu, CLIFFORD_BREAK) <= 0:
        return 5 * d * d / (1024 * r) + 5 * r - d / 8
    return d - 46 * r


# ---------------------------------------------------------------------------
# piecewise engine
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Interval:
    """[lo, hi] with open/closed flags; endpoints exact (QuadNum allowed)."""

    lo: object
    hi: object
    lo_closed: bool = True
    hi_closed: bool = True

    def contains(self, x) -> bool:
        cl = compare_scalars(x, self.lo)
        ch = compare_scalars(x, self.hi)
        return (cl > 0 or (self.lo_closed and cl == 0)) and (
            ch < 0 or (self.hi_closed and ch == 0)
        )


@dataclass(frozen=True)
class Piece:
    """One sub-interval with a quadratic polynomial or a rational function."""

    interval: Interval
    poly: Poly1 | None = None
    num: Poly1 | None = None  # rational-function piece num/den
    den: Poly1 | None = None

    def value(self, x):
        if self.poly is not None:
            return self.poly.evaluate(x)
        d = self.den.evaluate(x)
        if scalar_sign(d) == 0:
            raise ZeroDivisionError("pole inside piece")
        return self.num.evaluate(x) / d

    @property
    def is_poly(self) -> bool:
        return self.poly is not None


class PiecewiseBound:
    """Ordered pieces with strictly increasing, non-overlapping intervals.

    Gaps between consecutive intervals are allowed (the Clifford bound has
    the uncovered band (16, 48)); continuity is only meaningful at shared
    breakpoints.
    """

    __slots__ = ("name", "pieces")

    def __init__(self, name: str, pieces: Sequence[Piece]):
        object.__setattr__(self, "name", name)
        object.__setattr__(self, "pieces", tuple(pieces))
        for a, b in zip(self.pieces, self.pieces[1:]):
            if compare_scalars(a.interval.hi, b.interval.lo) > 0:
                raise ValueError(f"{name}: overlapping pieces")

    def __setattr__(self, *a):
        raise AttributeError("PiecewiseBound is immutable")

    def evaluate(self, x):
        for piece in self.pieces:
            if piece.interval.contains(x):
                return piece.value(x)
        raise OutOfDomain(f"{self.name}: {format_scalar(x)} outside the domain")

    def domain(self) -> tuple:
        return self.pieces[0].interval.lo, self.pieces[-1].interval.hi

    def shared_breakpoints(self):
        """(x, left piece, right piece) where consecutive intervals touch."""
        out = []
        for a, b in zip(self.pieces, self.pieces[1:]):
            if compare_scalars(a.interval.hi, b.interval.lo) == 0:
                out.append((a.interval.hi, a, b))
        return out

    def to_table(self) -> list:
        """Exact JSON-ready piece table for audit."""
        rows = []
        for p in self.pieces:
            row = {
                "lo": format_scalar(p.interval.lo),
                "hi": format_scalar(p.interval.hi),
                "lo_closed": p.interval.lo_closed,
                "hi_closed": p.interval.hi_closed,
            }
            if p.is_poly:
                row["poly"] = [format_scalar(c) for c in p.poly.coeffs]
            else:
                row["num"] = [format_scalar(c) for c in p.num.coeffs]
                row["den"] = [format_scalar(c) for c in p.den.coeffs]
            rows.append(row)
        return rows


def _pw(name, rows) -> PiecewiseBound:
    pieces = []
    for lo, lo_c, hi, hi_c, coeffs in rows:
        pieces.append(Piece(Interval(lo, hi, lo_c, hi_c), poly=Poly1(coeffs)))
    return PiecewiseBound(name, pieces)


_SQRT13 = QuadNum(0, 1, 13)
_BP_A = (4 - _SQRT13) / 3  # (4 - sqrt(13))/3
_BP_B = (_SQRT13 - 1) / 3  # (sqrt(13) - 1)/3

# ch2/(H^2 ch0) bound on the surface S' in x = H.ch1/(H^2 ch0), 0 < x < 1
bg_quadratic_family = _pw(
    "bg_quadratic",
    [
        (Fraction(0), True, _BP_A, True, [0, -1, 1]),  # x^2 - x
        (_BP_A, False, Fraction(1, 2), True, [Fraction(-1, 8), 0, Fraction(5, 8)]),
        (Fraction(1, 2), False, _BP_B, False, [0, Fraction(-1, 4), Fraction(5, 8)]),
        (_BP_B, True, Fraction(1), True, [Fraction(-1, 2), 0, 1]),  # x^2 - 1/2
    ],
)

# H.ch2/(H^3 ch0) linear bound on X in |x| = |H^2 ch1 / H^3 ch0|
bg_linear_family = _pw(
    "bg_linear",
    [
        (Fraction(0), True, Fraction(1, 5), True, [0, Fraction(-1, 2)]),
        (Fraction(1, 5), True, Fraction(1, 2), True, [Fraction(-3, 16), Fraction(7, 16)]),
        (Fraction(1, 2), True, Fraction(4, 5), True, [Fraction(-1, 4), Fraction(9, 16)]),
        (Fraction(4, 5), True, Fraction(10, 11), True, [Fraction(-8, 11), Fraction(51, 44)]),
        (Fraction(10, 11), True, Fraction(1), True, [Fraction(-31, 22), Fraction(21, 11)]),
    ],
)

# the three refined pieces of the linear theorem's closing clause
bg_refined_family = (
    _pw("bg_refined_secant", [(Fraction(1, 5), True, Fraction(1, 4), True, [Fraction(-5, 32), Fraction(9, 32)])]),
    _pw("bg_refined_parabola", [(Fraction(1, 5), True, Fraction(1, 2), True, [Fraction(-1, 8), 0, Fraction(5, 8)])]),
    _pw("bg_refined_tail", [(_BP_B, True, Fraction(1), True, [Fraction(-1, 2), 0, 1])]),
)


def classical_bogomolov(x):
    """The classical bound x^2/2 in the same normalization."""
    if not isinstance(x, QuadNum):
        x = Fraction(x)
    return x * x / 2


def bg_bound_surface(x):
    """Surface Bogomolov-Gieseker bound; domain 0 < x < 1 strictly."""
    if isinstance(x, QuadNum) and x.is_rational:
        x = x.as_fraction()
    if compare_scalars(x, 0) <= 0 or compare_scalars(x, 1) >= 0:
        raise OutOfDomain("bg_bound_surface needs 0 < x < 1")
    return bg_quadratic_family.evaluate(x)


def bg_bound_threefold(x, family: str = "quadratic"):
    """Threefold bound for H.ch2/(H^3 ch0).

    quadratic: the surface family in threefold ratios, after the integer
    twist x -> x - floor(x) of the final clause; linear: the five-piece
    linear theorem on |x| <= 1; refined: minimum of the applicable refined
    pieces.
    """
    x = Fraction(x)
    if family == "quadratic":
        t = x - x.__floor__()
        if t == 0:
            return Fraction(0)  # piece-1 value at the reduced slope 0
        return bg_quadratic_family.evaluate(t)
    if family == "linear":
        if abs(x) > 1:
            raise OutOfDomain("linear family needs |x| <= 1")
        return bg_linear_family.evaluate(abs(x))
    if family == "refined":
        vals = []
        for fam in bg_refined_family:
            try:
                vals.append(fam.evaluate(abs(x)))
            except OutOfDomain:
                continue
        if not vals:
            raise OutOfDomain(f"no refined piece covers |x| = {abs(x)}")
        return scalar_min(*vals)
    raise ValueError(f"unknown family {family!r}")


# ---------------------------------------------------------------------------
# checks: continuity, convexity, dominance
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CheckReport:
    kind: str
    ok: bool
    details: tuple


def piecewise_check(f: PiecewiseBound, check: str, other: PiecewiseBound | None = None) -> CheckReport:
    """continuity | convexity_on | dominance (f >= other) with exact data."""
    if check == "continuity":
        bad = []
        for x, left, right in f.shared_breakpoints():
            lv = left.value(x)
            rv = right.value(x)
            if compare_scalars(lv, rv) != 0:
                bad.append((x, lv, rv))
        return CheckReport("continuity", not bad, tuple(bad))
    if check == "convexity_on":
        details = []
        ok = True
        for p in f.pieces:
            if p.is_poly:
                lead = p.poly.coeffs[2] if p.poly.degree() >= 2 else Fraction(0)
                convex = lead >= 0
            else:
                # quadratic-over-linear: f = Q + R/D, f'' = 2R D'^2 / D^3
                q, rem = _poly_divmod(p.num, p.den)
                if rem.degree() > 0:
                    raise NotImplementedError("ratfunc convexity needs constant remainder")
                r_const = rem.coeffs[0] if rem.coeffs else Fraction(0)
                d_lo = p.den.evaluate(p.interval.lo)
                d_hi = p.den.evaluate(p.interval.hi)
                if scalar_sign(d_lo) * scalar_sign(d_hi) <= 0:
                    raise NotImplementedError("pole inside interval")
                convex = scalar_sign(r_const) * scalar_sign(d_lo) >= 0
            details.append(convex)
            ok = ok and convex
        kinks = []
        for x, left, right in f.shared_breakpoints():
            dl = _piece_derivative(left, x)
            dr = _piece_derivative(right, x)
            kinks.append((x, compare_scalars(dr, dl)))
        ok = ok and all(k >= 0 for _, k in kinks)
        return CheckReport("convexity_on", ok, (tuple(details), tuple(kinks)))
    if check == "dominance":
        if other is None:
            raise ValueError("dominance needs a second bound")
        return _dominance(f, other)
    raise ValueError(f"unknown check {check!r}")


def _poly_divmod(num: Poly1, den: Poly1) -> tuple:
    q = Poly1([])
    r = num
    while not r.is_zero() and r.degree() >= den.degree():
        shift = r.degree() - den.degree()
        coeff = r.coeffs[-1] / den.coeffs[-1]
        mono = Poly1([0] * shift + [coeff])
        q = q + mono
        r = r - mono * den
    return q, r


def _piece_derivative(p: Piece, x):
    if p.is_poly:
        return p.poly.derivative().evaluate(x)
    n, d = p.num, p.den
    dv = d.evaluate(x)
    return (n.derivative().evaluate(x) * dv - n.evaluate(x) * d.derivative().evaluate(x)) / (dv * dv)


def _overlap(i1: Interval, i2: Interval) -> Interval | None:
    lo = i1.lo if compare_scalars(i1.lo, i2.lo) >= 0 else i2.lo
    hi = i1.hi if compare_scalars(i1.hi, i2.hi) <= 0 else i2.hi
    if compare_scalars(lo, hi) > 0:
        return None
    lo_closed = i1.contains(lo) and i2.contains(lo)
    hi_closed = i1.contains(hi) and i2.contains(hi)
    if compare_scalars(lo, hi) == 0 and not (lo_closed and hi_closed):
        return None
    return Interval(lo, hi, lo_closed, hi_closed)


def _dominance(f: PiecewiseBound, g: PiecewiseBound) -> CheckReport:
    """f >= g on the common domain; details = sorted exact equality set."""
    equal_points = []
    ok = True
    witness = None
    for pf in f.pieces:
        for pg in g.pieces:
            if not (pf.is_poly and pg.is_poly):
                raise NotImplementedError("dominance supports polynomial pieces")
            ov = _overlap(pf.interval, pg.interval)
            if ov is None:
                continue
            diff = pf.poly - pg.poly
            if diff.is_zero():
                # identical formulas: equality on the whole overlap; record endpoints
                for x in (ov.lo, ov.hi):
                    if ov.contains(x):
                        equal_points.append(x)
                equal_points.append("interval")
                continue
            # sign of diff on the overlap hull: endpoints, roots, critical points.
            # A strictly negative endpoint value fails dominance even at an
            # open end (continuity carries the sign inside).
            roots = [r for r in diff.real_roots() if ov.contains(r)]
            for x in (ov.lo, ov.hi):
                v = diff.evaluate(x)
                if scalar_sign(v) < 0:
                    ok = False
                    witness = (x, v)
            dd = diff.derivative()
            if dd.degree() >= 1:
                for r in dd.real_roots():
                    if ov.contains(r):
                        v = diff.evaluate(r)
                        if scalar_sign(v) < 0:
                            ok = False
                            witness = (r, v)
            for r in roots:
                equal_points.append(r)
    # dedupe exact equality points
    uniq = []
    has_interval = any(isinstance(e, str) for e in equal_points)
    for e in equal_points:
        if isinstance(e, str):
            continue
        if not any(compare_scalars(e, u) == 0 for u in uniq):
            uniq.append(e)
    uniq.sort(key=lambda v: float(v))
    details = (tuple(uniq), has_interval, witness)
    return CheckReport("dominance", ok, details)
