"""Convex-chain maximization of spade sums over first-wall triangles.

A chain starts at the origin, its increments have y > 0 and weakly
decreasing slope x/y, and the sum of the increments' spade values bounds
global sections of Harder-Narasimhan configurations.  Three tools:

* ``maximize_reduced`` -- sharp maximum over 1- and 2-segment chains in a
  triangle O-P-Q.  Every 2-chain O->V->Q has value u*spade(D) +
  spade(Q - u*D) for V = u*D (or Q - u*D; the sum is order-free), so the
  optimizer walks the directions D in {P, Q-P} plus the exceptional-slope
  directions, partitions each u-range by the slope-table boundaries (slope
  is monotone along affine paths), and solves each piece's first-order
  condition in closed form; candidate values are exact (the radical in the
  sqrt rows collapses to a rational expression at critical points).
* ``maximize_bruteforce`` -- independent oracle: exact DP over convex
  lattice chains on the (grid_n x grid_n) refinement of the triangle.
* ``clifford_chain_bound`` -- the wall-triangle derivation of the Clifford
  bound (universal bound on the O->P leg, fixed case rows for the others,
  Bogomolov value in the Brill-Noether band, and the d - 46r branch on
  [48, 64]); the closed-form Clifford cases equal this quantity.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .bounds import (
    _FALLBACK_CASE,
    SPADE_CASES,
    OutOfDomain,
    SlopeOutOfTable,
    SlopeOutsideTheorem,
    SpadeCase,
    spade,
    spade_case_for_slope,
    spade_fallback,
)
from .chern import CurveClass
from .exactnum import (
    Poly1,
    QuadNum,
    RadicalSum,
    compare_scalars,
    format_scalar,
    scalar_sign,
)
from .walls import bn_threshold

__all__ = [
    "ConvexOptError",
    "DegenerateTriangle",
    "GridTooLarge",
    "PlanePoint",
    "ConvexChain",
    "spade_sum",
    "WallTriangle",
    "triangle_from_first_wall",
    "ReducedResult",
    "maximize_reduced",
    "clifford_chain_bound",
    "CliffordChainResult",
    "maximize_bruteforce",
    "BruteForceResult",
]


class ConvexOptError(Exception):
    pass


class DegenerateTriangle(ConvexOptError):
    """Edge slopes are not strictly ordered slope(OP) > slope(OQ) > slope(PQ)."""


class GridTooLarge(ConvexOptError):
    """Brute-force grid refinement above the complexity guard."""


@dataclass(frozen=True)
class PlanePoint:
    """Point (ch2, H.ch1/H^2) in the K3 character plane; exact coordinates."""

    x: object
    y: object

    def __post_init__(self):
        for name in ("x", "y"):
            v = getattr(self, name)
            if not isinstance(v, QuadNum):
                object.__setattr__(self, name, Fraction(v))

    def __add__(self, other: "PlanePoint") -> "PlanePoint":
        return PlanePoint(self.x + other.x, self.y + other.y)

    def __sub__(self, other: "PlanePoint") -> "PlanePoint":
        return PlanePoint(self.x - other.x, self.y - other.y)

    def scale(self, t) -> "PlanePoint":
        return PlanePoint(self.x * t, self.y * t)

    def slope(self):
        if scalar_sign(self.y) == 0:
            raise ZeroDivisionError("slope of a horizontal increment")
        return self.x / self.y

    def is_zero(self) -> bool:
        return scalar_sign(self.x) == 0 and scalar_sign(self.y) == 0

    def to_json(self) -> dict:
        return {"x": format_scalar(self.x), "y": format_scalar(self.y)}


ORIGIN = PlanePoint(0, 0)


class ConvexChain:
    """Vertex chain from the origin; increments have y > 0 and weakly
    decreasing slopes (collinear consecutive increments are permitted and
    never change spade sums)."""

    __slots__ = ("vertices",)

    def __init__(self, vertices):
        vs = tuple(vertices)
        if not vs or not vs[0].is_zero():
            raise ValueError("chain must start at the origin")
        for a, b in zip(vs, vs[1:]):
            inc = b - a
            if scalar_sign(inc.y) <= 0:
                raise ValueError("chain increments need y > 0")
        incs = [b - a for a, b in zip(vs, vs[1:])]
        for u, w in zip(incs, incs[1:]):
            if compare_scalars(u.slope(), w.slope()) < 0:
                raise ValueError("increment slopes must be non-increasing")
        object.__setattr__(self, "vertices", vs)

    def __setattr__(self, *a):
        raise AttributeError("ConvexChain is immutable")

    def increments(self):
        return [b - a for a, b in zip(self.vertices, self.vertices[1:])]

    def is_strictly_convex(self) -> bool:
        incs = self.increments()
        return all(
            compare_scalars(u.slope(), w.slope()) > 0 for u, w in zip(incs, incs[1:])
        )

    def merged(self) -> "ConvexChain":
        """Collinear consecutive increments merged into single segments."""
        incs = self.increments()
        if not incs:
            return self
        out = [incs[0]]
        for inc in incs[1:]:
            if compare_scalars(out[-1].slope(), inc.slope()) == 0:
                out[-1] = out[-1] + inc
            else:
                out.append(inc)
        verts = [ORIGIN]
        for inc in out:
            verts.append(verts[-1] + inc)
        return ConvexChain(verts)

    def segments(self) -> int:
        return len(self.vertices) - 1

    def to_json(self) -> list:
        return [v.to_json() for v in self.vertices]

    def __repr__(self):
        pts = ", ".join(f"({format_scalar(v.x)}, {format_scalar(v.y)})" for v in self.vertices)
        return f"ConvexChain[{pts}]"


def spade_sum(chain: ConvexChain, fallback: bool = False) -> RadicalSum:
    """Exact sum of spade over the chain's increments (RadicalSum)."""
    total = RadicalSum.of(0)
    for inc in chain.increments():
        total = total + RadicalSum.of(spade((inc.x, inc.y), fallback=fallback))
    return total


# ---------------------------------------------------------------------------
# first-wall triangles
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class WallTriangle:
    """Vertices of the potential-first-wall triangle for a curve class,
    with the [48,64]-case auxiliary points."""

    origin: PlanePoint
    p: PlanePoint | None
    q: PlanePoint
    mu_case: str  # "bn" | "low" | "high"
    degenerate: bool = False
    p_prime: PlanePoint | None = None
    p_triple: PlanePoint | None = None


def triangle_from_first_wall(e: CurveClass | tuple) -> WallTriangle:
    """Triangle O-P-Q from the extremal first wall at slope mu = d/r."""
    if isinstance(e, tuple):
        e = CurveClass(*e)
    r, d = e.r, e.d
    if r < 1:
        raise OutOfDomain("triangle needs r >= 1")
    mu = e.slope
    if not (0 <= mu <= 16 or 48 <= mu <= 64):
        raise SlopeOutsideTheorem(f"mu = {mu} outside [0,16] u [48,64]")
    q = PlanePoint(d - 64 * r, 4 * r)
    a = 5 * d * d / Fraction(1024) / r
    if mu <= 16:
        case = "bn" if compare_scalars(mu, bn_threshold()) < 0 else "low"
        p = PlanePoint(a - r, Fraction(d, 32))
        return WallTriangle(ORIGIN, p, q, case, degenerate=(d == 0))
    p = PlanePoint(a - d / Fraction(8) + 3 * r, Fraction(d, 32))
    p_prime = PlanePoint(d - 48 * r, 2 * r)
    p_triple = PlanePoint(d / Fraction(2) - 16 * r, d / Fraction(16) - 2 * r)
    return WallTriangle(ORIGIN, p, q, "high", p_prime=p_prime, p_triple=p_triple)


# ---------------------------------------------------------------------------
# sharp reduced maximization
# ---------------------------------------------------------------------------

# static slope-table boundary values (bands are generated on demand)
_STATIC_BOUNDARIES = [
    Fraction(v)
    for v in (
        Fraction(-107, 6),
        -16,
        Fraction(-63, 4),
        Fraction(-193, 14),
        -12,
        Fraction(-35, 3),
        Fraction(-97, 10),
        -8,
        Fraction(-15, 2),
        Fraction(-11, 2),
        -4,
        -3,
        Fraction(-1, 2),
        Fraction(-1, 4),
        Fraction(1, 4),
        Fraction(1, 2),
        3,
        4,
        Fraction(11, 2),
        Fraction(15, 2),
        8,
        Fraction(97, 10),
    )
]


def _band_boundaries(max_abs: Fraction) -> list:
    out = []
    n = 1
    while 4 * n - 2 <= max_abs:
        out += [Fraction(4 * n), Fraction(4 * n * n - 1, n), Fraction(-4 * n), Fraction(1 - 4 * n * n, n)]
        n += 1
    return out


def _boundary_slopes(lo: Fraction, hi: Fraction) -> list:
    vals = set(_STATIC_BOUNDARIES) | set(_band_boundaries(max(abs(lo), abs(hi)) + 4))
    return sorted(v for v in vals if lo < v < hi)


def _exceptional_slopes(lo: Fraction, hi: Fraction) -> list:
    """m and (4m^2-1)/m for nonzero integers m, inside (lo, hi)."""
    out = set()
    m = 1
    while m <= max(abs(lo), abs(hi)) + 1:
        for s in (Fraction(m), Fraction(-m), Fraction(4 * m * m - 1, m), Fraction(-(4 * m * m - 1), m)):
            if lo < s < hi:
                out.add(s)
        m += 1
    return sorted(out)


def _spade_dir(p: PlanePoint, fallback: bool):
    """spade of a direction, or None when off-table and no fallback."""
    try:
        return spade((p.x, p.y), fallback=fallback)
    except SlopeOutOfTable:
        return None


def _segment_hit(r0: PlanePoint, dr: PlanePoint, a: PlanePoint, b: PlanePoint):
    """Smallest u > 0 with r0 + u*dr on segment [a, b], or None."""
    # solve u*dr - s*(b-a) = a - r0
    d1, d2 = dr, b - a
    det = d1.x * (-d2.y) - (-d2.x) * d1.y
    rhs = a - r0
    if scalar_sign(det) == 0:
        return None
    u = (rhs.x * (-d2.y) - (-d2.x) * rhs.y) / det
    s = (d1.x * rhs.y - rhs.x * d1.y) / det
    if scalar_sign(u) <= 0:
        return None
    if compare_scalars(s, 0) < 0 or compare_scalars(s, 1) > 0:
        return None
    return u


def _ray_exit(r0: PlanePoint, dr: PlanePoint, tri: tuple) -> Fraction | None:
    """Exit parameter of r0 + u*dr from the triangle (smallest positive hit)."""
    o, p, q = tri
    hits = []
    for a, b in ((o, p), (p, q), (q, o)):
        u = _segment_hit(r0, dr, a, b)
        if u is not None:
            hits.append(u)
    if not hits:
        return None
    best = hits[0]
    for u in hits[1:]:
        if compare_scalars(u, best) < 0:
            best = u
    return best


@dataclass(frozen=True)
class _PathTemplate:
    """Objective F(t) = lin_const + lin_coef*t + spade(p0 + t*dvec)."""

    p0: PlanePoint
    dvec: PlanePoint
    lin_const: object
    lin_coef: object


def _path_point(tpl: _PathTemplate, t) -> PlanePoint:
    return PlanePoint(tpl.p0.x + t * tpl.dvec.x, tpl.p0.y + t * tpl.dvec.y)


def _slope_crossing(tpl: _PathTemplate, s0: Fraction):
    """t with slope(p0 + t*dvec) = s0, or None."""
    den = tpl.dvec.x - s0 * tpl.dvec.y
    num = s0 * tpl.p0.y - tpl.p0.x
    if scalar_sign(den) == 0:
        return None
    return num / den


def _case_value_at(tpl: _PathTemplate, row: SpadeCase, t) -> RadicalSum:
    w = _path_point(tpl, t)
    if isinstance(t, Fraction):
        head = RadicalSum.of(tpl.lin_coef).scale(t)
    else:
        head = RadicalSum.of(tpl.lin_coef * t)
    return RadicalSum.of(tpl.lin_const) + head + RadicalSum.of(row.value(w.x, w.y))


def _affine_forms(tpl: _PathTemplate, row: SpadeCase):
    """Coefficient data of spade_row along the path, as polynomials in t."""
    x0, y0 = tpl.p0.x, tpl.p0.y
    dx, dy = tpl.dvec.x, tpl.dvec.y
    # linear part L0 + L1 t
    L0 = row.lin[0] * x0 + row.lin[1] * y0
    L1 = row.lin[0] * dx + row.lin[1] * dy
    data = {"L": (L0, L1)}
    if row.q is not None:
        xx, xy, yy = row.q
        q0 = xx * x0 * x0 + xy * x0 * y0 + yy * y0 * y0
        q1 = 2 * xx * x0 * dx + xy * (x0 * dy + y0 * dx) + 2 * yy * y0 * dy
        q2 = xx * dx * dx + xy * dx * dy + yy * dy * dy
        data["q"] = (q0, q1, q2)
    if row.num is not None:
        xx, xy, yy = row.num
        n0 = xx * x0 * x0 + xy * x0 * y0 + yy * y0 * y0
        n1 = 2 * xx * x0 * dx + xy * (x0 * dy + y0 * dx) + 2 * yy * y0 * dy
        n2 = xx * dx * dx + xy * dx * dy + yy * dy * dy
        d0 = row.den[0] * x0 + row.den[1] * y0
        d1 = row.den[0] * dx + row.den[1] * dy
        data["n"] = (n0, n1, n2)
        data["d"] = (d0, d1)
    return data


def _sqrt_row_derivative(tpl, row, forms, t) -> RadicalSum | None:
    """Exact F'(t) at rational t for a sqrt row (None when the radicand
    vanishes there; the one-sided derivative is infinite)."""
    from .exactnum import sqrt_exact

    q0, q1, q2 = forms["q"]
    qv = q0 + q1 * t + q2 * t * t
    if qv < 0:
        return None
    if qv == 0:
        return None
    root = sqrt_exact(qv)
    c1 = tpl.lin_coef + forms["L"][1]
    term = (row.srt * (q1 + 2 * q2 * t)) / (2 * root)
    return RadicalSum.of(c1) + RadicalSum.of(term)


def _ratio_row_derivative(tpl, row, forms, t) -> RadicalSum:
    n0, n1, n2 = forms["n"]
    d0, d1 = forms["d"]
    dv = d0 + d1 * t
    c1 = tpl.lin_coef + forms["L"][1]
    term = ((n1 + 2 * n2 * t) * dv - (n0 + n1 * t + n2 * t * t) * d1) / (dv * dv)
    return RadicalSum.of(c1) + RadicalSum.of(term)


def _bracket_concave_max(tpl, row, forms, t_lo: Fraction, t_hi: Fraction, deriv):
    """Certified upper bound for a concave piece's interior supremum.

    Bisects the derivative's sign change and returns (t, value_bound) with
    value_bound >= sup F on the piece; exact RadicalSum arithmetic, no
    division.  Returns [] when the maximum sits at an endpoint.
    """
    da = deriv(t_lo)
    db = deriv(t_hi)
    if da is None:
        da_sign = -scalar_sign(row.srt)  # infinite one-sided slope of s*sqrt(q)
    else:
        da_sign = da.sign()
    if db is None:
        db_sign = scalar_sign(row.srt)
    else:
        db_sign = db.sign()
    if da_sign <= 0 or db_sign >= 0:
        return []  # concave and monotone toward an endpoint
    lo, hi = t_lo, t_hi
    d_lo = da
    for _ in range(80):
        mid = (lo + hi) / 2
        dm = deriv(mid)
        if dm is None or dm.sign() > 0:
            lo, d_lo = mid, dm
        else:
            hi = mid
        if d_lo is not None:
            slack = d_lo.scale(hi - lo)
            if slack < Fraction(1, 1 << 70):
                break
    if d_lo is None:
        d_lo = deriv((lo + hi) / 2) or RadicalSum.of(0)
    bound = _case_value_at(tpl, row, lo) + d_lo.scale(hi - lo)
    return [(lo, bound)]


def _critical_points(tpl: _PathTemplate, row: SpadeCase, t_lo, t_hi):
    """Interior maximizer candidates of F on [t_lo, t_hi]; values are
    RadicalSum and certified to dominate the interior supremum."""
    forms = _affine_forms(tpl, row)
    L0, L1 = forms["L"]
    c1 = tpl.lin_coef + L1
    c1_rational = not isinstance(c1, QuadNum) or c1.is_rational
    if isinstance(c1, QuadNum) and c1.is_rational:
        c1 = c1.as_fraction()
    out = []
    if row.srt is not None:
        q0, q1, q2 = forms["q"]
        s = row.srt
        disc_q = q1 * q1 - 4 * q2 * q0
        concave = scalar_sign(s) * scalar_sign(disc_q) >= 0
        if not concave:
            return []  # convex piece: endpoint maxima only
        if not c1_rational:
            deriv = lambda t: _sqrt_row_derivative(tpl, row, forms, t)
            return _bracket_concave_max(tpl, row, forms, t_lo, t_hi, deriv)
        if scalar_sign(c1) == 0:
            if scalar_sign(q2) != 0:
                t_star = -q1 / (2 * q2)
                if compare_scalars(t_lo, t_star) < 0 and compare_scalars(t_star, t_hi) < 0:
                    rad = q0 + q1 * t_star + q2 * t_star * t_star
                    if scalar_sign(rad) >= 0:
                        out.append((t_star, _case_value_at(tpl, row, t_star)))
            return out
        # 4 c1^2 q(t) = s^2 (q1 + 2 q2 t)^2
        A = 4 * c1 * c1 * q2 - 4 * s * s * q2 * q2
        B = 4 * c1 * c1 * q1 - 4 * s * s * q1 * q2
        C = 4 * c1 * c1 * q0 - s * s * q1 * q1
        for t_star in Poly1([C, B, A]).real_roots():
            if not (compare_scalars(t_lo, t_star) < 0 and compare_scalars(t_star, t_hi) < 0):
                continue
            qp = q1 + 2 * q2 * t_star
            # first-order condition: c1 = -s*q'(t)/(2 sqrt(q)) with sqrt(q) > 0
            if scalar_sign(c1) * scalar_sign(s * qp) >= 0:
                continue
            root_val = -(s * qp) / (2 * c1)  # equals sqrt(q(t*)), rational in t*
            if scalar_sign(root_val) < 0:
                continue
            value = tpl.lin_const + L0 + c1 * t_star + s * root_val
            out.append((t_star, RadicalSum.of(value)))
        return out
    if row.num is not None:
        n0, n1, n2 = forms["n"]
        d0, d1 = forms["d"]
        # split at a pole (cannot occur inside a dispatch range; safety)
        if d1 != 0:
            t_pole = -d0 / d1
            if compare_scalars(t_lo, t_pole) < 0 and compare_scalars(t_pole, t_hi) < 0:
                eps = (t_hi - t_lo) / 1024
                return _critical_points(tpl, row, t_lo, t_pole - eps) + _critical_points(
                    tpl, row, t_pole + eps, t_hi
                )
        d_sign = scalar_sign(d0 + d1 * ((t_lo + t_hi) / 2))
        # F'' = 2 R d1^2 / D^3 with R the division remainder
        if d1 == 0:
            concave = scalar_sign(n2) * scalar_sign(d0) <= 0
        else:
            R = n0 - d0 * (n1 * d1 - n2 * d0) / (d1 * d1)
            concave = scalar_sign(R) * d_sign <= 0
        if not concave:
            return []
        if not c1_rational:
            deriv = lambda t: _ratio_row_derivative(tpl, row, forms, t)
            return _bracket_concave_max(tpl, row, forms, t_lo, t_hi, deriv)
        A = c1 * d1 * d1 + n2 * d1
        B = 2 * c1 * d0 * d1 + 2 * n2 * d0
        C = c1 * d0 * d0 + n1 * d0 - n0 * d1
        for t_star in Poly1([C, B, A]).real_roots():
            if not (compare_scalars(t_lo, t_star) < 0 and compare_scalars(t_star, t_hi) < 0):
                continue
            den_val = d0 + d1 * t_star
            if scalar_sign(den_val) == 0:
                continue
            out.append((t_star, _case_value_at(tpl, row, t_star)))
        return out
    return out


def _optimize_path(
    tpl: _PathTemplate, t_lo: Fraction, t_hi: Fraction, fallback: bool, slope_cap: Fraction
):
    """Candidate (value, t) pairs for F over [t_lo, t_hi], conservative:
    includes both-sided values at case boundaries.  slope_cap bounds the
    |slope| the path can reach (the triangle's edge-slope hull)."""
    if compare_scalars(t_lo, t_hi) >= 0:
        return []
    # keep y(path(t)) > 0 in the interior
    y0, dy = tpl.p0.y, tpl.dvec.y
    if scalar_sign(dy) != 0:
        t_zero = -y0 / dy
        if scalar_sign(dy) < 0:
            if compare_scalars(t_zero, t_hi) < 0:
                t_hi = t_zero
        else:
            if compare_scalars(t_zero, t_lo) > 0:
                t_lo = t_zero
    elif scalar_sign(y0) <= 0:
        return []
    if compare_scalars(t_lo, t_hi) >= 0:
        return []

    def slope_at(t):
        w = _path_point(tpl, t)
        if scalar_sign(w.y) <= 0:
            return None
        return w.x / w.y

    # breakpoints where the path crosses case boundaries; slope is monotone
    # along an affine path, so each boundary is crossed at most once
    cuts = {t_lo, t_hi}
    for s0 in set(_STATIC_BOUNDARIES) | set(_band_boundaries(slope_cap + 8)):
        t = _slope_crossing(tpl, s0)
        if t is None:
            continue
        if compare_scalars(t_lo, t) < 0 and compare_scalars(t, t_hi) < 0:
            cuts.add(t)
    ordered = sorted(cuts, key=float)
    # exact sort (floats only pre-sort; fix any ties exactly)
    for i in range(1, len(ordered)):
        j = i
        while j > 0 and compare_scalars(ordered[j], ordered[j - 1]) < 0:
            ordered[j], ordered[j - 1] = ordered[j - 1], ordered[j]
            j -= 1

    candidates = []

    def add_candidate(t, row):
        try:
            candidates.append((_case_value_at(tpl, row, t), t))
        except (SlopeOutOfTable, ZeroDivisionError):
            pass

    for a, b in zip(ordered, ordered[1:]):
        mid = (a + b) / 2
        s_mid = slope_at(mid)
        if s_mid is None:
            continue
        try:
            row = spade_case_for_slope(s_mid)
        except SlopeOutOfTable:
            row = _FALLBACK_CASE if fallback else None
        if row is None:
            continue
        add_candidate(a, row)
        add_candidate(b, row)
        for t_star, value in _critical_points(tpl, row, a, b):
            candidates.append((value, t_star))
    return candidates


@dataclass(frozen=True)
class ReducedResult:
    value: object
    chain: ConvexChain


def maximize_reduced(
    o: PlanePoint, p: PlanePoint, q: PlanePoint, fallback: bool = False
) -> ReducedResult:
    """Sharp maximum of spade sums over 1- and 2-segment chains in O-P-Q.

    Directions examined: the edges P and Q-P, plus every exceptional slope
    (integers m and (4m^2-1)/m) crossing the triangle; each direction's
    one-variable problem is solved in closed form.  The reported value is a
    certified upper bound for all chain values (boundary candidates are
    evaluated with both adjacent rows).
    """
    if not o.is_zero():
        raise ValueError("first vertex must be the origin")
    if scalar_sign(q.y) <= 0:
        raise DegenerateTriangle("Q must have y > 0")
    s_oq = q.slope()
    if scalar_sign(p.y) <= 0:
        raise DegenerateTriangle("P must have y > 0 (degenerate wall)")
    s_op = p.slope()
    s_pq = (q - p).slope() if scalar_sign((q - p).y) > 0 else None
    collapsed = compare_scalars(s_op, s_oq) == 0
    if not collapsed:
        if s_pq is None:
            raise DegenerateTriangle("edge PQ must rise (y(Q) > y(P))")
        if not (compare_scalars(s_op, s_oq) > 0 and compare_scalars(s_oq, s_pq) > 0):
            raise DegenerateTriangle("need slope(OP) > slope(OQ) > slope(PQ)")
    best: tuple | None = None
    try:
        single = spade((q.x, q.y), fallback=fallback)
        best = (RadicalSum.of(single), ConvexChain([ORIGIN, q]))
    except SlopeOutOfTable:
        pass
    if collapsed:
        if best is None:
            raise SlopeOutOfTable("collapsed triangle with off-table slope")
        return ReducedResult(best[0].to_exact(), best[1])

    tri = (o, p, q)
    directions = [p, q - p]
    for s_star in _exceptional_slopes(s_pq, s_op):
        if compare_scalars(s_star, s_oq) == 0:
            continue
        directions.append(PlanePoint(s_star, 1))
    cap = max(abs(s_op), abs(s_pq), key=float)
    if isinstance(cap, QuadNum):
        cap = cap.interval(32)[1]

    for d in directions:
        sd = _spade_dir(d, fallback)
        if sd is None:
            continue
        if d is p or d is directions[1]:
            u_max: Fraction | None = Fraction(1)
        else:
            u_max = _ray_exit(ORIGIN, d, tri)
            if u_max is None:
                u_max = _ray_exit(q, PlanePoint(-d.x, -d.y), tri)
            if u_max is None:
                continue
        tpl = _PathTemplate(q, PlanePoint(-d.x, -d.y), Fraction(0), sd)
        for value, u in _optimize_path(tpl, Fraction(0), u_max, fallback, cap):
            rs = RadicalSum.of(value)
            if best is None or rs > best[0]:
                v1 = d.scale(u)
                v2 = q - v1
                if scalar_sign(v2.y) <= 0 or v2.is_zero() or v1.is_zero():
                    chain = ConvexChain([ORIGIN, q])
                else:
                    vertex = v1 if compare_scalars(v1.slope(), v2.slope()) >= 0 else v2
                    chain = ConvexChain([ORIGIN, vertex, q])
                best = (rs, chain)
    if best is None:
        raise SlopeOutOfTable("no spade-evaluable chain in this triangle")
    return ReducedResult(best[0].to_exact(), best[1])


# ---------------------------------------------------------------------------
# the Clifford wall-triangle derivation
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CliffordChainResult:
    value: object
    branch: str  # "bn_bogomolov" | "gamma_wall_triangle" | "max_branch_linear"
    chain: ConvexChain | None


def clifford_chain_bound(r, d) -> CliffordChainResult:
    """Re-derive the Clifford bound through the wall-triangle reduction:
    Bogomolov value on the Brill-Noether band; universal bound on the O->P
    leg plus the case-7/6 row on P->Q for mu <= 16; case-1 plus case-5 rows
    on [48, 64] together with the d - 46r branch, whichever is larger.
    """
    e = CurveClass(r, d)
    tri = triangle_from_first_wall(e)
    r, d = e.r, e.d
    q = tri.q
    if tri.mu_case == "bn":
        # hom <= rk - (H.ch1)^2 / (2 H^2 ch2) for the pushforward itself
        value = -4 * q.y * q.y / q.x
        return CliffordChainResult(value, "bn_bogomolov", ConvexChain([ORIGIN, q]))
    p = tri.p
    if tri.mu_case == "low":
        f1 = spade_fallback((p.x, p.y))
        f2 = spade(((q - p).x, (q - p).y))
        chain = ConvexChain([ORIGIN, p, q])
        return CliffordChainResult(f1 + f2, "gamma_wall_triangle", chain)
    # mu in [48, 64]: case-1 row on OP, case-5 row on PQ (the proof's rows)
    f1 = SPADE_CASES[0].value(p.x, p.y)
    f2 = SPADE_CASES[4].value((q - p).x, (q - p).y)
    triangle_value = f1 + f2
    linear_value = d - 46 * r
    if compare_scalars(triangle_value, linear_value) >= 0:
        return CliffordChainResult(
            triangle_value, "gamma_wall_triangle", ConvexChain([ORIGIN, p, q])
        )
    return CliffordChainResult(linear_value, "max_branch_linear", None)


# ---------------------------------------------------------------------------
# brute force oracle
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class BruteForceResult:
    value: object
    chain: ConvexChain


def maximize_bruteforce(
    o: PlanePoint, p: PlanePoint, q: PlanePoint, grid_n: int, fallback: bool = False
) -> BruteForceResult:
    """Exact maximum of spade sums over convex chains on the lattice
    {(i*P + j*Q)/grid_n : i, j >= 0, i + j <= grid_n}, any segment count.

    Deterministic dynamic program over primitive directions sorted by
    strictly decreasing slope (unbounded reuse of a direction realizes the
    collinear merge).  Chains with an increment off the slope table are
    excluded (or valued with the universal fallback when requested).
    """
    if grid_n > 60:
        raise GridTooLarge("grid_n must be <= 60")
    if grid_n < 1:
        raise ValueError("grid_n must be >= 1")
    if not o.is_zero():
        raise ValueError("first vertex must be the origin")
    if scalar_sign(p.y) <= 0 or scalar_sign(q.y) <= 0:
        raise DegenerateTriangle("P and Q must have y > 0")
    s_op, s_oq = p.slope(), q.slope()
    if scalar_sign((q - p).y) <= 0:
        raise DegenerateTriangle("edge PQ must rise")
    s_pq = (q - p).slope()
    collapsed = compare_scalars(s_op, s_oq) == 0
    if not collapsed and not (
        compare_scalars(s_op, s_oq) > 0 and compare_scalars(s_oq, s_pq) > 0
    ):
        raise DegenerateTriangle("need slope(OP) > slope(OQ) > slope(PQ)")

    n = grid_n
    # primitive directions (a, b), scaled vector a*P + b*Q with y > 0 and
    # slope within [slope(PQ), slope(OP)]
    dirs = []
    for a in range(-n, n + 1):
        for b in range(-n, n + 1):
            if (a, b) == (0, 0) or math.gcd(abs(a), abs(b)) != 1:
                continue
            vx = a * p.x + b * q.x
            vy = a * p.y + b * q.y
            if scalar_sign(vy) <= 0:
                continue
            s = vx / vy
            if compare_scalars(s, s_pq) < 0 or compare_scalars(s, s_op) > 0:
                continue
            try:
                val = spade((vx, vy), fallback=fallback)
            except SlopeOutOfTable:
                continue
            dirs.append((s, a, b, RadicalSum.of(val).scale(Fraction(1, n))))
    # strictly decreasing slope; ties cannot occur for primitive directions
    dirs.sort(key=lambda rec: (-float(rec[0]), rec[1], rec[2]))
    for i in range(1, len(dirs)):
        j = i
        while j > 0 and compare_scalars(dirs[j][0], dirs[j - 1][0]) > 0:
            dirs[j], dirs[j - 1] = dirs[j - 1], dirs[j]
            j -= 1

    # DP on float mirrors with exact resolution of near-ties.  Accumulated
    # float error is tiny (bounded chain length, exactly-known summands), so
    # a gap above the 1e-6 screen decides a comparison certifiably; ties
    # inside the screen are settled with exact RadicalSum values.  Each cell
    # update creates an immutable record (float, parent record, step), so a
    # later improvement of a predecessor cannot corrupt snapshots, and exact
    # values are cached per record.  The reported maximum is exact.
    start = (0, 0)
    goal = (0, n)
    points = [(i, j) for i in range(n + 1) for j in range(n + 1 - i)]
    dir_exact = {(a, b): val for _, a, b, val in dirs}

    class _Rec:
        __slots__ = ("value_f", "link", "exact")

        def __init__(self, value_f, link):
            self.value_f = value_f
            self.link = link  # None | (parent _Rec, (a, b))
            self.exact = None

    def exact_of(rec: "_Rec") -> RadicalSum:
        pending = []
        node = rec
        while node.exact is None:
            pending.append(node)
            if node.link is None:
                node.exact = RadicalSum.of(0)
                break
            node = node.link[0]
        for item in reversed(pending):
            if item.exact is None:
                par, step = item.link
                item.exact = par.exact + dir_exact[step]
        return rec.exact

    dp: dict = {start: _Rec(0.0, None)}
    # accumulated float error along a chain is < ~1e-11 for these magnitudes
    screen = 1e-9
    for s, a, b, val in dirs:
        val_f = val.approx
        # all simplex points in increasing progress along (a, b), so repeated
        # steps of the same direction chain within one pass (collinear merge)
        order = sorted(points, key=lambda ij: a * ij[0] + b * ij[1])
        for ij in order:
            base = dp.get(ij)
            if base is None:
                continue
            ni, nj = ij[0] + a, ij[1] + b
            if ni < 0 or nj < 0 or ni + nj > n:
                continue
            w = (ni, nj)
            cand_f = base.value_f + val_f
            cur = dp.get(w)
            if cur is not None:
                if cand_f < cur.value_f - screen:
                    continue
                if cand_f <= cur.value_f + screen:
                    cand_exact = exact_of(base) + val
                    if not (cand_exact > exact_of(cur)):
                        continue
                    rec = _Rec(cand_exact.approx, (base, (a, b)))
                    rec.exact = cand_exact
                    dp[w] = rec
                    continue
            dp[w] = _Rec(cand_f, (base, (a, b)))
    if goal not in dp:
        raise ConvexOptError("no spade-evaluable chain reaches Q on this grid")
    # reconstruct and recompute the exact value of the winning chain
    steps = []
    node = dp[goal]
    while node.link is not None:
        prev, step = node.link
        steps.append(step)
        node = prev
    steps.reverse()
    verts = [ORIGIN]
    total = RadicalSum.of(0)
    for a, b in steps:
        inc = PlanePoint((a * p.x + b * q.x) / n, (a * p.y + b * q.y) / n)
        verts.append(verts[-1] + inc)
        total = total + dir_exact[(a, b)]
    chain = ConvexChain(verts).merged()
    return BruteForceResult(total.to_exact(), chain)
