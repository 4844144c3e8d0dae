"""Wall geometry on the degree-8 K3: nested wall lines, the Le Potier-type
boundary curve, line-curve intersections, and the first-wall bounds for
pushforwards of curve classes.

The boundary curve on S(2,2,2) (H^2 = 8) is

    Gamma(x) = 4x^2 - 1 + (x - n)^2   for x in [n-1/2, n+1/2], x != n,
    Gamma(n) = 4n^2                   at integers,

equivalently the piece polynomial 5x^2 - 2nx + (n^2 - 1) away from the
integer points; the open gap (n, 4n^2-1)..(n, 4n^2) is carried by wall
endpoints, not by the function value.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .chern import ChernVec
from .exactnum import (
    Poly1,
    QuadNum,
    Scalar,
    compare_scalars,
    floor_scalar,
    format_scalar,
    scalar_sign,
    sqrt_exact,
)
from .tilt import TiltParams

__all__ = [
    "WallError",
    "ZeroReducedCharacter",
    "DegenerateWall",
    "OutOfRange",
    "NoIntersection",
    "WallLine",
    "nested_wall_line",
    "gamma_piece",
    "gamma_piece_index",
    "gamma_curve",
    "line_gamma_intersection",
    "FirstWallBounds",
    "first_wall_bounds",
    "bn_threshold",
    "BN_THRESHOLD_POLY",
]


class WallError(Exception):
    pass


class ZeroReducedCharacter(WallError):
    """The reduced character (H^n.ch0, H^(n-1).ch1, H^(n-2).ch2) vanishes."""


class DegenerateWall(WallError):
    """The base point coincides with p_H(v); every line through it works."""


class OutOfRange(WallError):
    """Slope outside the covered range."""


class NoIntersection(WallError):
    """The line misses the requested curve piece (negative discriminant)."""


@dataclass(frozen=True)
class WallLine:
    """A*alpha + B*beta + C = 0 in the (alpha, beta) parameter plane,
    normalized so the first nonzero of (A, B) equals 1."""

    a: Fraction
    b: Fraction
    c: Fraction

    def __post_init__(self):
        a, b, c = Fraction(self.a), Fraction(self.b), Fraction(self.c)
        if a == 0 and b == 0:
            raise ValueError("degenerate line coefficients")
        scale = a if a != 0 else b
        object.__setattr__(self, "a", a / scale)
        object.__setattr__(self, "b", b / scale)
        object.__setattr__(self, "c", c / scale)

    def evaluate(self, p: TiltParams):
        return self.a * p.alpha + self.b * p.beta + self.c

    def contains(self, p: TiltParams) -> bool:
        return scalar_sign(self.evaluate(p)) == 0

    def __str__(self):
        return (
            f"{format_scalar(self.a)}*alpha + {format_scalar(self.b)}*beta"
            f" + {format_scalar(self.c)} = 0"
        )


def nested_wall_line(v: ChernVec, p0: TiltParams) -> WallLine:
    """The nested-wall line through p0 and p_H(v), as the vanishing of
    det[(1, alpha, beta), (1, alpha0, beta0), (H^n.ch0, H^(n-2).ch2, H^(n-1).ch1)].
    """
    r, s2, s1 = v.inum(0), v.inum(2), v.inum(1)
    if r == 0 and s1 == 0 and s2 == 0:
        raise ZeroReducedCharacter("reduced character is zero")
    a0, b0 = p0.alpha, p0.beta
    ca = -(s1 - b0 * r)
    cb = s2 - a0 * r
    cc = a0 * s1 - b0 * s2
    if scalar_sign(ca) == 0 and scalar_sign(cb) == 0:
        # p0 equals p_H(v): r != 0 and (a0, b0) = (s2/r, s1/r)
        raise DegenerateWall("base point lies on p_H(v); the line is not unique")
    return WallLine(ca, cb, cc)


# ---------------------------------------------------------------------------
# Gamma curve
# ---------------------------------------------------------------------------


def gamma_piece_index(x) -> int:
    """Nearest integer n with x in [n - 1/2, n + 1/2] (ties go down)."""
    return floor_scalar(x + Fraction(1, 2))


def gamma_piece(n: int) -> Poly1:
    """Piece polynomial 5x^2 - 2n x + (n^2 - 1) of Gamma near the integer n."""
    return Poly1([Fraction(n * n - 1), Fraction(-2 * n), Fraction(5)])


def gamma_curve(x) -> Scalar:
    """Exact Gamma(x) with the integer-point convention Gamma(n) = 4n^2."""
    if isinstance(x, int):
        x = Fraction(x)
    if isinstance(x, QuadNum) and x.is_rational:
        x = x.as_fraction()
    if isinstance(x, Fraction) and x.denominator == 1:
        return 4 * x * x
    n = gamma_piece_index(x)
    if compare_scalars(x, n) == 0:  # QuadNum that is secretly an integer
        return Fraction(4 * n * n)
    return gamma_piece(n).evaluate(x)


# line_gamma_intersection dispatch: (k-range closure, piece index) per side.
# Ranges are the closures of the slope table's ranges; at boundary k the
# intersection lands on a piece edge and still satisfies k*x = piece_n(x).
_RIGHT_RANGES = [
    (Fraction(-1, 4), Fraction(1, 4), 0),
    (Fraction(1, 2), Fraction(11, 2), 1),
    (Fraction(11, 2), Fraction(97, 10), 2),
]
_LEFT_RANGES = [
    (Fraction(-1, 4), Fraction(1, 4), 0),
    (Fraction(-11, 2), Fraction(-1, 2), -1),
    (Fraction(-97, 10), Fraction(-11, 2), -2),
    (Fraction(-193, 14), Fraction(-97, 10), -3),
    (Fraction(-107, 6), Fraction(-193, 14), -4),
]


def line_gamma_intersection(k, side: str) -> Scalar:
    """x-coordinate where y = k*x meets the Gamma piece selected by k.

    side 'right' follows the positive-slope table ranges, 'left' the
    negative ones; substituting back gives k*x = piece(x) exactly.
    """
    k = Fraction(k)
    if side == "right":
        table = _RIGHT_RANGES
        pick_hi = True
    elif side == "left":
        table = _LEFT_RANGES
        pick_hi = False
    else:
        raise ValueError("side must be 'right' or 'left'")
    piece_n = None
    for lo, hi, n in table:
        if lo <= k <= hi:
            piece_n = n
            break
    if piece_n is None:
        raise OutOfRange(f"slope {k} outside the intersection table ({side})")
    return intersect_line_with_piece(k, piece_n, pick_hi)


def intersect_line_with_piece(k, n: int, upper_root: bool) -> Scalar:
    """Solve k*x = 5x^2 - 2n x + n^2 - 1 exactly; NoIntersection if disc < 0."""
    k = Fraction(k)
    # 5x^2 - (2n + k)x + (n^2 - 1) = 0
    b = -(2 * n + k)
    c = Fraction(n * n - 1)
    disc = b * b - 20 * c
    if disc < 0:
        raise NoIntersection(f"slope {k} misses the piece at n={n}")
    root = sqrt_exact(disc)
    if isinstance(root, Fraction):
        return (-b + root) / 10 if upper_root else (-b - root) / 10
    half = QuadNum(-b) / 10
    return half + root / 10 if upper_root else half - root / 10


# ---------------------------------------------------------------------------
# first wall of a pushed-forward curve class
# ---------------------------------------------------------------------------

# t < 0 with t = -(3/1024) mu^2 + mu/2 - 1 is equivalent (on [0, 64]) to
# 3 mu^2 - 512 mu + 1024 > 0, whose lower root is the threshold below.
BN_THRESHOLD_POLY = Poly1([Fraction(1024), Fraction(-512), Fraction(3)])


def bn_threshold() -> QuadNum:
    """(256 - 32*sqrt(61))/3, the end of the Brill-Noether-semistable range."""
    return QuadNum(Fraction(256, 3), Fraction(-32, 3), 61)


@dataclass(frozen=True)
class FirstWallBounds:
    """Bounds for the first-wall endpoints of the pushforward at slope mu."""

    beta1_min: object
    beta2_max: object
    bn_semistable: bool
    exceptional_case: str | None = None


def first_wall_bounds(mu, assume_maximal: bool = False) -> FirstWallBounds:
    """Endpoint bounds beta1 >= mu/32 - 4, beta2 <= mu/32, widened on the
    three vertical-segment windows; bn_semistable is the exact sign test of
    the y-intercept t.  assume_maximal skips the exception table and returns
    the extremal pair used by the Clifford triangle construction."""
    mu = Fraction(mu)
    if not 0 <= mu <= 64:
        raise OutOfRange("mu must lie in [0, 64]")
    beta1 = mu / 32 - 4
    beta2 = mu / 32
    # within [0, 64], positivity of the quadratic happens exactly below the
    # lower root (256 - 32*sqrt(61))/3
    bn = BN_THRESHOLD_POLY.evaluate(mu) > 0
    if assume_maximal:
        return FirstWallBounds(beta1, beta2, bn, None)
    tag = None
    if 31 <= mu <= 32:
        beta2 = Fraction(1)
        tag = "mu_31_32"
    elif 63 <= mu <= 64:
        beta2 = Fraction(2)
        tag = "mu_63_64"
    if 32 <= mu <= 33:
        beta1 = Fraction(-3)
        tag = "mu_32_33" if tag is None else tag
    return FirstWallBounds(beta1, beta2, bn, tag)
