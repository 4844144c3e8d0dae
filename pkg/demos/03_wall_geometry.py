"""Wall geometry on the degree-8 K3: the boundary curve, nested wall
lines, line-curve intersections, and first-wall bounds for pushforwards.
"""

from fractions import Fraction as F

from tiltbound import (
    ChernVec,
    TiltParams,
    bn_threshold,
    decimal_str,
    first_wall_bounds,
    format_scalar,
    gamma_curve,
    line_gamma_intersection,
    nested_wall_line,
)
from tiltbound.chern import X24

print("== the boundary curve ==")
for x in (F(0), F(1, 2), F(1), F(3, 2), F(2), F(-7, 2)):
    print(f"Gamma({format_scalar(x)}) = {format_scalar(gamma_curve(x))}")
print("(integer points use the 4n^2 convention; the gap below is a wall anchor)")

print()
print("== nested wall lines ==")
line = nested_wall_line(ChernVec(X24, (1, 0, 0, 0)), TiltParams(F(1, 2), -1))
print("wall of the structure sheaf through (1/2, -1):", line)

print()
print("== line-curve intersections ==")
for k, side in ((F(97, 10), "right"), (F(-63, 4), "left"), (F(0), "right")):
    x = line_gamma_intersection(k, side)
    print(f"slope {format_scalar(k):>7}, {side:>5}: x = {format_scalar(x)}")

print()
print("== first-wall bounds for a pushed-forward curve class ==")
thr = bn_threshold()
print("Brill-Noether range ends at", format_scalar(thr), "=", decimal_str(thr, 10))
for mu in (F(2), F(16), F(63, 2), F(127, 2)):
    fw = first_wall_bounds(mu)
    tag = fw.exceptional_case or "-"
    print(
        f"mu = {format_scalar(mu):>6}: beta1 >= {format_scalar(fw.beta1_min):>8}, "
        f"beta2 <= {format_scalar(fw.beta2_max):>6}, BN-semistable: {fw.bn_semistable}, window: {tag}"
    )

print()
print("== the secant relation behind the wall slope ==")
mu = F(37, 3)
lhs = gamma_curve(mu / 32) - gamma_curve(mu / 32 - 4)
print(f"Gamma(mu/32) - Gamma(mu/32 - 4) = {format_scalar(lhs)} = mu - 64 ->", lhs == mu - 64)
