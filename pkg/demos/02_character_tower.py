"""Chern characters on the tower C(2,2,2,4) in S(2,2,2), S'(2,2,4), X(2,4).

Characters are stored as coefficients against powers of the hyperplane
class; the uniform pairing inum(i) = H^(n-i).ch_i drives every formula.
"""

from fractions import Fraction as F

from tiltbound import (
    ChernVec,
    CurveClass,
    chi_euler,
    curve_class_of,
    dual_shift_char,
    grr_push_to_k3,
    mukai_square,
    restrict_to_divisor,
    spherical_twist_char,
    twist_beta,
)
from tiltbound.chern import C2224, S222, S224, X24

print("== contexts ==")
for ctx in (C2224, S222, S224, X24):
    print(f"{ctx.name}: dim {ctx.dim}, H^n = {ctx.degree}, genus {ctx.genus}")

print()
print("== twisting ==")
oh = ChernVec(X24, (1, 1, F(1, 2), F(1, 6)))  # O(H)
print("ch(O(H)) =", oh)
print("twist by 1:", twist_beta(oh, 1), " (back to the structure sheaf)")

print()
print("== pushing a curve class to the K3 ==")
e = CurveClass(2, 33)
v = grr_push_to_k3(e)
print(f"rank {e.r}, degree {e.d} |-> {v}; ch2 number = {v.inum(2)}")
print("Mukai square:", mukai_square(v), "(always 128 r^2)")

print()
print("== restriction down the tower ==")
w = ChernVec(X24, (2, 1, 0, 0))
surf = restrict_to_divisor(w, 2)
curve = curve_class_of(restrict_to_divisor(surf, 2))
print(f"{w} -> {surf} -> rank {curve.r}, degree {curve.d} on the curve")

print()
print("== Euler characteristics ==")
print("chi(O_X) =", chi_euler(ChernVec(X24, (1, 0, 0, 0))))
print("chi(O_X(H)) =", chi_euler(oh), "(the 6 coordinates of the ambient P^5)")
print("chi(O_S') =", chi_euler(ChernVec(S224, (1, 0, 0))))
print("chi(O_K3) =", chi_euler(ChernVec(S222, (1, 0, 0))))

print()
print("== character-level dual shift and spherical twists ==")
print("dual shift of ch(O(H)):", dual_shift_char(oh))
print("twist of the pushforward by ev against 1 copy of O:", spherical_twist_char(v, 1, "ev"))
