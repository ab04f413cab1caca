"""
Families of ratios and a density statement
==========================================

Normalize the first ratio to 1 (equal first legs). Pairs with B/b = nu
exist exactly when E_nu: y^2 = x (x + 1)(x + nu^2) has positive rank,
and such nu are dense in the positive reals.
"""

from fractions import Fraction

from catheti import curve_L_point, find_nu_in_interval, fibration_point, pair_from_H, r1r2_from_uvw
from catheti.paramfam import h_points_from_multiples, psi

# a two-parameter family of ratio pairs (r1, r2) for a fixed triangle
r = r1r2_from_uvw(2, 1, Fraction(1, 10))
print("u=2, v=1, w=1/10 -> r1 =", r.r1, " r2 =", r.r2, " residual", r.quadratic_residual())

# the surface nu_bar x y S^2 = (x^2 - 1)(y^2 - 1) and a curve L on it
nu_bar, t = Fraction(1), Fraction(1)
h = curve_L_point(nu_bar, t)
print("\npoint of L:", h.x, h.y, h.S)

# fibering over x gives an elliptic curve; L lands on a point P of it
P = fibration_point(nu_bar, t)
print("psi(L-point) == P:", psi(h) == P)

# multiples of P give more points of H, hence more triangle pairs
for hp in h_points_from_multiples(nu_bar, t, 3)[1:]:
    if hp.y in (0, 1, -1):
        continue
    pair = pair_from_H(nu_bar, hp)
    print("triangles", *(tuple(str(s) for s in tri.sides()) for tri in (pair.first, pair.second)))
    print("    B/b =", pair.nu, "= nu_bar * s^2 with s =", pair.s)

# density: every interval of positive reals contains a good nu
for lo, hi in [(Fraction(1, 2), Fraction(3, 5)), (Fraction(10), Fraction(11)), (Fraction(1, 1000), Fraction(2, 1000))]:
    s = find_nu_in_interval(lo, hi)
    print(f"nu = {s.nu} in ({lo}, {hi}); point {s.point}")
