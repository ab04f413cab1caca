"""
The skew-similar case Aa = Bb
=============================

Here Q* is torsion, so the construction above stalls. Instead one looks
for triangles (a, b, c) for which E_{a,b}: y^2 = x (x + a^4)(x + b^4)
itself has positive rank. A quartic curve birational to
E': Y^2 = (X - 24)(X - 6)(X + 30) produces infinitely many of them.
"""

from catheti import E_PRIME, GENERATOR, family_member, mul, phi_inv, rank_bounds
from catheti.skewfam import distinctness_guard, quartic_value

print("E':", E_PRIME)
print("generator", GENERATOR)

# rank of E' is 1: the 2-Selmer bound and the generator meet
r = rank_bounds(E_PRIME, search_height=0, witnesses=[GENERATOR])
print("rank bounds of E':", r.rank_lower, "<= rank <=", r.rank_upper)

# multiples of the generator, pulled back to the quartic
for n in (2, 3):
    U, W = phi_inv(mul(n, GENERATOR))
    print(f"n={n}: U={U}, W={W}, W^2 == quartic(U): {W * W == quartic_value(U)}")

# each (U, W) = (u/v, w/v^2) gives a triple and a point of infinite order
members = [family_member(n) for n in range(2, 7)]
for m in members:
    digits = len(str(m.triple.c))
    print(f"n={m.n}: c has {digits} digits; witness x has {len(str(abs(m.witness.x.numerator)))} digits")

print("first two triples:", members[0].triple.as_tuple(), members[1].triple.as_tuple())
print("witness on E_{8,15}:", members[0].witness)

# no two members give isomorphic curves
print("isomorphic pairs among n=2..6:", distinctness_guard(members) or "none")
