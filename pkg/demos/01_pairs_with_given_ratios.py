"""
Pairs of Pythagorean triangles with prescribed leg ratios
=========================================================

Start from two triangles (a, b, c) and (A, B, C). We want new pairs
(a', b', c'), (A', B', C') with A'/a' = A/a and B'/b' = B/b.
"""

from fractions import Fraction

from catheti import PythTriple, build_pair_curve, enumerate_pairs, mul, torsion_order
from catheti.pairgen import duplication_x

t1, t2 = PythTriple(3, 4, 5), PythTriple(5, 12, 13)
print("ratios wanted:", Fraction(t2.a, t1.a), Fraction(t2.b, t1.b))

# the problem lives on y^2 = x (x + A^2 b^2)(x + a^2 B^2) with a point Q*
pc = build_pair_curve(t1, t2)
print("curve:", pc.curve)
print("Q* =", pc.base, " order:", torsion_order(pc.base) or "infinite")

# 2Q* has a closed-form abscissa
two_q = mul(2, pc.base)
print("x(2Q*) =", two_q.x, "=", duplication_x(t1, t2))

# every even multiple gives a new pair; similar pairs are dropped
for i, pair in enumerate(enumerate_pairs(t1, t2, 3), 1):
    print(f"pair {i}:")
    print("   ", pair.first.as_tuple())
    print("   ", pair.second.as_tuple())
    print("    ratios", pair.mu, pair.nu)

# the digits grow quickly: heights on the curve grow quadratically in k
sizes = [len(str(p.first.c)) for p in enumerate_pairs(t1, t2, 5)]
print("hypotenuse digits for k = 1..5:", sizes)
