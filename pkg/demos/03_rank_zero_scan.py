"""
Curves E_{a,b} of rank zero
===========================

A complete 2-descent bounds the rank of E_{a,b} from above. When the bound
is 0 the curve has rank 0 and the skew-similar problem for (a, b, c) has only
trivial solutions. Pass a leg bound on the command line (default 600).
"""

import sys
import time

from catheti import rank_bounds, scan_rank_zero
from catheti.descent import e_ab_hints
from catheti.ecq import curve_e_ab
from catheti.tables import KNOWN_RANK_ZERO

bound = int(sys.argv[1]) if len(sys.argv) > 1 else 600

# one curve in detail
r = rank_bounds(curve_e_ab(3, 4))
print("E_{3,4}: bad primes", r.bad_primes)
print("  Selmer pairs", r.accepted_pairs)
print("  rank <=", r.rank_upper)

# a curve where the bound is not 0: (8, 15, 17) carries a point of infinite order
r = rank_bounds(curve_e_ab(8, 15), search_height=2000, factor_hints=e_ab_hints(8, 15))
print("E_{8,15}: rank between", r.rank_lower, "and", r.rank_upper)

# scan every primitive triple with both legs below the bound
start = time.perf_counter()
certified = [t.as_tuple() for t, _ in scan_rank_zero(bound)]
print(f"\n{len(certified)} curves certified rank 0 below {bound} in {time.perf_counter() - start:.1f} s")

known = [t for t in KNOWN_RANK_ZERO if t[1] < bound]
print("published entries found:", sum(t in certified for t in known), "of", len(known))
print("certified here but not in the published list:")
for t in certified:
    if t not in KNOWN_RANK_ZERO:
        print("   ", t)
