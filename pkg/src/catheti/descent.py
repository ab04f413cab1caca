"""Complete 2-descent for curves y^2 = (x - e1)(x - e2)(x - e3) with integral roots.

E(Q)/2E(Q) embeds in pairs of square classes through
x -> (x - e1, x - e2). A pair (b1, b2) supported on the bad primes lies in
the 2-Selmer group when the torsor

    b1 z1^2 - b2 z2^2 = e2 - e1,    b1 z1^2 - b1 b2 z3^2 = e3 - e1

has points over R and every Q_p with p bad. Equivalently its local classes
lie in the local Kummer image W_p, a subgroup of known order (4 at odd p,
8 at p = 2, 2 over R). We build each W_p from local points until it reaches
that order, then cut the Selmer group out by linear algebra over F_2.

Square classes at a place are encoded as small bit vectors:
R: (sign); odd p: (v mod 2, unit is a non-residue);
p = 2: (v mod 2, unit = 3 mod 4, unit = +-3 mod 8).
"""

from __future__ import annotations

import logging
import math
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Set, Tuple

from .ecq import Curve222, CurvePoint, curve_e_ab, on_curve, torsion_order
from .exactmath import Rational, as_fraction, factorize, is_perfect_square, valuation
from .pythag import PythTriple, enumerate_primitive

log = logging.getLogger(__name__)

REAL = -1  # the infinite place in prime lists

DEFAULT_SEARCH_HEIGHT = 10_000


class NonIntegralModelError(ValueError):
    pass


@dataclass
class SelmerReport:
    curve: Curve222
    bad_primes: List[int]
    accepted_pairs: List[Tuple[int, int]]
    rank_upper: int
    rank_lower: int
    witnesses: List[CurvePoint] = field(default_factory=list)
    search_height: int = 0

    @property
    def certified_rank(self) -> Optional[int]:
        return self.rank_upper if self.rank_upper == self.rank_lower else None


# ---------------------------------------------------------------------------
# local square classes


def _nonresidue(p: int) -> int:
    n = 2
    while pow(n, (p - 1) // 2, p) != p - 1:
        n += 1
    return n


def _unit_part(q: Fraction, p: int) -> Tuple[int, int]:
    """(v_p(q), num * den of the unit part)."""
    v = valuation(q, p)
    num, den = q.numerator, q.denominator
    if v > 0:
        num //= p ** v
    elif v < 0:
        den //= p ** (-v)
    return v, num * den


def local_class(q: Rational, p: int) -> int:
    q = as_fraction(q)
    if q == 0:
        raise ValueError("zero has no square class")
    if p == REAL:
        return 1 if q < 0 else 0
    v, u = _unit_part(q, p)
    if p == 2:
        u %= 8
        return (v & 1) | ((u % 4 == 3) << 1) | ((u in (3, 5)) << 2)
    return (v & 1) | ((pow(u % p, (p - 1) // 2, p) != 1) << 1)


def class_bits(p: int) -> int:
    return 1 if p == REAL else (3 if p == 2 else 2)


def is_local_square(q: Rational, p: int) -> bool:
    """Whether q is a square in Q_p (or R); zero counts as a square."""
    q = as_fraction(q)
    return q == 0 or local_class(q, p) == 0


def local_image_size(p: int) -> int:
    return 2 if p == REAL else (8 if p == 2 else 4)


# ---------------------------------------------------------------------------
# F_2 linear algebra on int bitmasks


def _reduce_basis(vectors: Iterable[int]) -> Dict[int, int]:
    """Echelon basis keyed by leading bit."""
    basis: Dict[int, int] = {}
    for v in vectors:
        while v:
            top = v.bit_length() - 1
            if top not in basis:
                basis[top] = v
                break
            v ^= basis[top]
    return basis


def _in_span(basis: Dict[int, int], v: int) -> bool:
    while v:
        top = v.bit_length() - 1
        if top not in basis:
            return False
        v ^= basis[top]
    return True


def _nullspace(rows: Sequence[int], n: int) -> List[int]:
    """Basis of {x in F_2^n : <row, x> = 0 for all rows}."""
    pivots: Dict[int, int] = {}  # pivot column -> row with that pivot, fully reduced
    for r in rows:
        for col, prow in pivots.items():
            if r >> col & 1:
                r ^= prow
        if not r:
            continue
        col = (r & -r).bit_length() - 1
        for c2 in list(pivots):
            if pivots[c2] >> col & 1:
                pivots[c2] ^= r
        pivots[col] = r
    out = []
    for free in range(n):
        if free in pivots:
            continue
        x = 1 << free
        for col, prow in pivots.items():
            if prow >> free & 1:
                x |= 1 << col
        out.append(x)
    return out


def _span(basis: Sequence[int]) -> List[int]:
    out = [0]
    for b in basis:
        out += [v ^ b for v in out]
    return out


def _parity(x: int) -> int:
    return bin(x).count("1") & 1


# ---------------------------------------------------------------------------
# bad primes and Kummer images


def _integral_roots(c: Curve222) -> Tuple[int, int, int]:
    if not c.is_integral():
        raise NonIntegralModelError("descent needs integral roots; use curve.integral_model()")
    return tuple(int(e) for e in c.roots)


def bad_primes(c: Curve222, factor_hints: Sequence[int] = ()) -> List[int]:
    """2 and every prime dividing a difference of roots.

    ``factor_hints`` are integers whose prime factors are tried first; any
    cofactor they leave is factored in full, so hints only save time.
    """
    e1, e2, e3 = _integral_roots(c)
    primes: Set[int] = {2}
    for h in factor_hints:
        if h:
            primes.update(p for p, _ in factorize(h))
    for d in (e1 - e2, e1 - e3, e2 - e3):
        d = abs(d)
        for p in sorted(primes):
            while d % p == 0:
                d //= p
        if d > 1:
            primes.update(p for p, _ in factorize(d))
    return sorted(primes)


def kummer_image(pt: CurvePoint) -> Tuple[Fraction, Fraction]:
    """(x - e1, x - e2) up to squares, with the usual fix at 2-torsion points."""
    e1, e2, e3 = pt.curve.roots
    if pt.is_infinity:
        return Fraction(1), Fraction(1)
    x = pt.x
    if x == e1:
        return (e1 - e2) * (e1 - e3), e1 - e2
    if x == e2:
        return e2 - e1, (e2 - e1) * (e2 - e3)
    return x - e1, x - e2


def _local_pair_vector(pair: Tuple[Rational, Rational], p: int) -> int:
    k = class_bits(p)
    return local_class(pair[0], p) | (local_class(pair[1], p) << k)


def _local_torsion_images(c: Curve222) -> List[Tuple[Fraction, Fraction]]:
    return [kummer_image(t) for t in c.two_torsion()]


def _candidate_abscissae(c: Curve222, p: int, level: int) -> Iterable[Fraction]:
    roots = c.roots
    if p == REAL:
        lo, mid, hi = sorted(roots)
        yield hi + 1
        yield (lo + mid) / 2
        return
    width = 8 * level if p == 2 else 4 * level
    span = max(valuation(a - b, p) for a in roots for b in roots if a != b)
    low_j = -6 if p == 2 else 0
    for r in range(1, width + 1):
        if r % p == 0:
            continue
        for e in roots:
            for j in range(low_j, span + 4 * level):
                yield e + Fraction(r) * Fraction(p) ** j
                yield e - Fraction(r) * Fraction(p) ** j
    for n in range(level * 64):
        yield Fraction(n)
        yield Fraction(-n)


def local_image(c: Curve222, p: int, max_level: int = 6) -> Set[int]:
    """W_p as a set of local pair vectors (b1 class in low bits)."""
    target = local_image_size(p)
    basis = _reduce_basis(_local_pair_vector(im, p) for im in _local_torsion_images(c))
    level = 1
    while 1 << len(basis) < target:
        if level > max_level:
            if p != REAL and p < 200:
                log.info("point sampling stalled at p=%d; falling back to torsor search", p)
                return _local_image_by_torsors(c, p)
            raise RuntimeError(f"could not generate the local image at p={p}")
        for x in _candidate_abscissae(c, p, level):
            fx = c.rhs(x)
            if fx == 0 or not is_local_square(fx, p):
                continue
            vec = _local_pair_vector((x - c.e1, x - c.e2), p)
            if not _in_span(basis, vec):
                basis = _reduce_basis(list(basis.values()) + [vec])
                if 1 << len(basis) == target:
                    break
        level += 1
    return set(_span(list(basis.values())))


# ---------------------------------------------------------------------------
# torsor solvability (independent route, used for cross-checks and fallback)


def _class_reps(p: int) -> List[int]:
    if p == REAL:
        return [1, -1]
    if p == 2:
        return [u * t for t in (1, 2) for u in (1, 3, 5, 7)]
    n = _nonresidue(p)
    return [u * t for t in (1, p) for u in (1, n)]


def _ball_class(alpha: Fraction, gamma: Fraction, centre: int, k: int, p: int) -> Optional[int]:
    """Square class of alpha z^2 + gamma if constant on centre + p^k Z_p, else None."""
    g = alpha * centre * centre + gamma
    if g == 0:
        return None
    v_centre = valuation(2 * centre, p) if centre else k
    slack = valuation(alpha, p) + k + min(v_centre, k)
    need = valuation(g, p) + (3 if p == 2 else 1)
    return local_class(g, p) if slack >= need else None


def _torsor_real(b1: int, b2: int, d12: int, d13: int) -> bool:
    if b1 > 0 and b2 > 0:
        return True
    cands = [Fraction(0)] + [Fraction(d, b1) for d in (d12, d13) if Fraction(d, b1) >= 0]
    for s in cands:
        if (b1 * s - d12) / b2 >= 0 and (b1 * s - d13) / (b1 * b2) >= 0:
            return True
    return False


def torsor_locally_solvable(b1: int, b2: int, d12: int, d13: int, p: int, max_depth: int = 400) -> bool:
    """Whether b1 z1^2 - b2 z2^2 = d12, b1 z1^2 - b1 b2 z3^2 = d13 has a point over Q_p.

    ``p = REAL`` tests the real place. The p-adic test is a search over
    balls on the projective line of z1, pruned whenever one side has constant
    non-square class.
    """
    if p == REAL:
        return _torsor_real(b1, b2, d12, d13)
    F = Fraction
    charts = [
        # (z : 1), z in Z_p
        ((F(b1, b2), F(-d12, b2)), (F(1, b2), F(-d13, b1 * b2)), 0),
        # (1 : w), w in p Z_p
        ((F(-d12, b2), F(b1, b2)), (F(-d13, b1 * b2), F(1, b2)), 1),
    ]
    for g1, g2, k0 in charts:
        # breadth first: depth first can chase a p-adic root forever
        queue = deque([(0, k0)])
        while queue:
            centre, k = queue.popleft()
            if k - k0 > max_depth:
                raise RuntimeError("torsor search exceeded its depth bound")
            v1 = g1[0] * centre * centre + g1[1]
            v2 = g2[0] * centre * centre + g2[1]
            if is_local_square(v1, p) and is_local_square(v2, p):
                return True
            c1 = _ball_class(*g1, centre, k, p)
            c2 = _ball_class(*g2, centre, k, p)
            if (c1 is not None and c1 != 0) or (c2 is not None and c2 != 0):
                continue
            step = p ** k
            queue.extend((centre + j * step, k + 1) for j in range(p))
    return False


def _local_image_by_torsors(c: Curve222, p: int) -> Set[int]:
    e1, e2, e3 = _integral_roots(c)
    out = set()
    for b1 in _class_reps(p):
        for b2 in _class_reps(p):
            if torsor_locally_solvable(b1, b2, e2 - e1, e3 - e1, p):
                out.add(_local_pair_vector((b1, b2), p))
    return out


# ---------------------------------------------------------------------------
# global Selmer group


def _global_vector(q: Rational, basis: Sequence[int]) -> int:
    """Exponent vector of q modulo squares over the basis (-1, p1, ..., pk)."""
    q = as_fraction(q)
    bits = 1 if q < 0 else 0
    num, den = abs(q.numerator), q.denominator
    for i, p in enumerate(basis[1:], start=1):
        e = 0
        while num % p == 0:
            num //= p
            e += 1
        while den % p == 0:
            den //= p
            e += 1
        if e & 1:
            bits |= 1 << i
    if not is_perfect_square(num * den):
        raise ValueError(f"{q} is not supported on {basis[1:]}")
    return bits


def _vector_value(bits: int, basis: Sequence[int]) -> int:
    out = 1
    for i, b in enumerate(basis):
        if bits >> i & 1:
            out *= b
    return out


@dataclass
class _SelmerData:
    primes: List[int]
    basis: List[int]
    kernel: List[int]

    @property
    def half(self) -> int:
        return len(self.basis)

    def pair_vector(self, pair: Tuple[Rational, Rational]) -> int:
        return _global_vector(pair[0], self.basis) | (_global_vector(pair[1], self.basis) << self.half)

    def contains(self, pair: Tuple[Rational, Rational]) -> bool:
        return _in_span(_reduce_basis(self.kernel), self.pair_vector(pair))

    def pairs(self) -> List[Tuple[int, int]]:
        mask = (1 << self.half) - 1
        out = [(_vector_value(v & mask, self.basis), _vector_value(v >> self.half, self.basis)) for v in _span(self.kernel)]
        return sorted(out, key=lambda bb: (abs(bb[0]), bb[0], abs(bb[1]), bb[1]))


def _selmer_data(c: Curve222, factor_hints: Sequence[int] = ()) -> _SelmerData:
    primes = bad_primes(c, factor_hints)
    basis = [-1] + primes
    half = len(basis)
    rows: List[int] = []
    for place in [REAL] + primes:
        k = class_bits(place)
        w = local_image(c, place)
        if len(w) != local_image_size(place):
            raise ArithmeticError(f"local image at {place} has {len(w)} elements")
        functionals = _nullspace(list(_reduce_basis(w).values()), 2 * k)
        loc = [local_class(b, place) for b in basis]
        for f in functionals:
            row = 0
            for i, cls in enumerate(loc):
                if _parity(f & cls):
                    row |= 1 << i
                if _parity(f & (cls << k)):
                    row |= 1 << (i + half)
            rows.append(row)
    data = _SelmerData(primes, basis, _nullspace(rows, 2 * half))
    for t in _local_torsion_images(c) + [(Fraction(1), Fraction(1))]:
        if not data.contains(t):
            raise ArithmeticError(f"torsion image {t} missing from the Selmer group")
    return data


def selmer_pairs(c: Curve222, factor_hints: Sequence[int] = ()) -> List[Tuple[int, int]]:
    """All squarefree (b1, b2) in the 2-Selmer group of c."""
    return _selmer_data(c, factor_hints).pairs()


# ---------------------------------------------------------------------------
# point search and rank bounds

_FILTER_MODULI = (64, 63, 65, 11, 17, 19, 23)
_SQUARES_MOD = {m: frozenset(i * i % m for i in range(m)) for m in _FILTER_MODULI}


def _maybe_square(n: int) -> bool:
    return all(n % m in _SQUARES_MOD[m] for m in _FILTER_MODULI)


def search_points(c: Curve222, height: int, limit: int = 4) -> List[CurvePoint]:
    """Non-torsion points with x = m/d^2, |m| <= height, d^2 <= height.

    Stops after ``limit`` points are found.
    """
    e1, e2, e3 = _integral_roots(c)
    lo, mid, hi = sorted((e1, e2, e3))
    found: List[CurvePoint] = []
    d = 1
    while d * d <= height and len(found) < limit:
        d2 = d * d
        # rhs >= 0 on [lo, mid] and [hi, oo)
        ranges = [(max(-height, lo * d2), min(height, mid * d2)), (max(-height, hi * d2), height)]
        for m_lo, m_hi in ranges:
            for m in range(m_lo, m_hi + 1):
                if d > 1 and math.gcd(m, d) != 1:
                    continue
                val = (m - e1 * d2) * (m - e2 * d2) * (m - e3 * d2)
                if val == 0 or not _maybe_square(val) or not is_perfect_square(val):
                    continue
                pt = CurvePoint(c, Fraction(m, d2), Fraction(math.isqrt(val), d2 * d))
                if torsion_order(pt) is None:
                    found.append(pt)
                    if len(found) >= limit:
                        return found
        d += 1
    return found


def rank_bounds(
    c: Curve222,
    search_height: int = DEFAULT_SEARCH_HEIGHT,
    witnesses: Sequence[CurvePoint] = (),
    factor_hints: Sequence[int] = (),
) -> SelmerReport:
    """2-Selmer upper bound and point-search lower bound for the rank of c."""
    data = _selmer_data(c, factor_hints)
    pairs = data.pairs()
    rank_upper = len(data.kernel) - 2
    points = []
    for w in witnesses:
        if w.curve != c or not on_curve(c, w):
            raise ValueError(f"witness {w} is not on {c}")
        if torsion_order(w) is None:
            points.append(w)
    if rank_upper > 0 and search_height > 0:
        seen = {(w.x, abs(w.y)) for w in points}
        points += [w for w in search_points(c, search_height) if (w.x, abs(w.y)) not in seen]
    rank_lower = 0
    if points:
        images = [data.pair_vector(kummer_image(t)) for t in c.two_torsion()]
        images += [data.pair_vector(kummer_image(w)) for w in points]
        rank_lower = max(1, len(_reduce_basis(images)) - 2)
    if rank_lower > rank_upper:
        raise ArithmeticError("rank lower bound exceeds the Selmer bound")
    return SelmerReport(c, data.primes, pairs, rank_upper, rank_lower, points, search_height)


def e_ab_hints(a: int, b: int) -> List[int]:
    """Integers whose primes cover the root differences of E_{a,b}."""
    return [a, b, b - a, b + a, a * a + b * b]


def scan_rank_zero(
    leg_bound: int,
    search_height: int = 0,
    on_result: Optional[Callable[[PythTriple, SelmerReport], None]] = None,
) -> List[Tuple[PythTriple, SelmerReport]]:
    """Primitive triples with both legs below the bound whose E_{a,b} has 2-Selmer rank 0.

    ``on_result`` sees every report, certified or not (e.g. to persist it).
    For a worker pool and a persistent cache see ``catheti.scancache.run_scan``.
    """
    out = []
    if leg_bound < 5:
        return out
    for t in enumerate_primitive(leg_bound):
        report = rank_bounds(curve_e_ab(t.a, t.b), search_height, factor_hints=e_ab_hints(t.a, t.b))
        if on_result is not None:
            on_result(t, report)
        if report.rank_upper == 0:
            out.append((t, report))
    return out
