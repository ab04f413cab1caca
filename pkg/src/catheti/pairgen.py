"""Pairs of triangles with prescribed catheti ratios A/a and B/b (case Aa != Bb).

Given (a, b, c) and (A, B, C), a point of the form 2R on
E: y^2 = x (x + A^2 b^2)(x + a^2 B^2) yields s, t, r with
(as)^2 + b^2 = t^2 and (As)^2 + B^2 = r^2. The base point
Q* = (a^2 A^2, a^2 A^2 cC) reproduces the input pair and has infinite order
unless Aa = Bb.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Tuple

from .ecq import Curve222, CurvePoint, mul
from .exactmath import lcm, rational_sqrt
from .pythag import PythTriple


class SkewSimilarError(ValueError):
    """Aa = Bb: Q* is 4-torsion; use the skew-similar family instead."""


@dataclass(frozen=True)
class TriplePair:
    first: PythTriple
    second: PythTriple

    @property
    def mu(self) -> Fraction:
        return Fraction(self.second.a, self.first.a)

    @property
    def nu(self) -> Fraction:
        return Fraction(self.second.b, self.first.b)

    def has_ratios(self, mu: Fraction, nu: Fraction) -> bool:
        return self.mu == mu and self.nu == nu

    def similarity_key(self) -> Tuple[PythTriple, PythTriple]:
        return (self.first.normalized(), self.second.normalized())

    def similar_to(self, other: "TriplePair") -> bool:
        return self.similarity_key() == other.similarity_key()


@dataclass(frozen=True)
class PairCurve:
    curve: Curve222
    base: CurvePoint
    first: PythTriple
    second: PythTriple


def is_skew_similar(t1: PythTriple, t2: PythTriple) -> bool:
    return t2.a * t1.a == t2.b * t1.b


def build_pair_curve(t1: PythTriple, t2: PythTriple) -> PairCurve:
    a, b, c = t1.as_tuple()
    A, B, C = t2.as_tuple()
    if A * b == a * B:
        raise ValueError(f"{t1.as_tuple()} and {t2.as_tuple()} are similar: the curve is singular")
    curve = Curve222(0, -(A * b) ** 2, -(a * B) ** 2)
    x0 = (a * A) ** 2
    base = curve.point(x0, x0 * c * C)
    return PairCurve(curve, base, t1, t2)


def duplication_x(t1: PythTriple, t2: PythTriple) -> Fraction:
    """Closed form of x(2Q*)."""
    a, b, c = t1.as_tuple()
    A, B, C = t2.as_tuple()
    return Fraction(((a * A) ** 2 - (B * b) ** 2) ** 2, 4 * (c * C) ** 2)


def _pair_from_point(pc: PairCurve, point: CurvePoint) -> TriplePair:
    a, b, _ = pc.first.as_tuple()
    A, B, _ = pc.second.as_tuple()
    u = point.x / (a * A) ** 2
    s = rational_sqrt(u)
    t = rational_sqrt(a * a * u + b * b)
    r = rational_sqrt(A * A * u + B * B)
    if s is None or t is None or r is None or s == 0:
        raise ArithmeticError(f"point {point} does not give three rational square roots")
    sides = (a * s, Fraction(b), t, A * s, Fraction(B), r)
    m = lcm(*(q.denominator for q in sides))
    ints = [int(q * m) for q in sides]
    g = math.gcd(*ints)
    ints = [i // g for i in ints]
    pair = TriplePair(PythTriple(*ints[:3]), PythTriple(*ints[3:]))
    assert pair.has_ratios(Fraction(A, a), Fraction(B, b))
    return pair


def derive_pair(t1: PythTriple, t2: PythTriple, k: int) -> TriplePair:
    """The pair coming from 2k Q*; k = 0 returns the input pair (jointly reduced)."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    if is_skew_similar(t1, t2):
        raise SkewSimilarError(
            f"{t1.as_tuple()} and {t2.as_tuple()} are skew-similar (Aa = Bb); see catheti.skewfam"
        )
    pc = build_pair_curve(t1, t2)
    point = pc.base if k == 0 else mul(2 * k, pc.base)
    return _pair_from_point(pc, point)


def enumerate_pairs(t1: PythTriple, t2: PythTriple, count: int) -> List[TriplePair]:
    """The first ``count`` pairwise non-similar pairs from 2Q*, 4Q*, ..."""
    if count < 1:
        raise ValueError("count must be positive")
    if is_skew_similar(t1, t2):
        raise SkewSimilarError(f"{t1.as_tuple()} and {t2.as_tuple()} are skew-similar (Aa = Bb)")
    pc = build_pair_curve(t1, t2)
    seen = {TriplePair(t1, t2).similarity_key()}
    out: List[TriplePair] = []
    two_q = mul(2, pc.base)
    point = two_q
    while len(out) < count:
        pair = _pair_from_point(pc, point)
        key = pair.similarity_key()
        if key not in seen:
            seen.add(key)
            out.append(pair)
        point = point + two_q
    return out
