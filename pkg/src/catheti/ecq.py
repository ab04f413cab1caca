"""Elliptic curves y^2 = (x - e1)(x - e2)(x - e3) over Q with exact arithmetic.

Every curve in this package has three rational 2-torsion points, so curves are
stored by their roots. Points are immutable; ``None`` coordinates mean the
point at infinity.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional, Tuple

from .exactmath import Rational, as_fraction, lcm, rational_sqrt

# Z/2 x Z/2n with n <= 4 bounds every torsion order by 8
MAZUR_MULTIPLE_BOUND = 16


class CurveMismatchError(ValueError):
    pass


class NotOnCurveError(ValueError):
    pass


@dataclass(frozen=True)
class Curve222:
    e1: Fraction
    e2: Fraction
    e3: Fraction
    scale: int = field(init=False, repr=False, compare=False)

    def __init__(self, e1: Rational, e2: Rational, e3: Rational):
        roots = tuple(as_fraction(e) for e in (e1, e2, e3))
        if len(set(roots)) < 3:
            raise ValueError(f"singular curve: repeated root in {roots}")
        object.__setattr__(self, "e1", roots[0])
        object.__setattr__(self, "e2", roots[1])
        object.__setattr__(self, "e3", roots[2])
        # x -> scale^2 x, y -> scale^3 y gives an integral model
        object.__setattr__(self, "scale", lcm(*(e.denominator for e in roots)))

    @property
    def roots(self) -> Tuple[Fraction, Fraction, Fraction]:
        return (self.e1, self.e2, self.e3)

    def rhs(self, x: Rational) -> Fraction:
        x = as_fraction(x)
        return (x - self.e1) * (x - self.e2) * (x - self.e3)

    def coefficients(self) -> Tuple[Fraction, Fraction, Fraction]:
        """(a2, a4, a6) of y^2 = x^3 + a2 x^2 + a4 x + a6."""
        e1, e2, e3 = self.roots
        return (-(e1 + e2 + e3), e1 * e2 + e1 * e3 + e2 * e3, -e1 * e2 * e3)

    def is_integral(self) -> bool:
        return self.scale == 1

    def integral_model(self) -> "Curve222":
        u2 = self.scale ** 2
        return Curve222(*(e * u2 for e in self.roots))

    def scaled(self, lam: Rational) -> "Curve222":
        """The curve with roots lam * e_i (a quadratic twist by lam)."""
        lam = as_fraction(lam)
        return Curve222(*(lam * e for e in self.roots))

    def point(self, x: Rational, y: Rational) -> "CurvePoint":
        p = CurvePoint(self, as_fraction(x), as_fraction(y))
        if not on_curve(self, p):
            raise NotOnCurveError(f"({x}, {y}) is not on {self}")
        return p

    def infinity(self) -> "CurvePoint":
        return CurvePoint(self, None, None)

    def two_torsion(self) -> Tuple["CurvePoint", "CurvePoint", "CurvePoint"]:
        return tuple(CurvePoint(self, e, Fraction(0)) for e in self.roots)

    def lift_x(self, x: Rational) -> Optional["CurvePoint"]:
        """Point with abscissa x and nonnegative ordinate, if rational."""
        y = rational_sqrt(self.rhs(x))
        return None if y is None else CurvePoint(self, as_fraction(x), y)

    def __str__(self) -> str:
        return "y^2 = " + "".join(f"(x - {e})" if e >= 0 else f"(x + {-e})" for e in self.roots)


@dataclass(frozen=True)
class CurvePoint:
    curve: Curve222
    x: Optional[Fraction]
    y: Optional[Fraction]

    @property
    def is_infinity(self) -> bool:
        return self.x is None

    def __add__(self, other: "CurvePoint") -> "CurvePoint":
        return add(self, other)

    def __neg__(self) -> "CurvePoint":
        return neg(self)

    def __sub__(self, other: "CurvePoint") -> "CurvePoint":
        return add(self, neg(other))

    def __rmul__(self, n: int) -> "CurvePoint":
        return mul(n, self)

    def __str__(self) -> str:
        if self.is_infinity:
            return "O"
        return f"({self.x}, {self.y})"


def on_curve(c: Curve222, p: CurvePoint) -> bool:
    if p.is_infinity:
        return True
    return p.y * p.y == c.rhs(p.x)


def _check_same(p: CurvePoint, q: CurvePoint) -> None:
    if p.curve != q.curve:
        raise CurveMismatchError("points lie on different curves")


def neg(p: CurvePoint) -> CurvePoint:
    if p.is_infinity:
        return p
    return CurvePoint(p.curve, p.x, -p.y)


def add(p: CurvePoint, q: CurvePoint) -> CurvePoint:
    _check_same(p, q)
    if p.is_infinity:
        return q
    if q.is_infinity:
        return p
    a2, a4, _ = p.curve.coefficients()
    if p.x == q.x:
        if p.y != q.y or p.y == 0:
            return p.curve.infinity()
        lam = (3 * p.x * p.x + 2 * a2 * p.x + a4) / (2 * p.y)
    else:
        lam = (q.y - p.y) / (q.x - p.x)
    x3 = lam * lam - a2 - p.x - q.x
    y3 = lam * (p.x - x3) - p.y
    return CurvePoint(p.curve, x3, y3)


def double(p: CurvePoint) -> CurvePoint:
    return add(p, p)


def mul(n: int, p: CurvePoint) -> CurvePoint:
    if n < 0:
        return mul(-n, neg(p))
    result = p.curve.infinity()
    addend = p
    while n:
        if n & 1:
            result = add(result, addend)
        n >>= 1
        if n:
            addend = add(addend, addend)
    return result


def multiples(p: CurvePoint, count: int) -> Iterable[CurvePoint]:
    """Yields p, 2p, ..., count*p by repeated addition."""
    q = p
    for _ in range(count):
        yield q
        q = add(q, p)


def _integral_after_scaling(p: CurvePoint) -> bool:
    s = p.curve.scale
    return (p.x * s * s).denominator == 1 and (p.y * s ** 3).denominator == 1


def torsion_order(p: CurvePoint) -> Optional[int]:
    """Exact order of a torsion point, or None for a point of infinite order.

    Torsion here is Z/2 x Z/2n with n <= 4, so checking multiples up to
    ``MAZUR_MULTIPLE_BOUND`` decides the question. On the integral model
    torsion points have integral coordinates (Nagell-Lutz), so the first
    non-integral multiple already certifies infinite order.
    """
    if p.is_infinity:
        return 1
    for m, q in enumerate(multiples(p, MAZUR_MULTIPLE_BOUND), start=1):
        if q.is_infinity:
            return m
        if not _integral_after_scaling(q):
            return None
    return None


def is_torsion(p: CurvePoint) -> bool:
    return torsion_order(p) is not None


def j_invariant(c: Curve222) -> Fraction:
    a2, a4, a6 = c.coefficients()
    b2, b4, b6 = 4 * a2, 2 * a4, 4 * a6
    b8 = 4 * a2 * a6 - a4 * a4
    c4 = b2 * b2 - 24 * b4
    disc = -b2 * b2 * b8 - 8 * b4 ** 3 - 27 * b6 * b6 + 9 * b2 * b4 * b6
    return c4 ** 3 / disc


def discriminant(c: Curve222) -> Fraction:
    e1, e2, e3 = c.roots
    return 16 * ((e1 - e2) * (e1 - e3) * (e2 - e3)) ** 2


def isomorphic(c1: Curve222, c2: Curve222) -> bool:
    """Q-isomorphism test: some x -> p^2 x + q carries the roots of c1 onto c2."""
    r1 = c1.roots
    for perm in itertools.permutations(c2.roots):
        lam = (perm[1] - perm[0]) / (r1[1] - r1[0])
        if perm[2] - perm[0] != lam * (r1[2] - r1[0]):
            continue
        if rational_sqrt(lam) is not None:
            return True
    return False


def curve_e_ab(a: Rational, b: Rational) -> Curve222:
    """E_{a,b}: y^2 = x (x + a^4)(x + b^4)."""
    a, b = as_fraction(a), as_fraction(b)
    return Curve222(0, -a ** 4, -b ** 4)


def iso_quadruple(a: int, b: int, A: int, B: int) -> bool:
    """Whether E_{a,b} and E_{A,B} are isomorphic, for positive a, b, A, B."""
    if min(a, b, A, B) <= 0:
        raise ValueError("iso_quadruple needs positive entries")
    if a == b or A == B:
        raise ValueError("E_{a,b} is singular when a == b")
    verdict = (A * b - a * B) * (a * A - b * B) == 0
    if __debug__:
        if verdict != isomorphic(curve_e_ab(a, b), curve_e_ab(A, B)):
            raise AssertionError(f"isomorphism criterion disagrees with root matching at {(a, b, A, B)}")
    return verdict
