"""The skew-similar case Aa = Bb: curves E_{a,b} of positive rank.

With a = 2uv and b = u^2 - v^2, the abscissa -a^3 b gives a point on
E_{a,b} exactly when (u/v, w/v^2) lies on the quartic
C: W^2 = U^4 + 2U^3 + 2U^2 - 2U + 1, which is birational to
E': Y^2 = (X - 24)(X - 6)(X + 30). Multiples of the generator (42, -216)
of E' therefore produce an infinite family of triples.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import List, Sequence, Tuple

from .ecq import Curve222, CurvePoint, curve_e_ab, iso_quadruple, mul, torsion_order
from .exactmath import Rational, as_fraction
from .pythag import DegenerateParameterError, PythTriple, UVParam, triple_from_uv

E_PRIME = Curve222(24, 6, -30)
GENERATOR = E_PRIME.point(42, -216)

assert torsion_order(GENERATOR) is None


class PoleError(ValueError):
    """phi_inv is undefined at X = -3."""


class InvariantViolation(AssertionError):
    pass


@dataclass(frozen=True)
class FamilyMember:
    n: int
    point: CurvePoint
    U: Fraction
    W: Fraction
    u: int
    v: int
    w: int
    triple: PythTriple
    witness: CurvePoint

    @property
    def signed_b(self) -> int:
        return self.u * self.u - self.v * self.v


def quartic_value(U: Rational) -> Fraction:
    U = as_fraction(U)
    return U ** 4 + 2 * U ** 3 + 2 * U ** 2 - 2 * U + 1


def quartic_form(u: int, v: int) -> int:
    """v^4 times the quartic at u/v."""
    return u ** 4 + 2 * u ** 3 * v + 2 * u * u * v * v - 2 * u * v ** 3 + v ** 4


def phi(U: Rational, W: Rational) -> CurvePoint:
    U, W = as_fraction(U), as_fraction(W)
    if W * W != quartic_value(U):
        raise ValueError(f"({U}, {W}) is not on the quartic")
    X = 6 * (3 * U * U + 3 * U + 1 - 3 * W)
    Y = 54 * (2 * U ** 3 + 3 * U * U + 2 * U - 1 - (1 + 2 * U) * W)
    return E_PRIME.point(X, Y)


def phi_inv(Q: CurvePoint) -> Tuple[Fraction, Fraction]:
    if Q.is_infinity:
        raise PoleError("phi_inv is undefined at the point at infinity")
    X, Y = Q.x, Q.y
    if X == -3:
        raise PoleError("phi_inv has a pole at X = -3")
    U = (72 + Y - 3 * X) / (6 * (X + 3))
    W = (Y * Y + 162 * Y + 6588 - 2 * X ** 3 - 9 * X * X) / (36 * (X + 3) ** 2)
    return U, W


@lru_cache(maxsize=None)
def generator_multiple(n: int) -> CurvePoint:
    if n <= 1:
        return mul(n, GENERATOR)
    return generator_multiple(n - 1) + GENERATOR


def witness_point(u: int, v: int) -> CurvePoint:
    """The point with abscissa -(2uv)^3 (u^2 - v^2) on E_{|2uv|, |u^2-v^2|}."""
    a, b = 2 * u * v, u * u - v * v
    curve = curve_e_ab(abs(a), abs(b))
    x = -(a ** 3) * b
    pt = curve.lift_x(x)
    if pt is None:
        raise InvariantViolation(f"f(-a^3 b) is not a square for u={u}, v={v}")
    return pt


def family_member(n: int) -> FamilyMember:
    if n == 1:
        raise DegenerateParameterError("n = 1 gives U = -1, i.e. u^2 = v^2")
    if n < 1:
        raise ValueError("n must be a positive integer")
    point = generator_multiple(n)
    U, W = phi_inv(point)
    u, v = U.numerator, U.denominator
    w = W * v * v
    if w.denominator != 1 or math.gcd(u * w.numerator, v) != 1:
        raise InvariantViolation(f"W = {W} is not w/v^2 in lowest terms")
    w = w.numerator
    triple = triple_from_uv(UVParam(u, v))
    witness = witness_point(u, v)
    if torsion_order(witness) is not None:
        raise InvariantViolation(f"witness for n={n} is torsion")
    return FamilyMember(n, point, U, W, u, v, w, triple, witness)


def crucial_identity_check(u: int, v: int) -> bool:
    if u * v == 0 or u * u == v * v:
        raise DegenerateParameterError(f"degenerate u={u}, v={v}")
    a, b = 2 * u * v, u * u - v * v
    x = -(a ** 3) * b
    lhs = x * (x + a ** 4) * (x + b ** 4)
    rhs = (a ** 3 * b * (b - a)) ** 2 * quartic_form(u, v)
    return lhs == rhs


def distinctness_guard(members: Sequence[FamilyMember]) -> List[Tuple[int, int]]:
    """Index pairs whose curves E_{a,b} are isomorphic."""
    clashes = []
    for i in range(len(members)):
        for j in range(i + 1, len(members)):
            ti, tj = members[i].triple, members[j].triple
            if iso_quadruple(ti.a, ti.b, tj.a, tj.b):
                clashes.append((members[i].n, members[j].n))
    return clashes
