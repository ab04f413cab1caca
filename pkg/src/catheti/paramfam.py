"""General ratios: the (r1, r2) family, the surface H and dense positive-rank nu.

Everything is normalized to A/a = 1. Then:

* r1r2_from_uvw solves a^2 + r1^2 b^2 = r2^2 c^2 for the triple of (u, v);
* H: nu_bar x y S^2 = (x^2 - 1)(y^2 - 1) carries the rational curve L and,
  fibred over x = f(t), the elliptic curve
  Y^2 = X (X - nu_bar (f^3 - f))(X + nu_bar (f^3 - f));
* nu(u) = 2t(t^2-1)u / (t^2(t^2-1) - u^2) gives E_nu: y^2 = x(x+1)(x+nu^2)
  a non-torsion point with x = t^2 - 1, for every rational u in (0, u0).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Tuple

from .ecq import Curve222, CurvePoint, mul, torsion_order
from .exactmath import Rational, as_fraction
from .pythag import RationalTriangle


class PositivityError(ValueError):
    pass


class SingularFiberError(ValueError):
    pass


@dataclass(frozen=True)
class RatioTriple:
    r1: Fraction
    r2: Fraction
    u: Fraction
    v: Fraction
    w: Fraction

    def legs(self) -> Tuple[Fraction, Fraction, Fraction]:
        u, v = self.u, self.v
        return (2 * u * v, u * u - v * v, u * u + v * v)

    def quadratic_residual(self) -> Fraction:
        """(u^2-v^2)^2 r1^2 - (u^2+v^2)^2 r2^2 + (2uv)^2; zero on the family."""
        a, b, c = self.legs()
        return b * b * self.r1 ** 2 - c * c * self.r2 ** 2 + a * a


@dataclass(frozen=True)
class HPoint:
    nu_bar: Fraction
    x: Fraction
    y: Fraction
    S: Fraction

    def __post_init__(self):
        if not on_h(self.nu_bar, self.x, self.y, self.S):
            raise ValueError(f"({self.x}, {self.y}, {self.S}) is not on H for nu_bar={self.nu_bar}")


@dataclass(frozen=True)
class HPair:
    first: RationalTriangle
    second: RationalTriangle
    s: Fraction
    nu: Fraction
    sign_flips: Tuple[str, ...]


@dataclass(frozen=True)
class DensitySample:
    t: Fraction
    u: Fraction
    nu: Fraction
    point: CurvePoint


def r1r2_bounds(u: Rational, v: Rational) -> Fraction:
    """Upper end of the admissible w interval, 2uv / (u^4 - v^4)."""
    u, v = as_fraction(u), as_fraction(v)
    return 2 * u * v / (u ** 4 - v ** 4)


def r1r2_from_uvw(u: Rational, v: Rational, w: Rational) -> RatioTriple:
    u, v, w = as_fraction(u), as_fraction(v), as_fraction(w)
    if not (u > v >= 1):
        raise ValueError("need u > v >= 1")
    if not (0 < w < r1r2_bounds(u, v)):
        raise PositivityError(f"w={w} outside (0, {r1r2_bounds(u, v)}): ratios would not be positive")
    d4 = u ** 4 - v ** 4
    r1 = (d4 * w + 2 * u * v) * (-d4 * w + 2 * u * v) / (2 * (u * u - v * v) ** 2 * (u * u + v * v) * w)
    r2 = (d4 * d4 * w * w + 4 * u * u * v * v) / (2 * (u * u - v * v) * (u * u + v * v) ** 2 * w)
    out = RatioTriple(r1, r2, u, v, w)
    assert out.quadratic_residual() == 0
    return out


def r1r2_unchecked(u: Rational, v: Rational, w: Rational) -> Tuple[Fraction, Fraction]:
    """The closed forms without the positivity gate (for studying the boundary)."""
    u, v, w = as_fraction(u), as_fraction(v), as_fraction(w)
    d4 = u ** 4 - v ** 4
    r1 = (d4 * w + 2 * u * v) * (-d4 * w + 2 * u * v) / (2 * (u * u - v * v) ** 2 * (u * u + v * v) * w)
    r2 = (d4 * d4 * w * w + 4 * u * u * v * v) / (2 * (u * u - v * v) * (u * u + v * v) ** 2 * w)
    return r1, r2


def on_h(nu_bar: Rational, x: Rational, y: Rational, S: Rational) -> bool:
    return nu_bar * x * y * S * S == (x * x - 1) * (y * y - 1)


def f_of_t(nu_bar: Fraction, t: Fraction) -> Fraction:
    return (nu_bar * t * t - 8) / (3 * nu_bar * t * t)


def curve_L_point(nu_bar: Rational, t: Rational) -> HPoint:
    nu_bar, t = as_fraction(nu_bar), as_fraction(t)
    if nu_bar == 0 or t == 0:
        raise ValueError("nu_bar and t must be nonzero")
    q = nu_bar * t * t
    return HPoint(nu_bar, f_of_t(nu_bar, t), (2 - q) / 6, -2 * (q + 4) / (3 * t * nu_bar))


def fibration_curve(nu_bar: Rational, t: Rational) -> Curve222:
    nu_bar, t = as_fraction(nu_bar), as_fraction(t)
    f = f_of_t(nu_bar, t)
    k = nu_bar * (f ** 3 - f)
    if k == 0:
        raise SingularFiberError(f"f(t) = {f} gives a singular fiber")
    return Curve222(0, k, -k)


def psi(h: HPoint) -> CurvePoint:
    """(y, S) on the fiber x = f(t) of H to (X, Y) on the Weierstrass model."""
    nb, f = h.nu_bar, h.x
    k = nb * (f ** 3 - f)
    if k == 0:
        raise SingularFiberError(f"x = {f} gives a singular fiber")
    curve = Curve222(0, k, -k)
    X = nb * f * (f * f - 1) * h.y
    Y = h.S * nb * nb * f * f * (f * f - 1) * h.y
    return curve.point(X, Y)


def psi_inverse(nu_bar: Rational, x: Rational, pt: CurvePoint) -> HPoint:
    nu_bar, x = as_fraction(nu_bar), as_fraction(x)
    if pt.is_infinity or pt.x == 0:
        raise ValueError("point has no preimage with y != 0")
    y = pt.x / (nu_bar * x * (x * x - 1))
    S = pt.y / (nu_bar * nu_bar * x * x * (x * x - 1) * y)
    return HPoint(nu_bar, x, y, S)


def fibration_point(nu_bar: Rational, t: Rational) -> CurvePoint:
    """The point coming from L, by its closed form."""
    nu_bar, t = as_fraction(nu_bar), as_fraction(t)
    curve = fibration_curve(nu_bar, t)
    q = nu_bar * t * t
    X = 4 * (q - 8) * (q - 2) ** 2 * (q + 4) / (81 * nu_bar ** 2 * t ** 6)
    Y = -8 * (q - 8) ** 2 * (q - 2) ** 2 * (q + 4) ** 2 / (729 * nu_bar ** 3 * t ** 9)
    return curve.point(X, Y)


def h_points_from_multiples(nu_bar: Rational, t: Rational, count: int) -> List[HPoint]:
    """Pull back P, 2P, ..., count*P through psi to new points of H on x = f(t)."""
    nu_bar, t = as_fraction(nu_bar), as_fraction(t)
    P = fibration_point(nu_bar, t)
    x = f_of_t(nu_bar, t)
    out = []
    for m in range(1, count + 1):
        Q = mul(m, P)
        if Q.is_infinity or Q.x == 0:
            continue
        out.append(psi_inverse(nu_bar, x, Q))
    return out


def pair_from_H(nu_bar: Rational, h: HPoint) -> HPair:
    """Two rational right triangles with equal first legs and B/b = nu_bar s^2."""
    nu_bar = as_fraction(nu_bar)
    x, y = h.x, h.y
    if x in (0, 1, -1):
        raise ValueError(f"x = {x} makes a leg vanish")
    if y in (0, 1, -1):
        raise ValueError(f"y = {y} makes a leg vanish")
    a, b, c = 2 * x, x * x - 1, x * x + 1
    A, B, C = 2 * x, (y * y - 1) * x / y, (y * y + 1) * x / y
    s = h.S * x / (x * x - 1)
    if B / b != nu_bar * s * s:
        raise ArithmeticError("ratio identity failed")
    flips = tuple(name for name, val in zip("abcABC", (a, b, c, A, B, C)) if val < 0)
    first = RationalTriangle(abs(a), abs(b), abs(c))
    second = RationalTriangle(abs(A), abs(B), abs(C))
    return HPair(first, second, abs(s), nu_bar * s * s, flips)


def nu_of_u(t: Fraction, u: Fraction) -> Fraction:
    k = t * t * (t * t - 1)
    return 2 * t * (t * t - 1) * u / (k - u * u)


def e_nu(nu: Rational) -> Curve222:
    nu = as_fraction(nu)
    return Curve222(0, -1, -nu * nu)


def nu_from_tu(t: Rational, u: Rational) -> DensitySample:
    t, u = as_fraction(t), as_fraction(u)
    if t <= 1:
        raise ValueError("need t > 1")
    k = t * t * (t * t - 1)
    if not (0 < u and u * u < k):
        raise ValueError(f"u={u} outside (0, sqrt({k}))")
    nu = nu_of_u(t, u)
    y = t * (t * t - 1) * (k + u * u) / (k - u * u)
    point = e_nu(nu).point(t * t - 1, y)
    if torsion_order(point) is not None:
        raise ArithmeticError(f"point {point} on E_nu is torsion")
    return DensitySample(t, u, nu, point)


def find_nu_in_interval(lo: Rational, hi: Rational, t: Rational = 2) -> DensitySample:
    """A nu in (lo, hi) with E_nu of positive rank, by bisection on u."""
    lo, hi, t = as_fraction(lo), as_fraction(hi), as_fraction(t)
    if not (0 < lo < hi):
        raise ValueError("need 0 < lo < hi")
    if t <= 1:
        raise ValueError("need t > 1")
    k = t * t * (t * t - 1)
    left, right = Fraction(0), Fraction(1)
    while right * right < k:
        right *= 2
    # nu increases on (0, u0); beyond u0 treat nu as +infinity
    while True:
        mid = (left + right) / 2
        nu = nu_of_u(t, mid) if mid * mid < k else None
        if nu is not None and lo < nu < hi:
            return nu_from_tu(t, mid)
        if nu is None or nu >= hi:
            right = mid
        else:
            left = mid
