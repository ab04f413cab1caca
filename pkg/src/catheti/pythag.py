"""Pythagorean triples, their (u, v) parametrization and enumeration."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, List, Optional, Tuple

from .exactmath import Rational, as_fraction, lcm


class DegenerateParameterError(ValueError):
    """u^2 = v^2 or uv = 0: the parametrization gives a zero leg."""


@dataclass(frozen=True, order=True)
class PythTriple:
    a: int
    b: int
    c: int

    def __post_init__(self):
        if min(self.a, self.b, self.c) <= 0:
            raise ValueError(f"triple entries must be positive: {self.as_tuple()}")
        if self.a * self.a + self.b * self.b != self.c * self.c:
            raise ValueError(f"{self.as_tuple()} is not a Pythagorean triple")

    @property
    def primitive(self) -> bool:
        return math.gcd(self.a, self.b) == 1

    def normalized(self) -> "PythTriple":
        g = math.gcd(self.a, self.b)
        return PythTriple(self.a // g, self.b // g, self.c // g)

    def swapped(self) -> "PythTriple":
        return PythTriple(self.b, self.a, self.c)

    def as_tuple(self) -> Tuple[int, int, int]:
        return (self.a, self.b, self.c)

    @classmethod
    def from_legs(cls, a: int, b: int) -> Optional["PythTriple"]:
        c2 = a * a + b * b
        c = math.isqrt(c2)
        return cls(a, b, c) if c * c == c2 else None


@dataclass(frozen=True)
class UVParam:
    u: int
    v: int

    def __post_init__(self):
        if self.u * self.v == 0 or self.u * self.u == self.v * self.v:
            raise DegenerateParameterError(f"degenerate parameters u={self.u}, v={self.v}")

    @property
    def primitive(self) -> bool:
        return math.gcd(self.u, self.v) == 1 and (self.u + self.v) % 2 == 1

    @property
    def signed_legs(self) -> Tuple[int, int, int]:
        """(2uv, u^2 - v^2, u^2 + v^2) with signs kept."""
        u, v = self.u, self.v
        return (2 * u * v, u * u - v * v, u * u + v * v)


@dataclass(frozen=True)
class RationalTriangle:
    p: Fraction
    q: Fraction
    h: Fraction

    def __init__(self, p: Rational, q: Rational, h: Rational):
        p, q, h = as_fraction(p), as_fraction(q), as_fraction(h)
        if min(p, q, h) <= 0:
            raise ValueError("rational triangle sides must be positive")
        if p * p + q * q != h * h:
            raise ValueError(f"({p}, {q}, {h}) is not a right triangle")
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "q", q)
        object.__setattr__(self, "h", h)

    def sides(self) -> Tuple[Fraction, Fraction, Fraction]:
        return (self.p, self.q, self.h)


def triple_from_uv(p: UVParam) -> PythTriple:
    a, b, c = p.signed_legs
    return PythTriple(abs(a), abs(b), c)


def uv_from_primitive(t: PythTriple) -> UVParam:
    """Inverse of triple_from_uv on primitive triples (even leg first or second)."""
    if not t.primitive:
        raise ValueError("uv recovery needs a primitive triple")
    even, odd = (t.a, t.b) if t.a % 2 == 0 else (t.b, t.a)
    # u^2 = (c + odd)/2, v^2 = (c - odd)/2
    u, v = math.isqrt((t.c + odd) // 2), math.isqrt((t.c - odd) // 2)
    assert 2 * u * v == even
    return UVParam(u, v)


def scale_to_integer(t: RationalTriangle, primitive: bool = False) -> PythTriple:
    """Clears denominators of a rational triangle; optionally divides out the gcd."""
    m = lcm(*(s.denominator for s in t.sides()))
    a, b, c = (int(s * m) for s in t.sides())
    out = PythTriple(a, b, c)
    return out.normalized() if primitive else out


def _uv_limit(leg_bound: int) -> int:
    # 2uv < N and u^2 - v^2 < N force u^2 < N(1 + sqrt 2)/2
    return math.isqrt(2 * leg_bound) + 2


def primitive_triples_in_u_range(
    leg_bound: int, u_start: int, u_stop: int, convention: str = "legs"
) -> List[PythTriple]:
    """Primitive triples (smaller leg first) from u in [u_start, u_stop).

    ``convention="legs"`` keeps both legs below the bound, ``"hypotenuse"``
    keeps c below it. Disjoint u-ranges give disjoint outputs.
    """
    out = []
    for u in range(max(u_start, 2), u_stop):
        for v in range(1 + u % 2, u, 2):
            if math.gcd(u, v) != 1:
                continue
            x, y, c = 2 * u * v, u * u - v * v, u * u + v * v
            if convention == "legs":
                if x >= leg_bound or y >= leg_bound:
                    continue
            elif convention == "hypotenuse":
                if c >= leg_bound:
                    continue
            else:
                raise ValueError(f"unknown bounding convention {convention!r}")
            out.append(PythTriple(min(x, y), max(x, y), c))
    return out


def enumerate_primitive(leg_bound: int, convention: str = "legs") -> Iterator[PythTriple]:
    """All primitive triples under the bound, ordered by larger leg then smaller leg."""
    found = primitive_triples_in_u_range(leg_bound, 2, _uv_limit(leg_bound), convention)
    yield from sorted(found, key=lambda t: (t.b, t.a))


def count_primitive(leg_bound: int) -> dict:
    """Counts under both readings of "a < b < N"."""
    return {conv: sum(1 for _ in enumerate_primitive(leg_bound, conv)) for conv in ("legs", "hypotenuse")}
