"""Exact integer and rational primitives.

Python's ``int`` is the big integer and :class:`fractions.Fraction` the big
rational; both are immutable and always canonical, so nothing here wraps them.
What lives here is the number theory the curve code needs: squares, square
roots of rationals, factorization and squarefree parts.
"""

from __future__ import annotations

import math
import random
from fractions import Fraction
from typing import List, Optional, Tuple, Union

Rational = Union[int, Fraction]
Factorization = List[Tuple[int, int]]

TRIAL_BOUND = 10_000

_SMALL_PRIMES: List[int] = []


def _sieve(n: int) -> List[int]:
    flags = bytearray(b"\x01") * (n + 1)
    flags[0:2] = b"\x00\x00"
    for p in range(2, math.isqrt(n) + 1):
        if flags[p]:
            flags[p * p::p] = b"\x00" * len(range(p * p, n + 1, p))
    return [i for i, f in enumerate(flags) if f]


def small_primes() -> List[int]:
    if not _SMALL_PRIMES:
        _SMALL_PRIMES.extend(_sieve(TRIAL_BOUND))
    return _SMALL_PRIMES


def as_fraction(q: Union[Rational, str]) -> Fraction:
    return q if isinstance(q, Fraction) else Fraction(q)


def is_perfect_square(n: int) -> bool:
    if n < 0:
        return False
    r = math.isqrt(n)
    return r * r == n


def rational_sqrt(q: Rational) -> Optional[Fraction]:
    """Nonnegative square root of ``q`` if it is a rational square, else None."""
    q = as_fraction(q)
    if q < 0:
        return None
    n, d = q.numerator, q.denominator
    rn, rd = math.isqrt(n), math.isqrt(d)
    if rn * rn != n or rd * rd != d:
        return None
    return Fraction(rn, rd)


def integer_root(n: int, k: int) -> Optional[int]:
    """Exact k-th root of ``n >= 0`` or None."""
    if n < 2:
        return n
    # Newton iteration from an overestimate
    r = 1 << (n.bit_length() // k + 1)
    while True:
        s = ((k - 1) * r + n // r ** (k - 1)) // k
        if s >= r:
            break
        r = s
    for c in (r - 1, r, r + 1):
        if c >= 0 and c ** k == n:
            return c
    return None


# deterministic Miller-Rabin witnesses, valid for n < 3.3 * 10**24
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
_MR_LIMIT = 3_317_044_064_679_887_385_961_981


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in small_primes()[:60]:
        if n == p:
            return True
        if n % p == 0:
            return False
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    bases = _MR_BASES if n < _MR_LIMIT else _MR_BASES + tuple(small_primes()[13:40])
    for a in bases:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _brent(n: int, seed: int) -> int:
    """One Brent-Pollard rho run; returns a divisor of n (possibly n)."""
    rng = random.Random(seed)
    y, c, m = rng.randrange(1, n), rng.randrange(1, n), 128
    g = r = q = 1
    x = ys = y
    while g == 1:
        x = y
        for _ in range(r):
            y = (y * y + c) % n
        k = 0
        while k < r and g == 1:
            ys = y
            for _ in range(min(m, r - k)):
                y = (y * y + c) % n
                q = q * abs(x - y) % n
            g = math.gcd(q, n)
            k += m
        r *= 2
    if g == n:
        while True:
            ys = (ys * ys + c) % n
            g = math.gcd(abs(x - ys), n)
            if g > 1:
                break
    return g


def _split(n: int) -> int:
    seed = 1
    while True:
        d = _brent(n, seed)
        if 1 < d < n:
            return d
        seed += 1


def _factor_large(n: int, out: dict) -> None:
    if n == 1:
        return
    if is_prime(n):
        out[n] = out.get(n, 0) + 1
        return
    for k in (2, 3, 5, 7):
        r = integer_root(n, k)
        if r is not None:
            sub: dict = {}
            _factor_large(r, sub)
            for p, e in sub.items():
                out[p] = out.get(p, 0) + k * e
            return
    d = _split(n)
    _factor_large(d, out)
    _factor_large(n // d, out)


def factorize(n: int) -> Factorization:
    """Prime factorization of ``|n|`` as sorted ``(prime, exponent)`` pairs."""
    if n == 0:
        raise ValueError("cannot factor zero")
    n = abs(n)
    out: dict = {}
    for p in small_primes():
        if p * p > n:
            break
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out[p] = e
    if n > 1:
        if n < TRIAL_BOUND * TRIAL_BOUND:
            out[n] = out.get(n, 0) + 1
        else:
            _factor_large(n, out)
    return sorted(out.items())


def prime_divisors(n: int) -> List[int]:
    return [p for p, _ in factorize(n)]


def squarefree_part(n: int) -> int:
    """The squarefree ``d`` with ``n = d * m**2``; sign follows ``n``."""
    if n == 0:
        raise ValueError("squarefree part of zero is undefined")
    d = -1 if n < 0 else 1
    for p, e in factorize(n):
        if e % 2:
            d *= p
    return d


def rational_squarefree_part(q: Rational) -> int:
    """Squarefree integer in the same square class as the rational ``q``."""
    q = as_fraction(q)
    return squarefree_part(q.numerator * q.denominator)


def valuation(n: Rational, p: int) -> int:
    """p-adic valuation of a nonzero rational."""
    q = as_fraction(n)
    if q == 0:
        raise ValueError("valuation of zero")
    v = 0
    num, den = q.numerator, q.denominator
    while num % p == 0:
        num //= p
        v += 1
    while den % p == 0:
        den //= p
        v -= 1
    return v


def lcm(*values: int) -> int:
    out = 1
    for v in values:
        out = out * v // math.gcd(out, v)
    return out


def format_rational(q: Rational) -> str:
    q = as_fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def parse_rational(text: str) -> Fraction:
    return Fraction(text.strip())
