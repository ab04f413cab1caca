import math
import random
from fractions import Fraction

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from catheti.exactmath import (
    factorize,
    format_rational,
    integer_root,
    is_perfect_square,
    is_prime,
    lcm,
    parse_rational,
    rational_sqrt,
    rational_squarefree_part,
    squarefree_part,
    valuation,
)

nonzero = st.integers(min_value=-(10 ** 30), max_value=10 ** 30).filter(bool)


def recompose(fac):
    out = 1
    for p, e in fac:
        out *= p ** e
    return out


def test_factorize_recomposes_random_64_bit():
    rng = random.Random(20261015)
    for _ in range(10_000):
        n = rng.randrange(1, 2 ** 64)
        fac = factorize(n)
        assert recompose(fac) == n
        primes = [p for p, _ in fac]
        assert primes == sorted(set(primes))


def test_factorize_against_sympy():
    rng = random.Random(7)
    for _ in range(300):
        n = rng.randrange(2, 2 ** 72)
        assert dict(factorize(n)) == sympy.factorint(n)


@pytest.mark.parametrize(
    "n",
    [
        (2 ** 31 - 1) * (2 ** 61 - 1),
        1000003 ** 2 * 999983,
        10007 ** 5,
        1_000_000_007 * 998_244_353,
        -(2 ** 10) * 3 ** 4 * 101,
    ],
)
def test_factorize_hard_shapes(n):
    assert dict(factorize(n)) == sympy.factorint(abs(n))


def test_factorize_zero_rejected():
    with pytest.raises(ValueError):
        factorize(0)


def test_is_prime_against_sympy():
    for n in range(-5, 5000):
        assert is_prime(n) == sympy.isprime(n)
    rng = random.Random(3)
    for _ in range(500):
        n = rng.randrange(2 ** 60, 2 ** 90)
        assert is_prime(n) == sympy.isprime(n)
    # strong pseudoprimes to several small bases
    assert not is_prime(3215031751)
    assert not is_prime(3825123056546413051)


@given(nonzero)
def test_squarefree_part_property(n):
    d = squarefree_part(n)
    cof, r = divmod(n, d)
    assert r == 0 and cof > 0 and math.isqrt(cof) ** 2 == cof
    assert all(e == 1 for _, e in factorize(d))


@given(st.integers(min_value=0, max_value=10 ** 40))
def test_perfect_square_matches_rational_sqrt(n):
    assert is_perfect_square(n) == (rational_sqrt(Fraction(n)) is not None)


@given(st.fractions(min_value=0, max_value=10 ** 12))
def test_rational_sqrt_squares_back(q):
    r = rational_sqrt(q)
    if r is not None:
        assert r >= 0 and r * r == q
    assert rational_sqrt(q * q) == q


def test_rational_sqrt_examples():
    assert rational_sqrt(Fraction(4322241, 3802500)) == Fraction(2079, 1950)
    assert rational_sqrt(-4) is None
    assert rational_sqrt(Fraction(2, 9)) is None


@given(st.integers(min_value=0, max_value=10 ** 50), st.integers(min_value=2, max_value=7))
def test_integer_root(n, k):
    r = integer_root(n ** k, k)
    assert r == n
    if n > 1:
        assert integer_root(n ** k + 1, k) is None


@given(st.fractions().filter(bool), st.sampled_from([2, 3, 5, 7, 13]))
def test_valuation_multiplicative(q, p):
    assert valuation(q * p ** 3, p) == valuation(q, p) + 3
    assert valuation(q, p) == sympy.multiplicity(p, q.numerator) - sympy.multiplicity(p, q.denominator)


def test_rational_squarefree_part():
    assert rational_squarefree_part(Fraction(-12, 5)) == -15
    assert rational_squarefree_part(Fraction(9, 4)) == 1


def test_lcm_and_format():
    assert lcm(4, 6, 10) == 60
    assert format_rational(Fraction(-6, 4)) == "-3/2"
    assert format_rational(Fraction(0)) == "0"
    assert parse_rational(" 10/4 ") == Fraction(5, 2)


@given(st.fractions())
def test_format_parse_round_trip(q):
    assert parse_rational(format_rational(q)) == q
