import math
import random
from fractions import Fraction

import pytest

from catheti.ecq import mul, on_curve, torsion_order
from catheti.pairgen import (
    SkewSimilarError,
    TriplePair,
    build_pair_curve,
    derive_pair,
    duplication_x,
    enumerate_pairs,
    is_skew_similar,
)
from catheti.pythag import PythTriple

# every triple, primitive or not, with all sides at most 200
SMALL = [
    PythTriple(a, b, math.isqrt(a * a + b * b))
    for a in range(1, 201)
    for b in range(1, 201)
    if math.isqrt(a * a + b * b) ** 2 == a * a + b * b and math.isqrt(a * a + b * b) <= 200
]


def random_pairs(n, seed):
    rng = random.Random(seed)
    out = []
    while len(out) < n:
        t1, t2 = rng.choice(SMALL), rng.choice(SMALL)
        if not is_skew_similar(t1, t2) and t2.a * t1.b != t1.a * t2.b:
            out.append((t1, t2))
    return out


def test_worked_derivation():
    t1, t2 = PythTriple(3, 4, 5), PythTriple(5, 12, 13)
    pair = derive_pair(t1, t2, 1)
    assert pair.first.as_tuple() == (2079, 2600, 3329)
    assert pair.second.as_tuple() == (3465, 7800, 8535)
    assert pair.mu == Fraction(5, 3) and pair.nu == 3
    assert enumerate_pairs(t1, t2, 1) == [pair]


def test_base_point_and_duplication_formula():
    for t1, t2 in random_pairs(100, 2):
        pc = build_pair_curve(t1, t2)
        assert on_curve(pc.curve, pc.base)
        assert torsion_order(pc.base) is None
        assert mul(2, pc.base).x == duplication_x(t1, t2)


def test_derived_pairs_keep_ratios():
    for t1, t2 in random_pairs(25, 3):
        mu, nu = Fraction(t2.a, t1.a), Fraction(t2.b, t1.b)
        pairs = enumerate_pairs(t1, t2, 2)
        keys = {TriplePair(t1, t2).similarity_key()}
        for p in pairs:
            for t in (p.first, p.second):
                assert t.a ** 2 + t.b ** 2 == t.c ** 2
            assert p.has_ratios(mu, nu)
            assert p.similarity_key() not in keys
            keys.add(p.similarity_key())


def test_k_zero_is_the_input():
    t1, t2 = PythTriple(6, 8, 10), PythTriple(5, 12, 13)
    p = derive_pair(t1, t2, 0)
    assert p.has_ratios(Fraction(5, 6), Fraction(12, 8))


def test_skew_similar_rejected():
    t1, t2 = PythTriple(3, 4, 5), PythTriple(4, 3, 5)
    assert is_skew_similar(t1, t2)
    with pytest.raises(SkewSimilarError):
        derive_pair(t1, t2, 1)
    with pytest.raises(SkewSimilarError):
        enumerate_pairs(t1, t2, 1)
    # Q* has finite order in this case
    assert torsion_order(build_pair_curve(t1, t2).base) == 4


def test_similar_pair_is_singular():
    with pytest.raises(ValueError, match="singular"):
        build_pair_curve(PythTriple(3, 4, 5), PythTriple(6, 8, 10))


def test_bad_counts():
    with pytest.raises(ValueError):
        enumerate_pairs(PythTriple(3, 4, 5), PythTriple(5, 12, 13), 0)
    with pytest.raises(ValueError):
        derive_pair(PythTriple(3, 4, 5), PythTriple(5, 12, 13), -1)


def test_distinct_k_give_distinct_normalizations():
    for t1, t2 in random_pairs(20, 4):
        keys = [derive_pair(t1, t2, k).similarity_key() for k in range(1, 5)]
        assert len(set(keys)) == 4


@pytest.mark.parametrize(
    "t1, t2, roots, base",
    [
        ((3, 4, 5), (5, 12, 13), (0, -400, -1296), (225, 14625)),
        ((3, 4, 5), (4, 3, 5), (0, -256, -81), (144, 3600)),
    ],
)
def test_pair_curve_examples(t1, t2, roots, base):
    pc = build_pair_curve(PythTriple(*t1), PythTriple(*t2))
    assert pc.curve.roots == roots
    assert (pc.base.x, pc.base.y) == base
