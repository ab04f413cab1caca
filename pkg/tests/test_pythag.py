import math
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from catheti.pythag import (
    DegenerateParameterError,
    PythTriple,
    RationalTriangle,
    UVParam,
    count_primitive,
    enumerate_primitive,
    primitive_triples_in_u_range,
    scale_to_integer,
    triple_from_uv,
    uv_from_primitive,
)


def brute_primitive(bound, convention):
    out = set()
    for a in range(1, bound):
        for b in range(a + 1, bound if convention == "legs" else bound):
            c2 = a * a + b * b
            c = math.isqrt(c2)
            if c * c != c2 or math.gcd(a, b) != 1:
                continue
            if convention == "hypotenuse" and c >= bound:
                break
            out.add((a, b, c))
    return out


@pytest.mark.parametrize("convention", ["legs", "hypotenuse"])
@pytest.mark.parametrize("bound", [5, 6, 50, 301])
def test_enumeration_matches_brute_force(bound, convention):
    got = [t.as_tuple() for t in enumerate_primitive(bound, convention)]
    assert len(got) == len(set(got))
    assert set(got) == brute_primitive(bound, convention)
    assert got == sorted(got, key=lambda t: (t[1], t[0]))


def test_enumeration_small_and_ordered():
    assert [t.as_tuple() for t in enumerate_primitive(12)] == [(3, 4, 5)]
    assert [t.as_tuple() for t in enumerate_primitive(16)][:3] == [(3, 4, 5), (5, 12, 13), (8, 15, 17)]
    assert list(enumerate_primitive(4)) == []


def test_every_emitted_triple_is_primitive():
    for t in enumerate_primitive(3000):
        assert t.a * t.a + t.b * t.b == t.c * t.c
        assert t.primitive and t.a < t.b


def test_u_ranges_partition():
    whole = primitive_triples_in_u_range(2000, 2, 80)
    parts = primitive_triples_in_u_range(2000, 2, 30) + primitive_triples_in_u_range(2000, 30, 80)
    assert sorted(whole) == sorted(parts)


def test_counts_at_ten_thousand():
    assert count_primitive(10_000) == {"legs": 1788, "hypotenuse": 1593}


@given(st.integers(1, 400), st.integers(1, 400))
def test_uv_round_trip(u, v):
    if u <= v or math.gcd(u, v) != 1 or (u + v) % 2 == 0:
        return
    p = UVParam(u, v)
    t = triple_from_uv(p)
    assert t.primitive
    q = uv_from_primitive(t)
    assert (q.u, q.v) == (u, v)


def test_signed_legs_keep_sign():
    assert UVParam(1, 2).signed_legs == (4, -3, 5)
    assert triple_from_uv(UVParam(1, 2)).as_tuple() == (4, 3, 5)
    assert UVParam(-3, 2).signed_legs == (-12, 5, 13)


@pytest.mark.parametrize("u, v", [(0, 3), (2, 0), (3, 3), (3, -3)])
def test_degenerate_uv(u, v):
    with pytest.raises(DegenerateParameterError):
        UVParam(u, v)


def test_invalid_triples_rejected():
    with pytest.raises(ValueError):
        PythTriple(3, 4, 6)
    with pytest.raises(ValueError):
        PythTriple(0, 1, 1)
    with pytest.raises(ValueError):
        RationalTriangle(1, 1, 1)


def test_scale_to_integer():
    t = RationalTriangle(Fraction(3, 2), 2, Fraction(5, 2))
    assert scale_to_integer(t).as_tuple() == (3, 4, 5)
    t = RationalTriangle(Fraction(6, 1), 8, 10)
    assert scale_to_integer(t).as_tuple() == (6, 8, 10)
    assert scale_to_integer(t, primitive=True).as_tuple() == (3, 4, 5)
    assert PythTriple.from_legs(20, 21).c == 29 and PythTriple.from_legs(2, 3) is None
