import random
from fractions import Fraction

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from catheti.ecq import (
    Curve222,
    NotOnCurveError,
    add,
    curve_e_ab,
    discriminant,
    double,
    is_torsion,
    iso_quadruple,
    isomorphic,
    j_invariant,
    mul,
    neg,
    on_curve,
    torsion_order,
)
from catheti.exactmath import rational_sqrt
from catheti.pairgen import build_pair_curve
from catheti.pythag import PythTriple

E_PRIME = Curve222(24, 6, -30)
P = E_PRIME.point(42, -216)
PAIR = build_pair_curve(PythTriple(3, 4, 5), PythTriple(5, 12, 13))


def c4_c6(c: Curve222):
    # long Weierstrass with a1 = a3 = 0
    a2, a4, a6 = c.coefficients()
    b2, b4, b6 = 4 * a2, 2 * a4, 4 * a6
    return b2 * b2 - 24 * b4, -(b2 ** 3) + 36 * b2 * b4 - 216 * b6


def twist_oracle(c1: Curve222, c2: Curve222) -> bool:
    """Equal j, then the twist class (c6'/c6)/(c4'/c4) must be a square."""
    if j_invariant(c1) != j_invariant(c2):
        return False
    c4a, c6a = c4_c6(c1)
    c4b, c6b = c4_c6(c2)
    assert c4a and c6a, "j = 0 or 1728 does not occur for these curves"
    return rational_sqrt((c6b / c6a) / (c4b / c4a)) is not None


def random_points(base, torsion, rng, count, span=5):
    pts = []
    for _ in range(count):
        m = rng.randint(-span, span)
        t = rng.choice(torsion)
        pts.append(add(mul(m, base), t))
    return pts


@pytest.mark.parametrize("base", [P, PAIR.base], ids=["E_prime", "pair_curve"])
def test_group_law_axioms(base):
    rng = random.Random(11)
    c = base.curve
    torsion = [c.infinity(), *c.two_torsion()]
    pts = random_points(base, torsion, rng, 60)
    pairs = 0
    for p in pts:
        assert on_curve(c, p)
        assert add(p, neg(p)).is_infinity
        assert add(p, c.infinity()) == p
    for i in range(len(pts)):
        for j in range(i, len(pts)):
            if pairs >= 1000:
                break
            p, q = pts[i], pts[j]
            s = add(p, q)
            assert on_curve(c, s)
            assert s == add(q, p)
            pairs += 1
    for _ in range(60):
        p, q, r = rng.sample(pts, 3)
        assert add(add(p, q), r) == add(p, add(q, r))
    for m in range(-4, 5):
        for n in range(-4, 5):
            assert mul(m + n, base) == add(mul(m, base), mul(n, base))


def test_known_multiples():
    assert mul(2, P) == E_PRIME.point(Fraction(105, 4), Fraction(405, 8))
    assert mul(3, P) == E_PRIME.point(Fraction(10698, 49), Fraction(1097928, 343))
    assert 3 * P == P + P + P and double(P) == 2 * P
    assert mul(-2, P) == neg(mul(2, P))
    assert mul(0, P).is_infinity


def test_torsion_orders():
    for t in E_PRIME.two_torsion():
        assert torsion_order(t) == 2
    assert torsion_order(E_PRIME.infinity()) == 1
    assert torsion_order(P) is None and not is_torsion(P)
    # y^2 = x(x+1)(x+4): (2, 6) doubles to (0, 0)
    c = Curve222(0, -1, -4)
    assert torsion_order(c.point(2, 6)) == 4
    assert torsion_order(c.point(-2, 2)) == 4
    c = Curve222(0, -32, -5)
    assert torsion_order(c.point(4, 36)) == 3
    assert torsion_order(c.point(-20, 60)) == 6


def test_point_validation_and_mismatch():
    with pytest.raises(NotOnCurveError):
        E_PRIME.point(0, 1)
    with pytest.raises(ValueError):
        Curve222(1, 1, 2)
    with pytest.raises(ValueError):
        add(P, PAIR.base)


def test_integral_model_scaling():
    c = Curve222(Fraction(1, 2), Fraction(-1, 3), 0)
    m = c.integral_model()
    assert m.is_integral() and m.roots == (18, -12, 0)
    assert isomorphic(c, m)
    assert j_invariant(c) == j_invariant(m)


def test_j_invariant_values():
    # y^2 = x^3 - x has j = 1728; y^2 = x^3 + 1 = (x+1)(x^2-x+1) is not split, skip
    assert j_invariant(Curve222(0, 1, -1)) == 1728
    assert discriminant(Curve222(0, 1, -1)) == 64
    a, b = 3, 4
    j = j_invariant(curve_e_ab(a, b))
    # independent: j = 256 (l^2 - l + 1)^3 / (l^2 (l - 1)^2) with l = cross ratio
    lam = Fraction(b ** 4, a ** 4)
    assert j == 256 * (lam * lam - lam + 1) ** 3 / (lam * lam * (lam - 1) ** 2)


@pytest.mark.parametrize(
    "q, expected",
    [((3, 4, 3, 4), True), ((3, 4, 4, 3), True), ((3, 4, 5, 12), False), ((1, 2, 2, 4), True), ((1, 2, 4, 2), True), ((1, 2, 3, 5), False)],
)
def test_iso_quadruple_examples(q, expected):
    assert iso_quadruple(*q) is expected


def test_iso_quadruple_agrees_with_twist_oracle():
    rng = random.Random(500)
    seen = 0
    while seen < 500:
        a, b, A, B = (rng.randint(1, 50) for _ in range(4))
        if a == b or A == B:
            continue
        if seen % 5 == 0:
            k = rng.randint(1, 3)
            A, B = (k * b, k * a) if rng.random() < 0.5 else (k * a, k * b)
        verdict = iso_quadruple(a, b, A, B)
        assert verdict == twist_oracle(curve_e_ab(a, b), curve_e_ab(A, B))
        assert verdict == isomorphic(curve_e_ab(a, b), curve_e_ab(A, B))
        seen += 1


def test_iso_quadruple_rejects_bad_input():
    with pytest.raises(ValueError):
        iso_quadruple(0, 1, 2, 3)
    with pytest.raises(ValueError):
        iso_quadruple(2, 2, 3, 4)


@given(st.integers(-30, 30), st.integers(-30, 30), st.integers(-30, 30))
def test_isomorphic_is_reflexive_and_detects_twists(e1, e2, e3):
    if len({e1, e2, e3}) < 3:
        return
    c = Curve222(e1, e2, e3)
    # the twist oracle needs j not in {0, 1728}
    assume(all(c4_c6(c)))
    assert isomorphic(c, c)
    assert isomorphic(c, c.scaled(4))
    assert isomorphic(c, Curve222(e3 + 5, e1 + 5, e2 + 5))
    assert not isomorphic(c, c.scaled(-1)) or twist_oracle(c, c.scaled(-1))
    assert isomorphic(c, c.scaled(2)) == twist_oracle(c, c.scaled(2))


def test_e_ab_has_full_eight_torsion():
    # x = a^2 b^2 has x - e_i = a^2 b^2, a^2 c^2, b^2 c^2, so it halves
    from catheti.pythag import enumerate_primitive

    assert torsion_order(curve_e_ab(3, 4).point(864, 30240)) == 8
    for t in enumerate_primitive(300):
        a, b, c = t.as_tuple()
        x = a * a * b * b + a * b * a * c + a * b * b * c + a * c * b * c
        pt = curve_e_ab(a, b).lift_x(x)
        assert pt is not None and torsion_order(pt) == 8
