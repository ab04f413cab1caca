"""Exact JSON encodings of the package's records.

Integers stay JSON integers; rationals become "num/den" strings. Every
``*_to_dict`` has a ``*_from_dict`` inverse.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Optional

from .descent import SelmerReport
from .ecq import Curve222, CurvePoint
from .exactmath import format_rational, parse_rational
from .pairgen import TriplePair
from .paramfam import DensitySample, HPair, RatioTriple
from .pythag import PythTriple, RationalTriangle
from .skewfam import FamilyMember

rat = format_rational


def unrat(s) -> Fraction:
    return parse_rational(str(s))


def curve_to_dict(c: Curve222) -> dict:
    return {"roots": [rat(e) for e in c.roots]}


def curve_from_dict(d: dict) -> Curve222:
    return Curve222(*(unrat(e) for e in d["roots"]))


def point_to_dict(p: CurvePoint) -> Optional[dict]:
    return None if p.is_infinity else {"x": rat(p.x), "y": rat(p.y)}


def point_from_dict(d: Optional[dict], c: Curve222) -> CurvePoint:
    return c.infinity() if d is None else c.point(unrat(d["x"]), unrat(d["y"]))


def triple_to_list(t: PythTriple) -> list:
    return list(t.as_tuple())


def pair_to_dict(p: TriplePair) -> dict:
    return {
        "first": triple_to_list(p.first),
        "second": triple_to_list(p.second),
        "mu": rat(p.mu),
        "nu": rat(p.nu),
    }


def pair_from_dict(d: dict) -> TriplePair:
    pair = TriplePair(PythTriple(*d["first"]), PythTriple(*d["second"]))
    if rat(pair.mu) != d["mu"] or rat(pair.nu) != d["nu"]:
        raise ValueError("stored ratios do not match the triples")
    return pair


def member_to_dict(m: FamilyMember) -> dict:
    return {
        "n": m.n,
        "point": point_to_dict(m.point),
        "U": rat(m.U),
        "W": rat(m.W),
        "u": m.u,
        "v": m.v,
        "w": m.w,
        "triple": triple_to_list(m.triple),
        "witness": point_to_dict(m.witness),
        "witness_curve": curve_to_dict(m.witness.curve),
    }


def member_from_dict(d: dict) -> FamilyMember:
    from .skewfam import E_PRIME

    wc = curve_from_dict(d["witness_curve"])
    return FamilyMember(
        d["n"],
        point_from_dict(d["point"], E_PRIME),
        unrat(d["U"]),
        unrat(d["W"]),
        d["u"],
        d["v"],
        d["w"],
        PythTriple(*d["triple"]),
        point_from_dict(d["witness"], wc),
    )


def report_to_dict(r: SelmerReport) -> dict:
    return {
        "curve": curve_to_dict(r.curve),
        "bad_primes": list(r.bad_primes),
        "accepted_pairs": [list(p) for p in r.accepted_pairs],
        "rank_upper": r.rank_upper,
        "rank_lower": r.rank_lower,
        "witnesses": [point_to_dict(w) for w in r.witnesses],
        "search_height": r.search_height,
    }


def report_from_dict(d: dict) -> SelmerReport:
    c = curve_from_dict(d["curve"])
    return SelmerReport(
        c,
        list(d["bad_primes"]),
        [tuple(p) for p in d["accepted_pairs"]],
        d["rank_upper"],
        d["rank_lower"],
        [point_from_dict(w, c) for w in d["witnesses"]],
        d["search_height"],
    )


def ratio_to_dict(r: RatioTriple) -> dict:
    return {k: rat(getattr(r, k)) for k in ("r1", "r2", "u", "v", "w")}


def ratio_from_dict(d: dict) -> RatioTriple:
    return RatioTriple(*(unrat(d[k]) for k in ("r1", "r2", "u", "v", "w")))


def triangle_to_list(t: RationalTriangle) -> list:
    return [rat(s) for s in t.sides()]


def hpair_to_dict(h: HPair) -> dict:
    return {
        "first": triangle_to_list(h.first),
        "second": triangle_to_list(h.second),
        "s": rat(h.s),
        "nu": rat(h.nu),
        "sign_flips": list(h.sign_flips),
    }


def hpair_from_dict(d: dict) -> HPair:
    return HPair(
        RationalTriangle(*(unrat(s) for s in d["first"])),
        RationalTriangle(*(unrat(s) for s in d["second"])),
        unrat(d["s"]),
        unrat(d["nu"]),
        tuple(d["sign_flips"]),
    )


def sample_to_dict(s: DensitySample) -> dict:
    return {"t": rat(s.t), "u": rat(s.u), "nu": rat(s.nu), "point": point_to_dict(s.point)}


def sample_from_dict(d: dict) -> DensitySample:
    from .paramfam import e_nu

    nu = unrat(d["nu"])
    return DensitySample(unrat(d["t"]), unrat(d["u"]), nu, point_from_dict(d["point"], e_nu(nu)))
