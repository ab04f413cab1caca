"""Pairs of Pythagorean triangles with prescribed catheti ratios, in exact arithmetic."""

__version__ = "0.1.0"

from .ecq import Curve222, CurvePoint, add, iso_quadruple, j_invariant, mul, neg, on_curve, torsion_order
from .pythag import PythTriple, RationalTriangle, UVParam, enumerate_primitive, scale_to_integer, triple_from_uv
from .pairgen import SkewSimilarError, TriplePair, build_pair_curve, derive_pair, enumerate_pairs, is_skew_similar
from .skewfam import E_PRIME, GENERATOR, FamilyMember, crucial_identity_check, family_member, phi, phi_inv
from .descent import SelmerReport, bad_primes, rank_bounds, scan_rank_zero, selmer_pairs
from .paramfam import (
    curve_L_point,
    fibration_point,
    find_nu_in_interval,
    nu_from_tu,
    pair_from_H,
    r1r2_from_uvw,
)
from .tables import KNOWN_RANK_ZERO

__all__ = [
    "Curve222", "CurvePoint", "add", "iso_quadruple", "j_invariant", "mul", "neg", "on_curve", "torsion_order",
    "PythTriple", "RationalTriangle", "UVParam", "enumerate_primitive", "scale_to_integer", "triple_from_uv",
    "SkewSimilarError", "TriplePair", "build_pair_curve", "derive_pair", "enumerate_pairs", "is_skew_similar",
    "E_PRIME", "GENERATOR", "FamilyMember", "crucial_identity_check", "family_member", "phi", "phi_inv",
    "SelmerReport", "bad_primes", "rank_bounds", "scan_rank_zero", "selmer_pairs",
    "curve_L_point", "fibration_point", "find_nu_in_interval", "nu_from_tu", "pair_from_H", "r1r2_from_uvw",
    "KNOWN_RANK_ZERO",
]
