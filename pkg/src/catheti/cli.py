"""Command-line frontend.

Exit codes: 0 success, 1 bad input or configuration, 2 a mathematical
precondition fails (skew-similar input to ``derive``).
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from fractions import Fraction
from pathlib import Path
from typing import List, Optional, Sequence

from . import __version__
from .descent import DEFAULT_SEARCH_HEIGHT, e_ab_hints, rank_bounds
from .ecq import CurvePoint, curve_e_ab
from .exactmath import parse_rational
from .pairgen import SkewSimilarError, enumerate_pairs
from .paramfam import curve_L_point, find_nu_in_interval, pair_from_H, r1r2_from_uvw
from .pythag import PythTriple
from .scancache import default_cache_path, run_scan
from .serialize import hpair_to_dict, member_to_dict, pair_to_dict, rat, ratio_to_dict, report_to_dict, sample_to_dict
from .skewfam import family_member

EXIT_OK, EXIT_INPUT, EXIT_MATH = 0, 1, 2

# family members whose witnesses `rank` can inject without a search
WITNESS_FAMILY_RANGE = range(2, 8)


class CliError(Exception):
    def __init__(self, message: str, code: int = EXIT_INPUT):
        super().__init__(message)
        self.code = code


def _rational(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from exc


def _triple(values: Sequence[int]) -> PythTriple:
    try:
        return PythTriple(*values)
    except ValueError as exc:
        raise CliError(str(exc)) from exc


def _emit_json(obj, out) -> None:
    json.dump(obj, out, indent=2)
    out.write("\n")


def _emit_csv(header: List[str], rows: List[list], out) -> None:
    w = csv.writer(out, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)


def cmd_derive(args, out) -> int:
    t1, t2 = _triple(args.first), _triple(args.second)
    try:
        pairs = enumerate_pairs(t1, t2, args.count)
    except SkewSimilarError as exc:
        raise CliError(f"skew-similar input (Aa = Bb): {exc}; try the `skew` command", EXIT_MATH) from exc
    if args.format == "json":
        _emit_json([pair_to_dict(p) for p in pairs], out)
    elif args.format == "csv":
        _emit_csv(
            ["index", "a", "b", "c", "A", "B", "C", "mu", "nu"],
            [[i, *p.first.as_tuple(), *p.second.as_tuple(), rat(p.mu), rat(p.nu)] for i, p in enumerate(pairs, 1)],
            out,
        )
    else:
        mu, nu = Fraction(t2.a, t1.a), Fraction(t2.b, t1.b)
        for i, p in enumerate(pairs, 1):
            print(f"pair {i}: {p.first.as_tuple()} {p.second.as_tuple()}", file=out)
            print(f"  A'/a' = {p.second.a}/{p.first.a} = {rat(p.mu)} {'ok' if p.mu == mu else 'MISMATCH'}", file=out)
            print(f"  B'/b' = {p.second.b}/{p.first.b} = {rat(p.nu)} {'ok' if p.nu == nu else 'MISMATCH'}", file=out)
    return EXIT_OK


def cmd_skew(args, out) -> int:
    if args.n_from <= 1:
        raise CliError("n = 1 is degenerate (U = -1 gives u^2 = v^2); start at n >= 2")
    if args.n_to < args.n_from:
        raise CliError("need n_from <= n_to")
    members = [family_member(n) for n in range(args.n_from, args.n_to + 1)]
    if args.format == "json":
        _emit_json([member_to_dict(m) for m in members], out)
    elif args.format == "csv":
        _emit_csv(
            ["n", "u", "v", "w", "a", "b", "c", "x", "y"],
            [[m.n, m.u, m.v, m.w, *m.triple.as_tuple(), rat(m.witness.x), rat(m.witness.y)] for m in members],
            out,
        )
    else:
        for m in members:
            print(f"n={m.n}: nP = {m.point}, (U, W) = ({m.U}, {m.W})", file=out)
            print(f"  triple {m.triple.as_tuple()}; point of infinite order on E_{{a,b}}: {m.witness}", file=out)
    return EXIT_OK


def _known_witnesses(a: int, b: int, curve) -> List[CurvePoint]:
    out = []
    for n in WITNESS_FAMILY_RANGE:
        m = family_member(n)
        legs = (m.triple.a, m.triple.b)
        if legs in ((a, b), (b, a)):
            out.append(curve.point(m.witness.x, m.witness.y))
    return out


def cmd_rank(args, out) -> int:
    t = PythTriple.from_legs(args.a, args.b) if min(args.a, args.b) > 0 else None
    if t is None or not t.primitive:
        raise CliError(f"({args.a}, {args.b}) are not the legs of a primitive Pythagorean triple")
    curve = curve_e_ab(args.a, args.b)
    report = rank_bounds(
        curve, args.search_height, witnesses=_known_witnesses(args.a, args.b, curve), factor_hints=e_ab_hints(args.a, args.b)
    )
    if args.format == "json":
        _emit_json(report_to_dict(report), out)
    elif args.format == "csv":
        _emit_csv(["a", "b", "c", "rank_upper", "rank_lower"], [[*t.as_tuple(), report.rank_upper, report.rank_lower]], out)
    else:
        print(f"E_{{{args.a},{args.b}}}: {curve}", file=out)
        print(f"bad primes: {report.bad_primes}", file=out)
        print(f"2-Selmer pairs ({len(report.accepted_pairs)}): {report.accepted_pairs}", file=out)
        print(f"rank_upper {report.rank_upper}", file=out)
        print(f"rank_lower {report.rank_lower}", file=out)
        for w in report.witnesses:
            print(f"  witness {w}", file=out)
        if report.certified_rank is not None:
            print(f"rank certified = {report.certified_rank}", file=out)
    return EXIT_OK


def cmd_scan(args, out) -> int:
    cache = Path(args.cache) if args.cache else default_cache_path()
    try:
        records = run_scan(args.leg_bound, args.jobs, cache, args.search_height)
    except OSError as exc:
        raise CliError(f"cache {cache} is not usable: {exc}") from exc
    certified = [r for r in records if r.certified_zero]
    if args.format == "json":
        _emit_json([json.loads(r.to_json()) for r in certified], out)
    elif args.format == "human":
        for r in certified:
            print(f"{r.triple}  rank 0 (2-Selmer pairs {r.accepted_pairs_count})", file=out)
        print(f"{len(certified)} of {len(records)} curves certified rank 0; others inconclusive", file=out)
    elif certified:
        _emit_csv(["a", "b", "c", "rank_upper", "rank_lower"], [[*r.triple, r.rank_upper, r.rank_lower] for r in certified], out)
    return EXIT_OK


def cmd_param(args, out) -> int:
    if args.which == "r1r2":
        u, v, w = args.values
        if u.denominator != 1 or v.denominator != 1:
            raise CliError("u and v must be integers")
        r = r1r2_from_uvw(u, v, w)
        if args.format == "json":
            _emit_json(ratio_to_dict(r), out)
        else:
            print(f"{rat(r.r1)} {rat(r.r2)}", file=out)
    else:
        nu_bar, t = args.values[:2]
        h = curve_L_point(nu_bar, t)
        pair = pair_from_H(nu_bar, h)
        if args.format == "json":
            _emit_json(hpair_to_dict(pair), out)
        else:
            print(f"H point: x={rat(h.x)} y={rat(h.y)} S={rat(h.S)}", file=out)
            print(f"triangles {[rat(s) for s in pair.first.sides()]} {[rat(s) for s in pair.second.sides()]}", file=out)
            print(f"s = {rat(pair.s)}, nu = nu_bar s^2 = {rat(pair.nu)}", file=out)
            if pair.sign_flips:
                print(f"absolute values taken for: {', '.join(pair.sign_flips)}", file=out)
    return EXIT_OK


def cmd_density(args, out) -> int:
    sample = find_nu_in_interval(args.lo, args.hi, args.t)
    if args.format == "json":
        _emit_json(sample_to_dict(sample), out)
    else:
        print(f"nu = {rat(sample.nu)}  (t = {rat(sample.t)}, u = {rat(sample.u)})", file=out)
        print(f"point of infinite order on y^2 = x(x+1)(x+nu^2): {sample.point}", file=out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="catheti", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"catheti {__version__}")
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=("human", "json", "csv"), default="human")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("derive", parents=[fmt], help="pairs with the catheti ratios of two triples")
    p.add_argument("sides", type=int, nargs=6, metavar="N", help="a b c A B C")
    p.add_argument("--count", type=int, default=1)
    p.set_defaults(func=cmd_derive)

    p = sub.add_parser("skew", parents=[fmt], help="the skew-similar family from multiples of (42, -216)")
    p.add_argument("n_from", type=int)
    p.add_argument("n_to", type=int)
    p.set_defaults(func=cmd_skew)

    p = sub.add_parser("rank", parents=[fmt], help="2-descent rank bounds for E_{a,b}")
    p.add_argument("a", type=int)
    p.add_argument("b", type=int)
    p.add_argument("--search-height", type=int, default=DEFAULT_SEARCH_HEIGHT)
    p.set_defaults(func=cmd_rank)

    p = sub.add_parser("scan", help="certify rank 0 for E_{a,b} over primitive triples")
    p.add_argument("leg_bound", type=int)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--cache", help="JSON-lines cache (default: $CATHETI_CACHE or ./catheti-scan.jsonl)")
    p.add_argument("--search-height", type=int, default=0)
    p.add_argument("--format", choices=("human", "json", "csv"), default="csv")
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("param", parents=[fmt], help="ratio families: r1r2 U V W | pair NU_BAR T")
    p.add_argument("which", choices=("r1r2", "pair"))
    p.add_argument("values", type=_rational, nargs="+")
    p.set_defaults(func=cmd_param)

    p = sub.add_parser("density", parents=[fmt], help="a positive-rank nu inside (lo, hi)")
    p.add_argument("lo", type=_rational)
    p.add_argument("hi", type=_rational)
    p.add_argument("--t", type=_rational, default=Fraction(2))
    p.set_defaults(func=cmd_density)
    return parser


def main(argv: Optional[Sequence[str]] = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_INPUT
    if args.command == "derive":
        args.first, args.second = args.sides[:3], args.sides[3:]
    if args.command == "param":
        need = 3 if args.which == "r1r2" else 2
        if len(args.values) != need:
            print(f"error: param {args.which} takes {need} values", file=sys.stderr)
            return EXIT_INPUT
    try:
        return args.func(args, out)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except (ValueError, ArithmeticError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


def main_entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    main_entry()
