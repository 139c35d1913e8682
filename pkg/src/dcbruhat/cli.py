"""
Command-line surface.

Subcommands: ``cosets`` (double coset table), ``hasse`` (the longest
representative poset), ``verify`` (catalogue sweep), ``tight`` (orbit
tightness scan), ``compare`` (one comparison), ``orbit`` (weight orbit
poset).  Genset flags take the COMPLEMENTS of the two generating sets,
matching how the catalogue is parameterized.

Exit codes: 0 success, 1 verification failure, 2 usage or domain error.
"""
from __future__ import annotations

import argparse
import os
import sys

from . import bruhat, parabolic, spherical, weights
from .symgroup import (
    DEFAULT_DEGREE_CAP,
    CapExceeded,
    full_genset,
    parse_genset,
    parse_perm,
)

ENV_DEGREE_CAP = "DCBRUHAT_DEGREE_CAP"


def _degree_cap(args) -> int:
    if args.degree_cap is not None:
        return args.degree_cap
    env = os.environ.get(ENV_DEGREE_CAP)
    if env is not None:
        try:
            return int(env)
        except ValueError:
            raise ValueError(f"bad {ENV_DEGREE_CAP} value: {env!r}") from None
    return DEFAULT_DEGREE_CAP


def _check_degree(degree: int, cap: int) -> int:
    if degree < 2:
        raise ValueError(f"degree must be at least 2, got {degree}")
    if degree > cap:
        raise CapExceeded(f"degree {degree} exceeds the cap {cap}")
    return degree


def _complements(args):
    degree = args.degree
    ic = parse_genset(args.ic)
    jc = parse_genset(args.jc)
    full = full_genset(degree)
    if not ic <= full or not jc <= full:
        raise ValueError(
            f"complement indices must lie in 1..{degree - 1}: ic={args.ic} jc={args.jc}"
        )
    return ic, jc


def _emit(text: str, args) -> None:
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _parse_degree_range(text: str) -> list[int]:
    if ".." in text:
        lo_text, hi_text = text.split("..", 1)
        lo, hi = int(lo_text), int(hi_text)
    else:
        lo = hi = int(text)
    if lo < 2 or hi < lo:
        raise ValueError(f"bad degree range: {text!r}")
    return list(range(lo, hi + 1))


def cmd_cosets(args) -> int:
    degree = _check_degree(args.degree, _degree_cap(args))
    ic, jc = _complements(args)
    full = full_genset(degree)
    table = parabolic.decompose(degree, full - ic, full - jc)
    if args.format == "json":
        _emit(table.to_json(), args)
    elif args.format == "table":
        _emit(table.to_table(), args)
    else:
        raise ValueError("cosets supports formats: json, table")
    return 0


def cmd_hasse(args) -> int:
    degree = _check_degree(args.degree, _degree_cap(args))
    ic, jc = _complements(args)
    poset = spherical.build_xplus_poset(degree, ic, jc)
    if args.format == "dot":
        _emit(poset.to_dot(label=lambda w: " ".join(str(x) for x in w)), args)
    elif args.format == "json":
        _emit(poset.to_json(label=list), args)
    else:
        raise ValueError("hasse supports formats: dot, json")
    return 0


def cmd_verify(args) -> int:
    cap = _degree_cap(args)
    degrees = _parse_degree_range(args.degrees)
    for degree in degrees:
        _check_degree(degree, cap)
    all_pass = True
    chunks = []
    for degree in degrees:
        report = spherical.verify_theorem(degree)
        all_pass = all_pass and report.all_pass
        chunks.append(report.to_json() if args.format == "json" else report.to_table())
    _emit("".join(chunks), args)
    return 0 if all_pass else 1


def cmd_tight(args) -> int:
    report = weights.tight_scan(args.degree)
    if args.format == "json":
        _emit(report.to_json(), args)
    else:
        _emit(report.to_table(), args)
    return 0 if report.all_match else 1


def cmd_compare(args) -> int:
    u = parse_perm(args.first)
    v = parse_perm(args.second)
    if args.oracle:
        result = bruhat.leq_subword_oracle(u, v)
    else:
        result = bruhat.leq(u, v)
    _emit(("true" if result else "false") + "\n", args)
    return 0


def cmd_orbit(args) -> int:
    theta = weights.check_dominant(weights.parse_weight(args.theta))
    restriction = None
    if args.restrict is not None:
        restriction = parse_genset(args.restrict)
    built = weights.orbit_poset(theta, restriction)
    if args.format == "dot":
        _emit(built.poset.to_dot(label=weights.format_weight), args)
    elif args.format == "json":
        _emit(built.poset.to_json(label=weights.format_weight), args)
    else:
        lines = [f"theta {weights.format_weight(theta)}  members {len(built.members)}"]
        for mu in built.members:
            lines.append(weights.format_weight(mu))
        _emit("\n".join(lines) + "\n", args)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dcbruhat",
        description="Double coset posets of the symmetric group under strong order.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, formats, default_format):
        p.add_argument("--format", choices=formats, default=default_format)
        p.add_argument("--output", help="write to a file instead of stdout")
        p.add_argument("--degree-cap", type=int, default=None,
                       help=f"override the degree cap (env {ENV_DEGREE_CAP})")

    p = sub.add_parser("cosets", help="double coset table for one pair")
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--ic", required=True, help="left genset complement, e.g. {2}")
    p.add_argument("--jc", required=True, help="right genset complement, e.g. {2,4}")
    add_common(p, ("json", "table"), "table")
    p.set_defaults(func=cmd_cosets)

    p = sub.add_parser("hasse", help="poset of longest representatives")
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--ic", required=True)
    p.add_argument("--jc", required=True)
    add_common(p, ("dot", "json"), "dot")
    p.set_defaults(func=cmd_hasse)

    p = sub.add_parser("verify", help="run the catalogue checks")
    p.add_argument("--degrees", required=True, help="a degree or range, e.g. 4..6")
    add_common(p, ("table", "json"), "table")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("tight", help="orbit tightness scan for one degree")
    p.add_argument("--degree", type=int, required=True)
    add_common(p, ("table", "json"), "table")
    p.set_defaults(func=cmd_tight)

    p = sub.add_parser("compare", help="compare two permutations in strong order")
    p.add_argument("first")
    p.add_argument("second")
    p.add_argument("--oracle", action="store_true",
                   help="use the slow subword check instead of the prefix test")
    p.add_argument("--output")
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("orbit", help="weight orbit poset")
    p.add_argument("--theta", required=True, help="dominant weight, e.g. 2,1,1,0")
    p.add_argument("--restrict", default=None,
                   help="genset the orbit members must respect, e.g. {1,3}")
    add_common(p, ("dot", "json", "table"), "table")
    p.set_defaults(func=cmd_orbit)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except (ValueError, CapExceeded) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entry() -> None:
    sys.exit(main())
