"""Command line front end.

Subcommands: verify, embed, search, modsearch, catalog.  Exit codes are
uniform across commands: 0 for semantic success, 1 for semantic failure
(a failed verification, an unrealizable matrix), 2 for unusable input
(parse errors, contradictory flags).
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Optional

from . import catalog
from .modplane import mod_max_general_position
from .pointset import (
    DistanceMatrix,
    EmbeddedPointSet,
    InvalidDistanceMatrix,
    NotRealizable,
    embed,
    parse_matrix_text,
    pointset_characteristic,
    verify,
)
from .search import CharFilter, SearchConfig, search

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2


def _frac(f: Fraction) -> str:
    return f"{f.numerator}/{f.denominator}"


def _read_matrix(path: str) -> DistanceMatrix:
    with open(path) as fh:
        return parse_matrix_text(fh.read())


def _coords_json(e: EmbeddedPointSet) -> list[dict]:
    return [
        {"x": _frac(x), "y": {"coeff": _frac(q), "radicand": e.k}}
        for x, q in e.points
    ]


def cmd_verify(args) -> int:
    try:
        m = _read_matrix(args.matrix)
    except (OSError, InvalidDistanceMatrix) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    report = verify(m)
    if args.json:
        payload = {
            name: {"passed": getattr(report, name).passed, "detail": getattr(report, name).detail}
            for name in report.CHECK_FIELDS
        }
        payload["diameter"] = report.diameter
        payload["characteristic"] = report.characteristic
        payload["cluster_candidate"] = report.cluster_candidate
        payload["passed"] = report.passed
        print(json.dumps(payload))
    else:
        for line in report.lines():
            print(line)
    return EXIT_OK if report.passed else EXIT_FAIL


def cmd_embed(args) -> int:
    try:
        m = _read_matrix(args.matrix)
    except (OSError, InvalidDistanceMatrix) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        e = embed(m)
    except NotRealizable as exc:
        print(f"not realizable: {exc}", file=sys.stderr)
        return EXIT_FAIL
    if args.format == "json":
        print(json.dumps({"n": e.n, "radicand": e.k, "points": _coords_json(e)}))
    else:
        for x, q in e.points:
            print(f"({_frac(x)}, {_frac(q)} sqrt({e.k}))")
    return EXIT_OK


def _record(m: DistanceMatrix) -> str:
    e = embed(m)
    return json.dumps(
        {
            "n": m.n,
            "diameter": m.diameter(),
            "characteristic": pointset_characteristic(m),
            "matrix": [list(r) for r in m.rows],
            "points": _coords_json(e),
        }
    )


def cmd_search(args) -> int:
    try:
        char_filter = CharFilter.parse(args.char)
    except ValueError as exc:
        print(f"error: bad --char value: {exc}", file=sys.stderr)
        return EXIT_USAGE
    shard = (0, 1)
    if args.shard:
        try:
            index, _, total = args.shard.partition("/")
            shard = (int(index), int(total))
        except ValueError:
            print(f"error: bad --shard value {args.shard!r}, expected i/t", file=sys.stderr)
            return EXIT_USAGE
    try:
        config = SearchConfig(
            target_n=args.n,
            d_min=args.dmin,
            d_max=args.dmax,
            char_filter=char_filter,
            cluster_mode=args.cluster,
            shard=shard,
        )
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    count = 0
    for m in search(config, checkpoint=args.resume):
        print(_record(m))
        count += 1
    print(f"# {count} point set(s)", file=sys.stderr)
    return EXIT_OK


def cmd_modsearch(args) -> int:
    if args.modulus < 2:
        print(f"error: modulus must be >= 2, got {args.modulus}", file=sys.stderr)
        return EXIT_USAGE
    result = mod_max_general_position(args.modulus, node_budget=args.budget)
    bound = "=" if result.exact else ">="
    print(f"max_general_position(modulus={args.modulus}) {bound} {result.size}")
    if not result.exact:
        print("# node budget exhausted: value is a lower bound only", file=sys.stderr)
    for u, v in result.witness:
        print(f"{u} {v}")
    return EXIT_OK


def cmd_catalog(args) -> int:
    width = max(len(e.name) for e in catalog.entries())
    for e in catalog.entries():
        print(f"{e.name:<{width}}  {e.value:>12}  {e.note}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="intpoints",
        description="Exact search, embedding and verification of plane integral point sets in general position.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="check a distance-matrix certificate")
    p.add_argument("matrix", help="matrix file: first line n, then n symmetric rows")
    p.add_argument("--json", action="store_true", help="machine-readable report")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("embed", help="exact plane coordinates of a matrix")
    p.add_argument("matrix")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_embed)

    p = sub.add_parser("search", help="enumerate point sets by diameter range")
    p.add_argument("--n", type=int, required=True, help="points per set")
    p.add_argument("--dmin", type=int, default=1)
    p.add_argument("--dmax", type=int, required=True)
    p.add_argument("--char", default="any", help="characteristic filter: any, K, or div:K")
    p.add_argument("--cluster", action="store_true", help="restrict to characteristic 1")
    p.add_argument("--shard", default=None, help="process only shard i of t, as i/t")
    p.add_argument("--resume", default=None, metavar="CHECKPOINT",
                   help="checkpoint file of completed 'd k' keys; skipped on re-run, appended as keys finish")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("modsearch", help="maximum general-position set over Z_n^2")
    p.add_argument("--modulus", type=int, required=True)
    p.add_argument("--budget", type=int, default=None, help="search node budget (default unlimited)")
    p.set_defaults(func=cmd_modsearch)

    p = sub.add_parser("catalog", help="known reference values")
    p.set_defaults(func=cmd_catalog)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


def entry() -> None:
    sys.exit(main())
