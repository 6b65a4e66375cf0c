"""Command-line interface.

Exit codes: 0 success, 1 a mathematically negative answer (incompatible
splits, flag failure), 2 usage or parse errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from .complexes import f_vector, is_flag
from .errors import IncompatibleSystem, M0nFlagError
from .moduli import (
    DEFAULT_VERIFY_CEILING,
    boundary_divisors,
    complex_to_dict,
    dual_complex,
    enumerate_strata,
    verify_flag_theorem,
)
from .newick import parse_newick, to_newick
from .splits import format_split, parse_split
from .trees import DEFAULT_ENUMERATION_CEILING, splits_of_tree, tree_from_splits


class UsageError(Exception):
    pass


def _emit_json(obj) -> None:
    print(json.dumps(obj, indent=2))


def _taxon_count(n: int, minimum: int = 3) -> int:
    if n < minimum:
        raise UsageError(f"n must be at least {minimum}, got {n}")
    if n > 64:
        raise UsageError(f"n must be at most 64, got {n}")
    return n


def _ceiling(args, default: int) -> int:
    return args.max_n if args.max_n is not None else default


def cmd_divisors(args) -> int:
    n = _taxon_count(args.n)
    texts = [str(d) for d in boundary_divisors(n)]
    if args.json:
        _emit_json(texts)
    else:
        for t in texts:
            print(t)
    return 0


def cmd_tree(args) -> int:
    n = _taxon_count(args.n)
    splits = [parse_split(text, n) for text in args.splits]
    try:
        t = tree_from_splits(n, splits)
    except IncompatibleSystem as exc:
        a, b = exc.pair
        if args.json:
            _emit_json({"n": n, "compatible": False, "witness": [format_split(a), format_split(b)]})
        print(f"incompatible splits: {format_split(a)} and {format_split(b)}", file=sys.stderr)
        return 1
    nwk = to_newick(t)
    if args.json:
        _emit_json({"n": n, "newick": nwk, "splits": [format_split(s) for s in splits_of_tree(t)]})
    else:
        print(nwk)
    return 0


def cmd_splits_of(args) -> int:
    text = sys.stdin.read() if args.newick == "-" else args.newick
    t = parse_newick(text, strict=args.strict_newick)
    sigma = [format_split(s) for s in splits_of_tree(t)]
    if args.json:
        _emit_json({"n": t.n, "newick": to_newick(t), "splits": sigma})
    else:
        for s in sigma:
            print(s)
    return 0


def cmd_verify(args) -> int:
    n = _taxon_count(args.n, minimum=4)
    ceiling = _ceiling(args, DEFAULT_VERIFY_CEILING)
    if n > ceiling:
        raise UsageError(f"n={n} exceeds the verification ceiling {ceiling} (raise it with --max-n)")
    report = verify_flag_theorem(n, max_n=ceiling)
    if args.json:
        print(report.to_json())
    else:
        def row(xs):
            return " ".join(map(str, xs))

        print(f"n: {report.n}")
        print(f"divisors: {report.divisor_count}")
        print(f"intersecting pairs: {report.edge_count}")
        print(f"cliques by size: {row(report.clique_counts)}")
        print(f"f-vector: {row(report.f_vector)}")
        print(f"max face size: {report.max_face_size}")
        print(f"strata by codimension: {row(report.strata_by_codim)}")
        print(f"strata match faces: {'yes' if report.strata_match else 'no'}")
        print(f"flag: {'true' if report.is_flag else 'false'}")
        if report.witness is not None:
            print(f"witness: {' '.join(report.witness)}")
        for a, b in report.realized_non_edges:
            print(f"realized non-edge: {a} {b}")
    return 0 if report.is_flag else 1


def cmd_strata(args) -> int:
    n = _taxon_count(args.n)
    ceiling = _ceiling(args, DEFAULT_ENUMERATION_CEILING)
    if n > ceiling:
        raise UsageError(f"n={n} exceeds the enumeration ceiling {ceiling} (raise it with --max-n)")
    strata, counts = enumerate_strata(n, max_n=ceiling)
    ordered = sorted(strata, key=lambda s: (s.codimension, s.tree.newick()))
    if args.json:
        _emit_json(
            {
                "version": 1,
                "n": n,
                "strata_by_codim": counts,
                "strata": [
                    {
                        "codimension": s.codimension,
                        "newick": s.tree.newick(),
                        "splits": [str(d) for d in s.divisors],
                    }
                    for s in ordered
                ],
            }
        )
    else:
        print("strata by codimension: " + " ".join(map(str, counts)))
        for s in ordered:
            print(f"{s.codimension} {s.tree.newick()}")
    return 0


def cmd_dual_complex(args) -> int:
    n = _taxon_count(args.n, minimum=4)
    ceiling = _ceiling(args, DEFAULT_ENUMERATION_CEILING)
    if n > ceiling:
        raise UsageError(f"n={n} exceeds the enumeration ceiling {ceiling} (raise it with --max-n)")
    c = dual_complex(n, max_n=ceiling)
    if args.json:
        _emit_json(complex_to_dict(n, c))
    else:
        print(f"vertices: {len(c.vertices)}")
        print("f-vector: " + " ".join(map(str, f_vector(c))))
        print(f"dimension: {c.dimension}")
        print(f"flag: {'true' if is_flag(c) else 'false'}")
        for face in sorted(sorted(f) for f in c.maximal_faces):
            print(" ".join(str(d) for d in face))
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="machine-readable output")
    common.add_argument(
        "--strict-newick",
        action="store_true",
        default=argparse.SUPPRESS,
        help="reject degree-2 vertices in Newick input instead of suppressing them",
    )
    common.add_argument("--max-n", type=int, default=argparse.SUPPRESS, help="enumeration / verification ceiling")

    parser = argparse.ArgumentParser(
        prog="m0nflag",
        description="Splits, phylogenetic trees and the boundary complex of M_{0,n}.",
        parents=[common],
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("divisors", parents=[common], help="list boundary divisors as splits")
    p.add_argument("n", type=int)
    p.set_defaults(func=cmd_divisors)

    p = sub.add_parser("tree", parents=[common], help="reconstruct the tree with the given splits")
    p.add_argument("n", type=int)
    p.add_argument("splits", nargs="*", metavar="split")
    p.set_defaults(func=cmd_tree)

    p = sub.add_parser("splits-of", parents=[common], help="splits of a Newick tree ('-' reads stdin)")
    p.add_argument("newick")
    p.set_defaults(func=cmd_splits_of)

    p = sub.add_parser("verify", parents=[common], help="machine-check the flag property for n")
    p.add_argument("n", type=int)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("strata", parents=[common], help="enumerate boundary strata")
    p.add_argument("n", type=int)
    p.set_defaults(func=cmd_strata)

    p = sub.add_parser("dual-complex", parents=[common], help="build the dual complex of the boundary")
    p.add_argument("n", type=int)
    p.set_defaults(func=cmd_dual_complex)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    for name, default in (("json", False), ("strict_newick", False), ("max_n", None)):
        if not hasattr(args, name):
            setattr(args, name, default)
    try:
        return args.func(args)
    except (UsageError, M0nFlagError) as exc:
        print(f"m0nflag {args.command}: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
