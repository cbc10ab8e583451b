"""Command-line front end.

Subcommands
-----------
tau R                 print the R-th interpolating tree
hs TREE               print the refined and classical Horton-Strahler numbers
d2t PATH              convert a Dyck path to its tree
t2d TREE              convert a tree to its Dyck path
decompose-tree TREE   print the spinal decomposition (with its hs)
decompose-path PATH   print the landmark decomposition (with its height)
enumerate --n N --side {trees,paths}
verify --max-n N      exhaustive equidistribution check

TREE arguments use the canonical text form (leaf ``.``, node ``(LR)``); PATH
arguments accept a U/D step string or a comma-separated height sequence, and
are always printed as U/D.  Passing ``-`` reads the value from stdin.

``--format json`` emits the same content as line-delimited JSON.  Exit
status: 0 on success, 1 if ``verify`` found a mismatch, 2 on usage or parse
errors.  ``verify`` honours the STRAHLER_JOBS environment variable to run
enumeration shards in parallel processes (default 1).
"""

from __future__ import annotations

import argparse
import json
import sys

from .bijection import path_to_tree, tree_to_path
from .dyck import decompose_path, parse_path
from .enumeration import all_dyck_paths, all_full_binary_trees, verify_equidistribution
from .tree import (
    classical_hs,
    decompose_tree,
    parse_tree,
    refined_hs,
    tau,
    tree_to_text,
)


def _value(arg: str) -> str:
    return sys.stdin.read() if arg == "-" else arg


def _emit(fmt: str, text_lines, json_obj) -> None:
    if fmt == "json":
        print(json.dumps(json_obj, sort_keys=True))
    else:
        for line in text_lines:
            print(line)


def _cmd_tau(args) -> int:
    if args.r < 0:
        print("error: R must be >= 0", file=sys.stderr)
        return 2
    text = tree_to_text(tau(args.r))
    _emit(args.format, [text], {"r": args.r, "tree": text})
    return 0


def _cmd_hs(args) -> int:
    t = parse_tree(_value(args.tree))
    refined = refined_hs(t)
    classical = classical_hs(t)
    _emit(
        args.format,
        [f"refined {refined}", f"classical {classical}"],
        {"refined": refined, "classical": classical},
    )
    return 0


def _cmd_d2t(args) -> int:
    d = parse_path(_value(args.path))
    text = tree_to_text(path_to_tree(d))
    _emit(args.format, [text], {"tree": text})
    return 0


def _cmd_t2d(args) -> int:
    t = parse_tree(_value(args.tree))
    steps = tree_to_path(t).steps()
    _emit(args.format, [steps], {"path": steps})
    return 0


def _cmd_decompose_tree(args) -> int:
    parts = decompose_tree(parse_tree(_value(args.tree)))
    lines = [
        f"h {parts.hs}",
        f"fix {tree_to_text(parts.fix)}",
        f"free {tree_to_text(parts.free)}",
    ]
    lines += [f"spine {side} {tree_to_text(sub)}" for side, sub in parts.spine]
    obj = {
        "h": parts.hs,
        "fix": tree_to_text(parts.fix),
        "free": tree_to_text(parts.free),
        "spine": [{"side": side, "tree": tree_to_text(sub)} for side, sub in parts.spine],
    }
    _emit(args.format, lines, obj)
    return 0


def _cmd_decompose_path(args) -> int:
    parts = decompose_path(parse_path(_value(args.path)))
    lines = [
        f"h {parts.height}",
        f"fix {parts.fix.steps()}".rstrip(),
        f"free {parts.free.steps()}".rstrip(),
    ]
    lines += [f"spine {e:+d} {p.steps()}".rstrip() for e, p in parts.spine]
    obj = {
        "h": parts.height,
        "fix": parts.fix.steps(),
        "free": parts.free.steps(),
        "spine": [{"sign": e, "path": p.steps()} for e, p in parts.spine],
    }
    _emit(args.format, lines, obj)
    return 0


def _cmd_enumerate(args) -> int:
    if args.n < 0:
        print("error: --n must be >= 0", file=sys.stderr)
        return 2
    if args.side == "paths":
        for d in all_dyck_paths(args.n):
            steps = d.steps()
            print(json.dumps({"path": steps}) if args.format == "json" else steps)
    else:
        for t in all_full_binary_trees(args.n):
            text = tree_to_text(t)
            print(json.dumps({"tree": text}) if args.format == "json" else text)
    return 0


def _cmd_verify(args) -> int:
    report = verify_equidistribution(args.max_n)
    if args.format == "json":
        for row in report.rows:
            for h in sorted(row.by_height.counts):
                print(json.dumps({"n": row.n, "h": h, "count": row.by_height.counts[h]}))
        for row in report.rows:
            print(
                json.dumps(
                    {
                        "n": row.n,
                        "objects": row.by_height.total(),
                        "cells": len(row.by_height.counts),
                        "equal": row.counts_equal,
                        "dyadic": row.dyadic_ok,
                        "totals": row.totals_ok,
                        "bijection": row.bijection_ok,
                    },
                    sort_keys=True,
                )
            )
        print(json.dumps({"max_n": report.max_n, "ok": report.ok}, sort_keys=True))
    else:
        print(f"{'n':>3} {'objects':>9} {'cells':>6} {'equal':>8} {'dyadic':>7} {'bijection':>10}")
        for row in report.rows:
            print(
                f"{row.n:>3} {row.by_height.total():>9} {len(row.by_height.counts):>6} "
                f"{'ok' if row.counts_equal else 'FAIL':>8} "
                f"{'ok' if row.dyadic_ok else 'FAIL':>7} "
                f"{'ok' if row.bijection_ok else 'FAIL':>10}"
            )
            for line in row.mismatches:
                print(f"    mismatch: {line}")
        print(f"all checks passed for n <= {report.max_n}" if report.ok else "MISMATCH FOUND")
    return 0 if report.ok else 1


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format",
        choices=("text", "json"),
        default=argparse.SUPPRESS,
        help="output format (default: text)",
    )
    parser = argparse.ArgumentParser(
        prog="strahler",
        description="Refined Horton-Strahler numbers, Dyck paths, and their bijection.",
        parents=[common],
    )
    parser.set_defaults(format="text")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("tau", parents=[common], help="print the R-th interpolating tree")
    p.add_argument("r", type=int, metavar="R")
    p.set_defaults(func=_cmd_tau)

    p = sub.add_parser("hs", parents=[common], help="refined and classical numbers of TREE")
    p.add_argument("tree", metavar="TREE")
    p.set_defaults(func=_cmd_hs)

    p = sub.add_parser("d2t", parents=[common], help="convert PATH to its tree")
    p.add_argument("path", metavar="PATH")
    p.set_defaults(func=_cmd_d2t)

    p = sub.add_parser("t2d", parents=[common], help="convert TREE to its path")
    p.add_argument("tree", metavar="TREE")
    p.set_defaults(func=_cmd_t2d)

    p = sub.add_parser("decompose-tree", parents=[common], help="spinal decomposition of TREE")
    p.add_argument("tree", metavar="TREE")
    p.set_defaults(func=_cmd_decompose_tree)

    p = sub.add_parser("decompose-path", parents=[common], help="landmark decomposition of PATH")
    p.add_argument("path", metavar="PATH")
    p.set_defaults(func=_cmd_decompose_path)

    p = sub.add_parser("enumerate", parents=[common], help="stream all size-N objects")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--side", choices=("trees", "paths"), required=True)
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("verify", parents=[common], help="exhaustive equidistribution check")
    p.add_argument("--max-n", type=int, required=True, dest="max_n")
    p.set_defaults(func=_cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except BrokenPipeError:
        return 0


if __name__ == "__main__":
    sys.exit(main())
