"""Command line interface: one executable, subcommand per workflow.

Exit codes: 0 success / valid, 1 validation failure (axiom violations,
mismatches), 2 usage or IO errors.  ``--format json`` switches reports to
machine-readable output.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor

from . import biquandle as bq
from .bracket import (
    BUNDLED_BRACKETS,
    load_bundled,
    parse_bracket,
    serialize_bracket,
    verify,
)
from .diagram import parse as parse_diagram
from .homset import counting_invariant, enumerate_colorings
from .linktable import list_links, load
from .search import SearchConfig, search, search_space_estimate
from .statesum import invariant, to_polynomial


class UsageError(Exception):
    pass


def _read_file(path):
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as e:
        raise UsageError(f"cannot read {path}: {e}")


def _load_link(spec):
    """A bundled link name, or a path to a diagram file."""
    if os.path.exists(spec):
        return parse_diagram(_read_file(spec))
    try:
        return load(spec).diagram
    except KeyError:
        raise UsageError(f"unknown link {spec!r} and no such file")


def _load_bracket(spec):
    if os.path.exists(spec):
        return parse_bracket(_read_file(spec))
    if spec in BUNDLED_BRACKETS:
        return load_bundled(spec)
    raise UsageError(f"unknown bracket {spec!r} and no such file")


def _load_biquandle(spec):
    return bq.parse(_read_file(spec))


def cmd_check_biquandle(args):
    try:
        X = bq.parse(_read_file(args.biquandle))
    except bq.InvalidBiquandle as e:
        if args.format == "json":
            print(json.dumps({"valid": False,
                              "violations": [str(v) for v in e.violations]}))
        else:
            for v in e.violations:
                print(v)
            print("invalid")
        return 1
    if args.format == "json":
        print(json.dumps({"valid": True, "n": X.n}))
    else:
        print(f"valid ({X.n} elements)")
    return 0


def cmd_verify_bracket(args):
    b = _load_bracket(args.bracket)
    violations = verify(b, first_violation=args.first_violation)
    if args.format == "json":
        print(json.dumps({
            "valid": not violations,
            "violations": [
                {"axiom": v.axiom, "witness": list(v.witness),
                 "left": v.left, "right": v.right}
                for v in violations
            ],
        }))
    else:
        for v in violations:
            print(v)
        print("valid" if not violations else f"invalid ({len(violations)} violations)")
    return 0 if not violations else 1


def cmd_colorings(args):
    d = _load_link(args.link)
    X = _load_biquandle(args.biquandle)
    if args.list:
        cs = enumerate_colorings(d, X)
        if args.format == "json":
            print(json.dumps({
                "count": len(cs),
                "colorings": [
                    {"semiarcs": dict((str(k), v) for k, v in c.semiarcs),
                     "loops": list(c.loops)}
                    for c in cs
                ],
            }))
        else:
            for c in cs:
                print(" ".join(f"{s}:{v}" for s, v in c.semiarcs)
                      + ("" if not c.loops else " loops " + " ".join(map(str, c.loops))))
            print(len(cs))
    else:
        count = counting_invariant(d, X)
        print(json.dumps({"count": count}) if args.format == "json" else count)
    return 0


def cmd_eval(args):
    d = _load_link(args.link)
    b = _load_bracket(args.bracket)
    r = invariant(d, b.biquandle, b)
    poly = to_polynomial(r)
    if args.format == "json":
        out = {"link": d.name, "polynomial": poly}
        if args.multiset:
            out["multiset"] = [[v, mult] for v, mult in r.multiset]
        print(json.dumps(out))
    else:
        print(poly)
        if args.multiset:
            print(" ".join(f"{v}:{mult}" for v, mult in r.multiset))
    return 0


def _tab_row(task):
    name, bracket_text = task
    b = parse_bracket(bracket_text)
    e = load(name)
    return name, to_polynomial(invariant(e.diagram, b.biquandle, b))


def cmd_tabulate(args):
    b = _load_bracket(args.bracket)
    names = list_links()
    tasks = [(name, serialize_bracket(b)) for name in names]
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            pairs = list(pool.map(_tab_row, tasks))
    else:
        pairs = [_tab_row(t) for t in tasks]
    groups = {}
    for name, poly in sorted(pairs):
        groups.setdefault(poly, []).append(name)
    if args.format == "json":
        print(json.dumps({"rows": [
            {"polynomial": poly, "links": links}
            for poly, links in sorted(groups.items())
        ]}))
    else:
        width = max(len(p) for p in groups)
        for poly, links in sorted(groups.items()):
            print(f"{poly:>{width}} | {', '.join(links)}")
    return 0


def cmd_search(args):
    X = _load_biquandle(args.biquandle)
    cfg = SearchConfig(
        X,
        args.mod,
        args.mode,
        seed=args.seed,
        max_candidates=args.budget,
    )
    os.makedirs(args.out, exist_ok=True)
    found = []
    for b in search(cfg):
        found.append(b)
        if args.limit and len(found) >= args.limit:
            break
    if args.jobs > 1:
        found.sort(key=serialize_bracket)
    for i, b in enumerate(found, 1):
        path = os.path.join(args.out, f"bracket_{i:04d}.bkt")
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(serialize_bracket(b))
    msg = {"found": len(found), "out": args.out}
    print(json.dumps(msg) if args.format == "json" else f"found {len(found)} brackets in {args.out}")
    return 0


def cmd_estimate(args):
    est = search_space_estimate(args.n, args.mod)
    if args.format == "json":
        print(json.dumps(est))
    else:
        print(f"printed formula: {est['printed_formula']}")
        print(f"naive count:     {est['naive_count']}")
    return 0


def build_parser():
    p = argparse.ArgumentParser(prog="powerbracket",
                                description="Biquandle power bracket toolkit")
    sub = p.add_subparsers(dest="command", required=True)

    def fmt(sp):
        sp.add_argument("--format", choices=("text", "json"), default="text")

    sp = sub.add_parser("check-biquandle", help="validate a biquandle file")
    sp.add_argument("--biquandle", required=True)
    fmt(sp)
    sp.set_defaults(func=cmd_check_biquandle)

    sp = sub.add_parser("verify-bracket", help="check the bracket axioms")
    sp.add_argument("--bracket", required=True)
    sp.add_argument("--first-violation", action="store_true")
    fmt(sp)
    sp.set_defaults(func=cmd_verify_bracket)

    sp = sub.add_parser("colorings", help="count or list colorings of a link")
    sp.add_argument("--link", required=True)
    sp.add_argument("--biquandle", required=True)
    sp.add_argument("--list", action="store_true")
    fmt(sp)
    sp.set_defaults(func=cmd_colorings)

    sp = sub.add_parser("eval", help="evaluate the invariant of one link")
    sp.add_argument("--link", required=True)
    sp.add_argument("--bracket", required=True)
    sp.add_argument("--multiset", action="store_true")
    fmt(sp)
    sp.set_defaults(func=cmd_eval)

    sp = sub.add_parser("tabulate", help="run one bracket over the bundled table")
    sp.add_argument("--bracket", required=True)
    sp.add_argument("--jobs", type=int, default=1)
    fmt(sp)
    sp.set_defaults(func=cmd_tabulate)

    sp = sub.add_parser("search", help="search for power brackets")
    sp.add_argument("--biquandle", required=True)
    sp.add_argument("--mod", type=int, required=True)
    sp.add_argument("--mode", choices=("exhaustive", "randomized"), required=True)
    sp.add_argument("--seed", type=int)
    sp.add_argument("--budget", type=int)
    sp.add_argument("--out", required=True)
    sp.add_argument("--limit", type=int, default=0)
    sp.add_argument("--jobs", type=int, default=1)
    fmt(sp)
    sp.set_defaults(func=cmd_search)

    sp = sub.add_parser("estimate", help="search space size formulas")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--mod", type=int, required=True)
    fmt(sp)
    sp.set_defaults(func=cmd_estimate)

    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 2 if e.code not in (0, None) else 0
    try:
        return args.func(args)
    except UsageError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except (ValueError, KeyError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
