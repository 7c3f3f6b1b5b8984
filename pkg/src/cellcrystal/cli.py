"""Command line: graph, verify, potential, braid, connect.

Exit codes: 0 pass, 1 a check failed, 2 usage or unsupported input, 3 a budget was hit.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .errors import BudgetExceeded, CheckFailed, InvalidInput, UnsupportedMinor

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def _emit(text: str, path) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)


def _type_args(p, rank_required=True):
    p.add_argument("--family", required=True, help="A, B, C, D, E, F or G")
    p.add_argument("--rank", type=int, required=rank_required)
    p.add_argument("--word", help="reduced longest word, e.g. 121 or 1,2,1")


def _word(args, c):
    from .rootdata import canonical_longest_word, is_longest, parse_word

    if not args.word:
        return canonical_longest_word(c.family, c.rank)
    w = parse_word(args.word)
    if not is_longest(c, w):
        raise InvalidInput(f"{args.word} is not a reduced word of the longest element of {c.name}")
    return w


# ------------------------------------------------------------------ graph
def cmd_graph(args) -> int:
    from .cellular import binf_truncation, free_ball, potential_catalog, potential_from_minors
    from .crystalcore import MonomialCrystal, generate_component, monomial
    from .rootdata import cartan_matrix

    c = cartan_matrix(args.family, args.rank)
    if args.depth < 0:
        raise InvalidInput("--depth must be nonnegative")
    if args.realization == "free":
        g, _ = free_ball(c.family, c.rank, args.depth, _word(args, c))
    elif args.realization == "monomial":
        if args.weight is None or not 1 <= args.weight <= c.rank:
            raise InvalidInput("--weight i (1..rank) is required for the monomial realization")
        cr = MonomialCrystal(c.a)
        g = generate_component(cr, monomial({(1, args.weight): 1}), args.depth, mode="f")
    else:
        pot = None
        if args.word:
            pot = potential_from_minors(c.family, c.rank, _word(args, c))
        elif c.family in "EF":
            raise InvalidInput(f"no full potential for {c.name}; use --realization free or monomial")
        else:
            pot = potential_catalog(c.family, c.rank)
        g, _ = binf_truncation(c.family, c.rank, args.depth, args.realization, pot)
    dot = g.to_dot(f"{c.name}_{args.realization}")
    if args.dot:
        _emit(dot, args.dot)
    if args.json:
        _emit(_dump(g.to_json()), args.json)
    if not args.dot and not args.json:
        sys.stdout.write(dot)
    print(f"{c.name} {args.realization}: {len(g)} nodes, {len(g.edges)} edges", file=sys.stderr)
    return EXIT_OK


# ----------------------------------------------------------------- verify
def cmd_verify(args) -> int:
    from .verify import SUITES, run_suite

    names = list(SUITES) if args.suite == "all" else [args.suite]
    kw = {"family": args.family, "rank": args.rank, "seed": args.seed, "inject": args.inject}
    if args.depth is not None:
        kw["depth"] = args.depth
    reports, ok = [], True
    for name in names:
        res = run_suite(name, **kw)
        ok &= res.passed
        reports.append(res.to_json())
        for chk in res.checks:
            print(f"[{'PASS' if chk.passed else 'FAIL'}] {name}: {chk.name}")
    if args.json:
        _emit(_dump(reports[0] if len(reports) == 1 else {"suites": reports}), args.json)
    return EXIT_OK if ok else EXIT_FAIL


# -------------------------------------------------------------- potential
def cmd_potential(args) -> int:
    from .cellular import (ef_partial_potential, lower_potential_from_minors, potential_catalog,
                           potential_from_minors)
    from .rootdata import cartan_matrix
    from .tropsym import Flattening

    c = cartan_matrix(args.family, args.rank)
    if c.family in "EF":
        if args.word or args.lower:
            raise InvalidInput(f"only the lowest-term partial potential is available for {c.name}")
        pot = ef_partial_potential(c.family, c.rank)
    elif args.lower:
        pot = lower_potential_from_minors(c.family, c.rank, _word(args, c) if args.word else None)
    elif args.word:
        pot = potential_from_minors(c.family, c.rank, _word(args, c))
    else:
        pot = potential_catalog(c.family, c.rank)
    out = {"type": c.name, "word": list(pot.word), "provenance": pot.provenance, "partial": pot.partial}
    if args.emit in ("laurent", "both"):
        if pot.laurent is None:
            raise InvalidInput("no Laurent form recorded for this potential")
        out["laurent"] = pot.laurent.to_text(Flattening(pot.word))
        out["terms"] = len(pot.laurent.terms)
    if args.emit in ("tropical", "both"):
        out["forms"] = [list(f) for f in pot.forms]
    if args.json:
        _emit(_dump(out), args.json)
    else:
        if pot.partial:
            print("partial: lowest-term monomials only")
        if "laurent" in out:
            print(out["laurent"])
        if "forms" in out:
            print(json.dumps(out["forms"]))
    return EXIT_OK


# ------------------------------------------------------------------ braid
def cmd_braid(args) -> int:
    from . import braid
    from .rootdata import cartan_matrix, parse_word, word_graph_path

    c = cartan_matrix(args.family, args.rank)
    w = _word(args, c)
    x = tuple(int(v) for v in args.point.replace(",", " ").split())
    if len(x) != len(w):
        raise InvalidInput(f"point has {len(x)} coordinates, word has {len(w)} letters")
    out = {"type": c.name, "word": list(w), "point": list(x)}
    if args.to:
        target = parse_word(args.to)
        path = word_graph_path(c, w, target)
        _, y = braid.apply_path(c, w, x, path)
        out.update({"target": list(target), "moves": [mv.position for mv in path], "image": list(y)})
    if args.omega is not None:
        i = args.omega
        if i not in c.index_set:
            raise InvalidInput(f"color {i} out of range")
        out["omega"] = braid.omega(c, w, x, i)
        out["xi"] = list(braid.xi(c, w, x, i))
    _emit(_dump(out), args.json)
    return EXIT_OK


# ---------------------------------------------------------------- connect
def cmd_connect(args) -> int:
    from .connectivity import connectedness_report

    if args.box < 0 or args.pairs < 0:
        raise InvalidInput("--box and --pairs must be nonnegative")
    rep = connectedness_report(args.family, args.rank, args.box, args.pairs, seed=args.seed, pad=args.pad)
    _emit(_dump(rep), args.json)
    if rep.get("status") == "refused":
        return EXIT_USAGE
    return EXIT_OK if rep["ok"] else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    from .cellular import REALIZATIONS
    from .verify import SUITES

    p = argparse.ArgumentParser(prog="cellcrystal", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="cmd", required=True)

    g = sub.add_parser("graph", help="write a crystal graph as DOT and/or JSON")
    _type_args(g)
    g.add_argument("--realization", choices=REALIZATIONS + ("free", "monomial"), default="potential")
    g.add_argument("--depth", type=int, default=4)
    g.add_argument("--weight", type=int, help="fundamental weight index for --realization monomial")
    g.add_argument("--dot")
    g.add_argument("--json")
    g.set_defaults(fn=cmd_graph)

    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("suite", choices=list(SUITES) + ["all"])
    v.add_argument("--family")
    v.add_argument("--rank", type=int)
    v.add_argument("--depth", type=int)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--inject", action="store_true", help="plant a known fault; the suite should fail")
    v.add_argument("--json")
    v.set_defaults(fn=cmd_verify)

    q = sub.add_parser("potential", help="print a potential")
    _type_args(q)
    q.add_argument("--emit", choices=("laurent", "tropical", "both"), default="both")
    q.add_argument("--lower", action="store_true", help="the lower potential instead of the upper one")
    q.add_argument("--json")
    q.set_defaults(fn=cmd_potential)

    b = sub.add_parser("braid", help="transport a point between reduced words")
    _type_args(b)
    b.add_argument("--point", required=True, help="comma-separated integers")
    b.add_argument("--to", help="target reduced word")
    b.add_argument("--omega", type=int, help="also report omega_i and xi_i for this color")
    b.add_argument("--json")
    b.set_defaults(fn=cmd_braid)

    n = sub.add_parser("connect", help="connectedness report for the free cellular crystal")
    n.add_argument("--family", required=True)
    n.add_argument("--rank", type=int, required=True)
    n.add_argument("--box", type=int, default=4)
    n.add_argument("--pairs", type=int, default=200)
    n.add_argument("--pad", type=int, default=2)
    n.add_argument("--seed", type=int, default=0)
    n.add_argument("--json")
    n.set_defaults(fn=cmd_connect)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.fn(args)
    except (InvalidInput, UnsupportedMinor) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except CheckFailed as exc:
        print(f"check failed: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
