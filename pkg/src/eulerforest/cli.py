"""Command-line front end: ``eulerforest <command> ...``."""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from . import _parallel, forest, ibtree, perm, verify
from .exactpoly import Poly, Var, gamma_expand, substitute, swap_vars
from .grammar import eulerian_via_grammar

LABELINGS = {
    "xy": ibtree.Scheme.XY,
    "abab": ibtree.Scheme.AB_ALPHA_BETA,
    "abalpha": ibtree.Scheme.AB_ALPHA,
    "mod1": ibtree.Scheme.MODIFIED1,
    "mod2": ibtree.Scheme.MODIFIED2,
    "axyz": ibtree.Scheme.AXYZ,
}


def _nonneg(text: str) -> int:
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError("must be non-negative")
    return v


def _perm_arg(text: str):
    try:
        return perm.parse_perm(text)
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e)) from None


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="eulerforest",
        description="(alpha,beta)-Eulerian polynomials by grammar, permutations, trees and forests.",
    )
    p.add_argument("--threads", type=int, default=None,
                   help=f"worker processes for enumeration (default: ${_parallel.THREADS_ENV} or 1)")
    sub = p.add_subparsers(dest="command", required=True)

    e = sub.add_parser("eulerian", help="print A_n(x,y|alpha,beta)")
    e.add_argument("--n", type=_nonneg, required=True)
    e.add_argument("--route", choices=("grammar", "enum", "tree"), default="grammar")
    e.add_argument("--star", action="store_true", help="exchange x and y")
    e.add_argument("--json", action="store_true")

    g = sub.add_parser("gamma", help="print gamma coefficients")
    g.add_argument("--family", choices=("alpha-eulerian", "derangement"), required=True)
    g.add_argument("--n", type=_nonneg, required=True)
    g.add_argument("--json", action="store_true")

    s = sub.add_parser("stats", help="statistics and cycle form of a permutation")
    s.add_argument("--perm", type=_perm_arg, required=True)

    t = sub.add_parser("tree", help="increasing binary tree of a permutation, labeled")
    t.add_argument("--perm", type=_perm_arg, required=True)
    t.add_argument("--labeling", choices=tuple(LABELINGS), default="abab")

    f = sub.add_parser("forest", help="supporting forest and plane-forest representative")
    f.add_argument("--perm", type=_perm_arg, required=True)

    v = sub.add_parser("verify", help="run the identity checks; exit 1 if any fails")
    v.add_argument("--check", choices=verify.CHECK_IDS, action="append")
    v.add_argument("--max-n", type=_nonneg, default=7)
    v.add_argument("--json", action="store_true")
    v.add_argument("--timings", action="store_true", help="include elapsed times")
    return p


def _eulerian(args) -> int:
    if args.route == "grammar":
        poly = eulerian_via_grammar(args.n)
    elif args.route == "enum":
        poly = perm.eulerian_by_enumeration(args.n, "min", args.threads)
    else:
        from .exactpoly import divide_exact_by_monomial, mono

        total = ibtree.sum_weights(args.n + 1, ibtree.Scheme.AB_ALPHA_BETA, args.threads)
        poly = divide_exact_by_monomial(total, mono(a=1, b=1))
    if args.star:
        poly = swap_vars(poly, ("x", "y"))
    print(json.dumps(poly.to_json()) if args.json else poly.to_text())
    return 0


def _gamma(args) -> int:
    if args.family == "alpha-eulerian":
        poly = substitute(eulerian_via_grammar(args.n), {Var.BETA: Poly.var(Var.ALPHA)})
    else:
        poly = perm.derangement_poly(args.n, args.threads)
    exp = gamma_expand(poly)
    if args.json:
        rows = []
        for (rest, d) in sorted(exp.blocks, reverse=True):
            rows.append({"rest": list(rest), "d": d,
                         "gamma": [str(g) for g in exp.blocks[(rest, d)]]})
        print(json.dumps(rows))
    else:
        print(exp.to_text() if exp.blocks else "0")
    return 0


def _stats(args) -> int:
    s = perm.statistics(args.perm)
    print(f"des={s.des} asc={s.asc} lrmin={s.lrmin} rlmin={s.rlmin} peaks={s.peaks} "
          f"lrmax={s.lrmax} rlmax={s.rlmax} exc={s.exc} drop={s.drop} fix={s.fix} cyc={s.cyc}")
    cp = perm.word_to_cycle(args.perm)
    exc, drop, fix, cyc = perm.cycle_statistics(cp.to_word())
    print(f"cycles={cp}")
    print(f"cycle-form exc={exc} drop={drop} fix={fix} cyc={cyc}")
    return 0


def _tree(args) -> int:
    t = ibtree.perm_to_tree(args.perm)
    print(ibtree.apply_labeling(t, LABELINGS[args.labeling]).to_text())
    return 0


def _forest(args) -> int:
    t = ibtree.perm_to_tree(args.perm)
    sf = forest.supporting_forest(t)
    print(f"supporting {sf.to_text()}")
    print(f"sides {' '.join(sf.sides)}")
    print(f"plane {forest.canonicalize(sf).to_text()}")
    print(f"weight {forest.forest_weight(sf)}")
    return 0


def _verify(args) -> int:
    reports = verify.run_all(args.max_n, threads=args.threads, checks=args.check)
    if args.json:
        print(verify.reports_to_json(reports, args.timings))
    else:
        for r in reports:
            print(r.to_text(args.timings))
        failed = sum(not r.passed for r in reports)
        print(f"{len(reports) - failed}/{len(reports)} checks passed")
    return 0 if all(r.passed for r in reports) else 1


COMMANDS = {
    "eulerian": _eulerian,
    "gamma": _gamma,
    "stats": _stats,
    "tree": _tree,
    "forest": _forest,
    "verify": _verify,
}


def run(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    if args.threads is not None and args.threads < 1:
        parser.print_usage(sys.stderr)
        print("eulerforest: error: --threads must be at least 1", file=sys.stderr)
        return 2
    try:
        return COMMANDS[args.command](args)
    except forest.TooSmall as e:
        print(f"eulerforest: error: {e}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())
