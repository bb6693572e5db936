"""Registry of identity checks; each compares polynomials built by different routes."""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from typing import Callable, Optional

from . import forest, ibtree, perm
from .exactpoly import Poly, Var, gamma_expand, mono, q, substitute, swap_vars
from .grammar import eulerian_via_grammar
from .ibtree import Scheme

CHECK_IDS = (
    "T11_grammar",
    "T22_treeSum",
    "T23_supportForest",
    "T24_planeForest",
    "T25_gammaAlpha",
    "T26_gammaDerangement",
    "T31_stembridgeAB",
    "T32_leftForest",
    "T33_rightForest",
    "T34_signedHalf",
    "T34_refined",
    "DEF_equivalence",
    "SYM_reversal",
)

GRAMMAR_ONLY = 20
PERM_ENUM = 8
FOREST_ENUM = 7
DERANGEMENT = 9

DEFAULT_BUDGETS = {
    "T11_grammar": PERM_ENUM,
    "T22_treeSum": PERM_ENUM,
    "T23_supportForest": FOREST_ENUM,
    "T24_planeForest": FOREST_ENUM,
    "T25_gammaAlpha": FOREST_ENUM,
    "T26_gammaDerangement": DERANGEMENT,
    "T31_stembridgeAB": FOREST_ENUM,
    "T32_leftForest": FOREST_ENUM,
    "T33_rightForest": FOREST_ENUM,
    "T34_signedHalf": PERM_ENUM,
    "T34_refined": PERM_ENUM,
    "DEF_equivalence": PERM_ENUM,
    "SYM_reversal": GRAMMAR_ONLY,
}

# smallest n at which a check is defined
MIN_N = {"T31_stembridgeAB": 1, "T32_leftForest": 1, "T33_rightForest": 1}


class BudgetExceeded(ValueError):
    pass


@dataclass
class CheckReport:
    id: str
    n: int
    status: str
    lhs: Poly
    rhs: Poly
    elapsed: float
    witness: Optional[tuple] = None
    routes: tuple = ()
    note: str = ""

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_json(self, timings: bool = False) -> dict:
        out = {"id": self.id, "n": self.n, "status": self.status}
        if timings:
            out["elapsed_ms"] = round(self.elapsed * 1000)
        if self.witness is not None:
            out["witness"] = list(self.witness)
        if self.note:
            out["note"] = self.note
        return out

    def to_text(self, timings: bool = False) -> str:
        s = f"{self.status.upper():4} {self.id} n={self.n}"
        if timings:
            s += f" ({self.elapsed * 1000:.0f} ms)"
        if self.note:
            s += f"  [{self.note}]"
        return s


def _witness(p: Poly, r: Poly) -> Optional[tuple]:
    diff = p - r
    for m, _ in diff.items():
        return m
    return None


def _star_free_ab(p: Poly) -> Poly:
    """Strip the a*b factor that tree weights carry."""
    from .exactpoly import divide_exact_by_monomial

    return divide_exact_by_monomial(p, mono(a=1, b=1))


# Each check returns ([(route, poly), ...], note-or-empty).  All polys must agree.

def _t11(n, threads):
    return [("grammar", eulerian_via_grammar(n)),
            ("perm:min", perm.eulerian_by_enumeration(n, "min", threads))], ""


def _t22(n, threads):
    return [("ibtree:abab", _star_free_ab(ibtree.sum_weights(n + 1, Scheme.AB_ALPHA_BETA, threads))),
            ("grammar", eulerian_via_grammar(n))], ""


def _t23(n, threads):
    return [("forest:support", forest.total_support_weight(n)),
            ("grammar", eulerian_via_grammar(n))], ""


def _t24(n, threads):
    return [("forest:plane-B", forest.total_plane_weight(n, "B")),
            ("grammar", eulerian_via_grammar(n))], ""


def _alpha_eulerian(n):
    return substitute(eulerian_via_grammar(n), {Var.BETA: Poly.var(Var.ALPHA)})


def _t25(n, threads):
    target = _alpha_eulerian(n)
    sides = [("forest:plane-C", forest.total_plane_weight(n, "C")), ("grammar:beta=alpha", target)]
    expansion = gamma_expand(target)
    from_forests = {}
    for (k, j), c in forest.gamma_from_forests(n).items():
        from_forests[(k, j)] = c
    from_grammar = {}
    for (rest, d), gammas in expansion.blocks.items():
        if d != n:
            return sides, f"block of (x,y)-degree {d} != {n}"
        for j, g in enumerate(gammas):
            if g:
                from_grammar[(rest[Var.ALPHA], j)] = g
    if from_forests != from_grammar:
        return sides, "forest gamma coefficients differ from gammaExpand"
    if not expansion.is_nonnegative():
        return sides, "negative gamma coefficient"
    return sides, ""


def _t26(n, threads):
    target = perm.derangement_poly(n, threads)
    sides = [("forest:plane-D", forest.total_plane_weight(n, "D")), ("perm:derangements", target)]
    if not gamma_expand(target).is_nonnegative():
        return sides, "negative gamma coefficient"
    return sides, ""


def _tree_peak_sums(n, threads):
    """Modified1 and Modified2 tree sums over B_n with the a*b factor removed."""
    sums = ibtree.sum_weights_many(n, [Scheme.MODIFIED1, Scheme.MODIFIED2], threads)
    return _star_free_ab(sums[Scheme.MODIFIED1]), _star_free_ab(sums[Scheme.MODIFIED2])


def _t31(n, threads):
    left, right = _tree_peak_sums(n, threads)
    perm_left, perm_right = perm.stembridge_sides(n, threads)
    return [("perm:peaks", perm_left), ("ibtree:mod1", left),
            ("ibtree:mod2", right), ("perm:descents", perm_right)], ""


def _t32(n, threads):
    left, _ = _tree_peak_sums(n, threads)
    return [("ibtree:mod1", left), ("forest:plane-E", forest.total_plane_weight(n - 1, "E"))], ""


def _t33(n, threads):
    _, right = _tree_peak_sums(n, threads)
    return [("ibtree:mod2", right), ("forest:plane-E", forest.total_plane_weight(n - 1, "E"))], ""


def _signed_rhs(n, threads, refined):
    values = {Var.X: -1, Var.Y: 1}
    if not refined:
        values[Var.Q] = 1
    return substitute(perm.derangement_poly(n, threads), values)


def _t34(n, threads):
    tree_side = substitute(ibtree.signed_half_tree_sum(n, threads), {Var.Q: 1})
    perm_side = substitute(perm.signed_half_sum(n, threads), {Var.Q: 1})
    return [("perm:signed", perm_side), ("ibtree:signed", tree_side),
            ("perm:derangements", _signed_rhs(n, threads, False))], ""


def _t34_refined(n, threads):
    return [("perm:signed-q", perm.signed_half_sum(n, threads)),
            ("ibtree:signed-q", ibtree.signed_half_tree_sum(n, threads)),
            ("perm:derangements-q", _signed_rhs(n, threads, True))], ""


def _def_equivalence(n, threads):
    return [("perm:max", perm.eulerian_by_enumeration(n, "max", threads)),
            ("perm:min", perm.eulerian_by_enumeration(n, "min", threads))], ""


def _sym_reversal(n, threads):
    p = eulerian_via_grammar(n)
    note = ""
    if p.degree_in(["x", "y"]) != {n}:
        note = "not homogeneous of degree n in x, y"
    elif substitute(p, {v: 1 for v in Var}) != factorial(n + 1):
        note = "value at all-ones differs from (n+1)!"
    return [("grammar", p), ("grammar:swapped", swap_vars(p, ("x", "y"), ("alpha", "beta")))], note


CHECKS: dict[str, Callable] = {
    "T11_grammar": _t11,
    "T22_treeSum": _t22,
    "T23_supportForest": _t23,
    "T24_planeForest": _t24,
    "T25_gammaAlpha": _t25,
    "T26_gammaDerangement": _t26,
    "T31_stembridgeAB": _t31,
    "T32_leftForest": _t32,
    "T33_rightForest": _t33,
    "T34_signedHalf": _t34,
    "T34_refined": _t34_refined,
    "DEF_equivalence": _def_equivalence,
    "SYM_reversal": _sym_reversal,
}


def run_check(check_id: str, n: int, budgets: Optional[dict] = None,
              threads: Optional[int] = None) -> CheckReport:
    if check_id not in CHECKS:
        raise KeyError(f"unknown check {check_id!r}")
    limit = (budgets or DEFAULT_BUDGETS).get(check_id, DEFAULT_BUDGETS[check_id])
    if n > limit:
        raise BudgetExceeded(f"{check_id} at n={n} exceeds budget n<={limit}")
    if n < MIN_N.get(check_id, 0):
        raise ValueError(f"{check_id} needs n >= {MIN_N[check_id]}")
    start = time.perf_counter()
    sides, note = CHECKS[check_id](n, threads)
    elapsed = time.perf_counter() - start
    first = sides[0][1]
    witness = None
    for _, other in sides[1:]:
        witness = _witness(first, other)
        if witness is not None:
            break
    ok = witness is None and not note
    return CheckReport(
        id=check_id, n=n, status="pass" if ok else "fail",
        lhs=first, rhs=sides[-1][1], elapsed=elapsed, witness=witness,
        routes=tuple(r for r, _ in sides), note=note,
    )


def run_all(max_n: int, budgets: Optional[dict] = None, threads: Optional[int] = None,
            checks: Optional[list] = None) -> list:
    budgets = {**DEFAULT_BUDGETS, **(budgets or {})}
    reports = []
    for cid in checks or CHECK_IDS:
        for n in range(MIN_N.get(cid, 0), min(max_n, budgets[cid]) + 1):
            reports.append(run_check(cid, n, budgets, threads))
    return reports


def reports_to_json(reports: list, timings: bool = False) -> str:
    return json.dumps([r.to_json(timings) for r in reports], indent=1)
