"""Formal derivatives of context-free grammars (Chen's grammatical calculus).

A grammar sends each variable to a polynomial.  Its formal derivative ``D``
acts on monomials by the product rule, ``D(p) = sum_v rule(v) * dp/dv``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Mapping

from .exactpoly import Poly, Var, a, alpha, b, beta, divide_exact_by_monomial, mono, x, y


@dataclass(frozen=True)
class Grammar:
    rules: Mapping[Var, Poly]
    name: str = field(default="", compare=False)

    def __post_init__(self):
        object.__setattr__(self, "rules", {Var.parse(k): v for k, v in self.rules.items()})

    def __hash__(self):
        return hash(tuple(sorted((int(k), v) for k, v in self.rules.items())))


JI_GRAMMAR = Grammar(
    {Var.A: alpha * a * y, Var.B: beta * b * x, Var.X: x * y, Var.Y: x * y},
    name="ji",
)

AB = mono(a=1, b=1)


def formal_derivative(g: Grammar, p: Poly) -> Poly:
    rules = [(int(v), list(r._terms.items())) for v, r in g.rules.items()]
    acc: dict = {}
    for m, c in p._terms.items():
        for i, rterms in rules:
            e = m[i]
            if not e:
                continue
            base = m[:i] + (e - 1,) + m[i + 1:]
            ce = c * e
            for rm, rc in rterms:
                t = tuple(u + w for u, w in zip(base, rm))
                acc[t] = acc.get(t, 0) + ce * rc
    return Poly._from_acc(acc)


def iterate(g: Grammar, seed: Poly, n: int) -> Poly:
    if n < 0:
        raise ValueError("n must be non-negative")
    p = seed
    for _ in range(n):
        p = formal_derivative(g, p)
    return p


@lru_cache(maxsize=None)
def _ji_power(n: int) -> Poly:
    if n == 0:
        return Poly.monomial(AB)
    return formal_derivative(JI_GRAMMAR, _ji_power(n - 1))


def eulerian_via_grammar(n: int) -> Poly:
    """``A_n(x, y | alpha, beta)`` as ``D^n(ab) / ab`` under Ji's grammar."""
    if n < 0:
        raise ValueError("n must be non-negative")
    for k in range(n):  # fill the cache bottom-up, no deep recursion
        _ji_power(k)
    return divide_exact_by_monomial(_ji_power(n), AB)
