"""Exact construction and verification of the (alpha, beta)-Eulerian polynomials."""

from .exactpoly import Poly, Var, gamma_expand
from .grammar import JI_GRAMMAR, eulerian_via_grammar
from .perm import derangement_poly, eulerian_by_enumeration

__all__ = [
    "Poly",
    "Var",
    "gamma_expand",
    "JI_GRAMMAR",
    "eulerian_via_grammar",
    "derangement_poly",
    "eulerian_by_enumeration",
]
