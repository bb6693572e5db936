from fractions import Fraction
from itertools import permutations

import pytest
from hypothesis import given, settings, strategies as st

from eulerforest.exactpoly import (
    GammaExpansion,
    NotDivisible,
    NotHomogeneous,
    NotSymmetric,
    Poly,
    Var,
    a,
    alpha,
    b,
    beta,
    coefficient_of,
    divide_exact_by_monomial,
    gamma_expand,
    mono,
    partial_derivative,
    substitute,
    swap_vars,
    x,
    y,
)

import oracles

A2 = x * y * alpha + x * y * beta + 2 * x * y * alpha * beta + x**2 * beta**2 + y**2 * alpha**2


# -- strategies ----------------------------------------------------------------

coeffs = st.one_of(
    st.integers(-5, 5),
    st.fractions(min_value=-3, max_value=3, max_denominator=6),
)
monomials = st.tuples(*[st.integers(0, 3)] * 8)
polys = st.dictionaries(monomials, coeffs, max_size=5).map(Poly)
variables = st.sampled_from(list(Var))


# -- examples ------------------------------------------------------------------

def test_binomial_square():
    assert (x + y) * (x + y) == x**2 + 2 * x * y + y**2


def test_additive_identity():
    p = x * beta + y * alpha
    assert p + Poly() == p
    assert p + 0 == p


def test_scale_by_half():
    p = (x * beta + y * alpha).scale(Fraction(1, 2))
    assert p.coefficient(mono(x=1, beta=1)) == Fraction(1, 2)
    assert p.coefficient(mono(y=1, alpha=1)) == Fraction(1, 2)
    assert len(p) == 2


def test_zero_coefficients_are_dropped():
    p = x + y - x
    assert p == y
    assert len(p) == 1
    assert Poly({mono(x=1): 0}).is_zero()


def test_integral_fractions_collapse_to_int():
    p = (x / 2) * 2
    (c,) = [c for _, c in p.items()]
    assert type(c) is int


def test_partial_derivative_examples():
    assert partial_derivative(a * b, "a") == b
    assert partial_derivative(x**2 * y, Var.X) == 2 * x * y
    assert partial_derivative(alpha * beta, "x").is_zero()


def test_substitute_examples():
    assert substitute(x * beta + y * alpha, {"alpha": 1, "beta": 1}) == x + y
    ones = {v: 1 for v in ("x", "y", "alpha", "beta")}
    assert substitute(A2, ones) == 6  # |S_3|
    assert substitute(a * b * (x * beta + y * alpha), {"a": 1, "b": 1}) == x * beta + y * alpha


def test_substitution_is_simultaneous():
    assert substitute(x**2 * y, {"x": y, "y": x}) == x * y**2


def test_coefficient_of():
    assert coefficient_of(A2, mono(x=1, y=1, alpha=1, beta=1)) == 2
    assert coefficient_of(A2, mono(x=2, beta=2)) == 1
    assert coefficient_of(Poly(), mono(q=3)) == 0


def test_divide_exact_by_monomial():
    ab = mono(a=1, b=1)
    assert divide_exact_by_monomial(a * b * (x * beta + y * alpha), ab) == x * beta + y * alpha
    assert divide_exact_by_monomial(a * b, ab) == 1
    with pytest.raises(NotDivisible):
        divide_exact_by_monomial(x + a * b, ab)


def test_gamma_expand_descent_polynomial_of_s3():
    # oracle: x^des y^asc over S_3
    counts = {}
    for w in permutations(range(1, 4)):
        key = frozenset({"x": len(oracles.descents(w)), "y": len(oracles.ascents(w))}.items())
        counts[key] = counts.get(key, 0) + 1
    p = Poly(oracles.poly_from_counts(counts))
    assert p == x**2 + 4 * x * y + y**2
    assert gamma_expand(p).blocks == {((0,) * 8, 2): (1, 2)}


def test_gamma_expand_basis_and_negative():
    assert gamma_expand(x * y).blocks == {((0,) * 8, 2): (0, 1)}
    exp = gamma_expand(x**2 + y**2)
    assert exp.blocks == {((0,) * 8, 2): (1, -2)}
    assert not exp.is_nonnegative()


def test_gamma_expand_groups_by_rest_monomial():
    p = alpha * (x + y) + 2 * beta * x * y
    exp = gamma_expand(p)
    assert exp.blocks[(mono(alpha=1), 1)] == (1,)
    assert exp.blocks[(mono(beta=1), 2)] == (0, 2)
    assert exp.reconstruct() == p


def test_gamma_expand_errors():
    with pytest.raises(NotSymmetric):
        gamma_expand(x**2 + x * y)
    with pytest.raises(NotHomogeneous):
        gamma_expand(x + x * y)


def test_text_form_order_and_signs():
    assert A2.to_text() == "x^2*beta^2 + 2*x*y*alpha*beta + x*y*alpha + x*y*beta + y^2*alpha^2"
    assert (x / 2 - y).to_text() == "1/2*x - y"
    assert (-x).to_text() == "-x"
    assert Poly().to_text() == "0"
    assert Poly.const(3).to_text() == "3"


def test_json_form():
    data = (2 * x * y * alpha * beta).to_json()
    assert data == {"terms": [{"coeff": {"num": "2", "den": "1"}, "exp": [1, 1, 0, 0, 1, 1, 0, 0]}]}


def test_swap_vars():
    assert swap_vars(x * beta + 2 * y, ("x", "y"), ("alpha", "beta")) == y * alpha + 2 * x


def test_float_coefficients_rejected():
    with pytest.raises(TypeError):
        Poly({mono(x=1): 0.5})


# -- properties ----------------------------------------------------------------

@given(polys, polys, polys)
def test_ring_axioms(p, r, s):
    assert (p + r) + s == p + (r + s)
    assert (p * r) * s == p * (r * s)
    assert p * (r + s) == p * r + p * s
    assert p * r == r * p
    assert p - p == 0


@given(polys, polys, variables)
def test_leibniz_rule(p, r, v):
    assert partial_derivative(p * r, v) == partial_derivative(p, v) * r + p * partial_derivative(r, v)


@given(polys, monomials)
def test_divide_after_multiply(p, m):
    assert divide_exact_by_monomial(Poly.monomial(m) * p, m) == p


@given(polys)
def test_text_roundtrip(p):
    assert Poly.parse(p.to_text()) == p


@given(polys)
def test_json_roundtrip(p):
    assert Poly.from_json(p.to_json()) == p


sym_blocks = st.lists(
    st.tuples(st.integers(0, 3), st.lists(st.integers(-4, 4), min_size=1, max_size=3),
              st.sampled_from([mono(), mono(alpha=1), mono(q=2, beta=1)])),
    max_size=3,
    unique_by=lambda t: t[2],
)


@given(sym_blocks)
def test_gamma_reconstruction(blocks):
    # build from the basis, so a gamma expansion is known to exist
    p = Poly()
    for extra, gammas, rest in blocks:
        d = 2 * (len(gammas) - 1) + extra
        for j, g in enumerate(gammas):
            p = p + Poly.monomial(rest) * (x * y) ** j * (x + y) ** (d - 2 * j) * g
    exp = gamma_expand(p)
    assert isinstance(exp, GammaExpansion)
    assert exp.reconstruct() == p


@settings(max_examples=50)
@given(polys, st.dictionaries(variables, polys, max_size=2))
def test_substitute_is_a_ring_map(p, binds):
    r = x + alpha
    assert substitute(p * r, binds) == substitute(p, binds) * substitute(r, binds)
