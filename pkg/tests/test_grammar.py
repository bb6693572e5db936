import pytest
from hypothesis import given, strategies as st

from eulerforest.exactpoly import NotDivisible, Poly, a, alpha, b, beta, divide_exact_by_monomial, mono, x, y
from eulerforest.grammar import JI_GRAMMAR, Grammar, eulerian_via_grammar, formal_derivative, iterate

A1 = x * beta + y * alpha
A2 = x * y * alpha + x * y * beta + 2 * x * y * alpha * beta + x**2 * beta**2 + y**2 * alpha**2


def test_rules_are_jis_grammar():
    assert JI_GRAMMAR.rules == {2: alpha * a * y, 3: beta * b * x, 0: x * y, 1: x * y}


def test_derivative_of_ab():
    assert formal_derivative(JI_GRAMMAR, a * b) == a * b * (alpha * y + beta * x)


def test_derivative_of_constant_and_x():
    assert formal_derivative(JI_GRAMMAR, Poly.const(1)).is_zero()
    assert formal_derivative(JI_GRAMMAR, x) == x * y


@pytest.mark.parametrize("n, expected", [(0, a * b), (1, a * b * A1), (2, a * b * A2)])
def test_iterate_initial_values(n, expected):
    assert iterate(JI_GRAMMAR, a * b, n) == expected


@pytest.mark.parametrize("n, expected", [(0, Poly.const(1)), (1, A1), (2, A2)])
def test_eulerian_initial_values(n, expected):
    assert eulerian_via_grammar(n) == expected


@pytest.mark.parametrize("n", range(13))
def test_iterates_always_divisible_by_ab(n):
    divide_exact_by_monomial(iterate(JI_GRAMMAR, a * b, n), mono(a=1, b=1))


def test_alternate_grammar():
    # the Eulerian grammar x -> xy, y -> xy alone gives the bivariate Eulerian polynomials
    g = Grammar({"x": x * y, "y": x * y})
    assert iterate(g, x, 3) == x * y**3 + 4 * x**2 * y**2 + x**3 * y


def test_negative_iterations_rejected():
    with pytest.raises(ValueError):
        iterate(JI_GRAMMAR, a * b, -1)


small = st.dictionaries(st.tuples(*[st.integers(0, 2)] * 8), st.integers(-3, 3), max_size=4).map(Poly)


@given(small, small)
def test_derivative_linear(p, r):
    assert formal_derivative(JI_GRAMMAR, p + 3 * r) == formal_derivative(JI_GRAMMAR, p) + 3 * formal_derivative(JI_GRAMMAR, r)


@given(small, small)
def test_derivative_leibniz(p, r):
    D = lambda u: formal_derivative(JI_GRAMMAR, u)  # noqa: E731
    assert D(p * r) == D(p) * r + p * D(r)


def test_not_divisible_is_raised_for_bad_input():
    with pytest.raises(NotDivisible):
        divide_exact_by_monomial(a + b, mono(a=1, b=1))
