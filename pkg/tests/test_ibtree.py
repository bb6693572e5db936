from collections import Counter

import pytest
from hypothesis import given, strategies as st

from eulerforest.exactpoly import Poly, a, alpha, b, beta, divide_exact_by_monomial, mono, substitute, x, y
from eulerforest.grammar import eulerian_via_grammar
from eulerforest.ibtree import (
    Node,
    Scheme,
    apply_labeling,
    iter_trees,
    parse_tree,
    perm_to_tree,
    sum_weights,
    tree_stats,
    tree_to_perm,
    tree_to_text,
)
from eulerforest.perm import enumerate_perms, statistics, word_to_cycle

import oracles

EXAMPLE = (8, 4, 9, 6, 1, 2, 5, 3, 7)
EXAMPLE_TEXT = "1(4(8(.,.),6(9(.,.),.)),2(.,3(5(.,.),7(.,.))))"


def as_nested(t):
    return None if t is None else (t.label, as_nested(t.left), as_nested(t.right))


def words(max_n=8):
    return st.integers(1, max_n).flatmap(lambda n: st.permutations(list(range(1, n + 1)))).map(tuple)


def test_example_tree():
    t = perm_to_tree(EXAMPLE)
    assert tree_to_text(t) == EXAMPLE_TEXT
    assert t.label == 1
    assert (t.left.label, t.left.left.label, t.left.right.label) == (4, 8, 6)
    assert t.left.right.left.label == 9
    assert (t.right.label, t.right.right.label) == (2, 3)
    assert (t.right.right.left.label, t.right.right.right.label) == (5, 7)
    assert tree_to_perm(t) == EXAMPLE


def test_small_trees():
    assert perm_to_tree((1,)) == Node(1, None, None)
    assert perm_to_tree((1, 2)) == Node(1, None, Node(2, None, None))
    assert tree_to_perm(Node(1, None, Node(2, None, None))) == (1, 2)


@given(words())
def test_tree_matches_recursive_split(w):
    assert as_nested(perm_to_tree(w)) == oracles.split_tree(w)


@pytest.mark.parametrize("n", range(1, 8))
def test_round_trip(n):
    for w in enumerate_perms(n):
        t = perm_to_tree(w)
        assert tree_to_perm(t) == w
        assert perm_to_tree(tree_to_perm(t)) == t


def test_text_round_trip():
    t = perm_to_tree(EXAMPLE)
    assert parse_tree(EXAMPLE_TEXT) == t
    with pytest.raises(ValueError):
        parse_tree("2(1(.,.),.)")
    with pytest.raises(ValueError):
        parse_tree("1(.,.")


def test_example_abab_weight():
    lt = apply_labeling(perm_to_tree(EXAMPLE), Scheme.AB_ALPHA_BETA)
    assert lt.weight == a * b * x**4 * y**4 * alpha**2 * beta**3
    assert dict(lt.vertex_labels) == {4: "alpha", 8: "alpha", 2: "beta", 3: "beta", 7: "beta"}
    assert lt.leaf_labels[0] == "a" and lt.leaf_labels[-1] == "b"


def test_example_modified1():
    lt = apply_labeling(perm_to_tree(EXAMPLE), Scheme.MODIFIED1)
    assert Counter(lt.leaf_labels) == {"(x+y)/2": 4, "x": 2, "y": 2, "a": 1, "b": 1}
    assert lt.weight == a * b * (x * y) ** 2 * ((x + y) / 2) ** 4 * alpha**2 * beta**3


def test_example_modified2():
    lt = apply_labeling(perm_to_tree(EXAMPLE), Scheme.MODIFIED2)
    assert lt.weight == a * b * x**4 * y**4 * ((alpha + beta) / 2) ** 5


def test_modified2_on_b2():
    # both trees on [2]: a * (alpha+beta)/2 * x * b and a * y * (alpha+beta)/2 * b
    half = (alpha + beta) / 2
    assert apply_labeling(perm_to_tree((1, 2)), "mod2").weight == a * b * x * half
    assert apply_labeling(perm_to_tree((2, 1)), "mod2").weight == a * b * y * half


def test_example_axyz():
    lt = apply_labeling(perm_to_tree(EXAMPLE), Scheme.AXYZ)
    # oracle: exc/drop/fix of (8 4 9 6 1)(2)(5 3)(7)
    f = word_to_cycle(EXAMPLE).to_word()
    expected = {"x": len(oracles.excedances(f)), "y": len(oracles.drops(f)),
                "z": len(oracles.fixed_points(f)), "a": 1}
    assert expected == {"x": 3, "y": 4, "z": 2, "a": 1}
    assert Counter(lt.leaf_labels) == expected


def test_abalpha_is_beta_to_alpha():
    t = perm_to_tree(EXAMPLE)
    assert apply_labeling(t, "abalpha").weight == substitute(apply_labeling(t, "abab").weight, {"beta": alpha})


def test_tree_stats_examples():
    assert tree_stats(perm_to_tree(EXAMPLE)) == tree_stats(perm_to_tree(EXAMPLE))
    s = tree_stats(perm_to_tree(EXAMPLE))
    assert (s.peaks, s.n_alpha, s.n_beta) == (2, 2, 3)
    s = tree_stats(perm_to_tree((1,)))
    assert (s.peaks, s.n_alpha, s.n_beta) == (0, 0, 0)
    s = tree_stats(perm_to_tree((1, 2)))
    assert (s.peaks, s.n_alpha, s.n_beta) == (0, 0, 1)


@pytest.mark.parametrize("n", range(1, 8))
def test_statistic_transport(n):
    for w in enumerate_perms(n):
        s, ts = statistics(w), tree_stats(perm_to_tree(w))
        assert ts.xleaf == s.asc
        assert ts.yleaf == s.des
        assert ts.n_alpha == s.lrmin - 1
        assert ts.n_beta == s.rlmin - 1
        assert ts.peaks == s.peaks
        assert ts.xleaf + ts.yleaf + 2 == n + 1


@pytest.mark.parametrize("n", range(1, 8))
def test_axyz_multiset_contract(n):
    for w in enumerate_perms(n):
        labels = Counter(apply_labeling(perm_to_tree(w), "axyz").leaf_labels)
        f = word_to_cycle(w).to_word()
        assert labels["x"] == len(oracles.excedances(f))
        assert labels["y"] == len(oracles.drops(f))
        assert labels["z"] == len(oracles.fixed_points(f))
        assert labels["a"] == 1
        assert tree_stats(perm_to_tree(w)).n_beta + 1 == len(oracles.cycles(f))


def test_sum_weights_examples():
    assert sum_weights(1, "abab") == a * b
    assert sum_weights(2, "abab") == a * b * (x * beta + y * alpha)
    A2 = x * y * alpha + x * y * beta + 2 * x * y * alpha * beta + x**2 * beta**2 + y**2 * alpha**2
    assert sum_weights(3, "abab") == a * b * A2


@pytest.mark.parametrize("n", range(0, 7))
def test_tree_sum_is_eulerian(n):
    total = sum_weights(n + 1, Scheme.AB_ALPHA_BETA)
    assert divide_exact_by_monomial(total, mono(a=1, b=1)) == eulerian_via_grammar(n)
    assert sum_weights(n + 1, Scheme.AB_ALPHA) == substitute(total, {"beta": alpha})


def test_sum_weights_parallel():
    assert sum_weights(6, "mod1", threads=3) == sum_weights(6, "mod1", threads=1)


def test_iter_trees_count():
    assert sum(1 for _ in iter_trees(5)) == 120
