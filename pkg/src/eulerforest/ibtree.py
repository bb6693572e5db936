"""Increasing binary trees, their bijection with permutations, and labelings.

A tree is a nested ``Node(label, left, right)``; ``None`` marks a leaf slot,
so every internal node has exactly two children.  The minimum of a word is
the root, the prefix before it builds the left subtree and the suffix the
right subtree.  Reading internal labels in order gives the word back.

Leaves are numbered 0..n from left to right: leaf ``i`` sits between
``word[i-1]`` and ``word[i]``.  Leaf 0 is the leftmost leaf, leaf n the
rightmost.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from enum import Enum
from typing import Iterator, NamedTuple, Optional, Sequence

from ._parallel import merged_counts
from .exactpoly import Poly, a, alpha, b, beta, x, y, z
from .perm import Perm, _chunk, check_perm


class Node(NamedTuple):
    label: int
    left: Optional["Node"]
    right: Optional["Node"]


def perm_to_tree(word: Sequence[int]) -> Node:
    w = tuple(word)
    if not w:
        raise ValueError("empty word has no tree")
    # Cartesian tree with the minimum on top: one stack pass over the word.
    left: dict = {}
    right: dict = {}
    stack: list = []
    for v in w:
        last = None
        while stack and stack[-1] > v:
            last = stack.pop()
        left[v] = last
        if stack:
            right[stack[-1]] = v
        stack.append(v)
    root = stack[0]

    def build(v):
        if v is None:
            return None
        return Node(v, build(left.get(v)), build(right.get(v)))

    return build(root)


def tree_to_perm(t: Optional[Node]) -> Perm:
    out: list = []

    def walk(node):
        if node is not None:
            walk(node.left)
            out.append(node.label)
            walk(node.right)

    walk(t)
    return tuple(out)


def iter_trees(n: int) -> Iterator[Node]:
    """All increasing binary trees on [n], in lexicographic order of their words."""
    from .perm import enumerate_perms

    for w in enumerate_perms(n):
        yield perm_to_tree(w)


def tree_to_text(t: Optional[Node]) -> str:
    if t is None:
        return "."
    return f"{t.label}({tree_to_text(t.left)},{tree_to_text(t.right)})"


def parse_tree(text: str) -> Node:
    s = text.replace(" ", "")
    pos = 0

    def expect(ch):
        nonlocal pos
        if pos >= len(s) or s[pos] != ch:
            raise ValueError(f"expected {ch!r} at offset {pos} in {text!r}")
        pos += 1

    def node():
        nonlocal pos
        if pos < len(s) and s[pos] == ".":
            pos += 1
            return None
        start = pos
        while pos < len(s) and s[pos].isdigit():
            pos += 1
        if start == pos:
            raise ValueError(f"expected label at offset {pos} in {text!r}")
        label = int(s[start:pos])
        expect("(")
        left = node()
        expect(",")
        right = node()
        expect(")")
        return Node(label, left, right)

    t = node()
    if t is None or pos != len(s):
        raise ValueError(f"trailing input in {text!r}")
    if not is_increasing(t):
        raise ValueError(f"{text!r} is not an increasing tree")
    return t


def is_increasing(t: Optional[Node]) -> bool:
    if t is None:
        return True
    for c in (t.left, t.right):
        if c is not None and c.label <= t.label:
            return False
    return is_increasing(t.left) and is_increasing(t.right)


# -- vertex and leaf roles ----------------------------------------------------

class Role(str, Enum):
    ROOT = "root"
    ALPHA = "alpha"   # non-root vertex on the path to the leftmost leaf
    BETA = "beta"     # non-root vertex on the path to the rightmost leaf
    PLAIN = "plain"


class LeafInfo(NamedTuple):
    index: int           # 0..n, left to right
    parent: int
    is_left: bool
    sibling_is_leaf: bool


def roles(t: Node) -> tuple[dict, list]:
    """Vertex roles (label -> Role) and the leaves in left-to-right order."""
    vr: dict = {t.label: Role.ROOT}
    node = t.left
    while node is not None:
        vr[node.label] = Role.ALPHA
        node = node.left
    node = t.right
    while node is not None:
        vr[node.label] = Role.BETA
        node = node.right
    leaves: list = []

    def walk(node):
        if node.label not in vr:
            vr[node.label] = Role.PLAIN
        both = node.left is None and node.right is None
        if node.left is None:
            leaves.append(LeafInfo(len(leaves), node.label, True, both))
        else:
            walk(node.left)
        if node.right is None:
            leaves.append(LeafInfo(len(leaves), node.label, False, both))
        else:
            walk(node.right)

    walk(t)
    return vr, leaves


class Scheme(str, Enum):
    XY = "xy"
    AB_ALPHA_BETA = "abab"
    AB_ALPHA = "abalpha"
    MODIFIED1 = "mod1"
    MODIFIED2 = "mod2"
    AXYZ = "axyz"


LABEL_POLYS = {
    "x": x, "y": y, "a": a, "b": b, "z": z,
    "alpha": alpha, "beta": beta,
    "(x+y)/2": (x + y) / 2,
    "(alpha+beta)/2": (alpha + beta) / 2,
}


def _labels(t: Node, scheme: Scheme) -> tuple[list, dict]:
    """Leaf labels (left to right) and vertex labels (label -> str) for a scheme."""
    vr, leaves = roles(t)
    last = len(leaves) - 1
    vlabels: dict = {}
    if scheme in (Scheme.AB_ALPHA_BETA, Scheme.MODIFIED1):
        vlabels = {v: r.value for v, r in vr.items() if r in (Role.ALPHA, Role.BETA)}
    elif scheme is Scheme.AB_ALPHA:
        vlabels = {v: "alpha" for v, r in vr.items() if r in (Role.ALPHA, Role.BETA)}
    elif scheme is Scheme.MODIFIED2:
        vlabels = {v: "(alpha+beta)/2" for v, r in vr.items() if r in (Role.ALPHA, Role.BETA)}

    out = []
    for lf in leaves:
        side = "x" if lf.is_left else "y"
        if scheme is Scheme.XY:
            out.append(side)
        elif scheme is Scheme.AXYZ:
            # root counts as a beta-vertex here; z wins over the leftmost-leaf x
            if lf.is_left and vr[lf.parent] in (Role.ROOT, Role.BETA):
                out.append("z")
            elif lf.index == 0:
                out.append("x")
            elif lf.index == last:
                out.append("a")
            else:
                out.append(side)
        elif lf.index == 0:
            out.append("a")
        elif lf.index == last:
            out.append("b")
        elif scheme is Scheme.MODIFIED1:
            # a leaf sibling sits at the adjacent leaf index
            if lf.is_left:
                paired = lf.sibling_is_leaf and lf.index + 1 != last
            else:
                paired = lf.sibling_is_leaf and lf.index - 1 != 0
            out.append(side if paired else "(x+y)/2")
        else:
            out.append(side)
    return out, vlabels


@dataclass(frozen=True)
class LabeledTree:
    tree: Node
    scheme: Scheme
    leaf_labels: tuple
    vertex_labels: tuple  # sorted (vertex, label) pairs
    weight: Poly

    def to_text(self) -> str:
        leaves = " ".join(self.leaf_labels)
        verts = " ".join(f"{v}:{lab}" for v, lab in self.vertex_labels)
        return f"tree {tree_to_text(self.tree)}\nleaves {leaves}\nvertices {verts}\nweight {self.weight}"


def _weight_of(label_counts: Counter) -> Poly:
    w = Poly.const(1)
    for lab, k in sorted(label_counts.items()):
        w = w * LABEL_POLYS[lab] ** k
    return w


def apply_labeling(t: Node, scheme: "Scheme | str") -> LabeledTree:
    scheme = Scheme(scheme)
    leaves, verts = _labels(t, scheme)
    counts = Counter(leaves)
    counts.update(verts.values())
    return LabeledTree(t, scheme, tuple(leaves), tuple(sorted(verts.items())), _weight_of(counts))


@dataclass(frozen=True)
class TreeStats:
    peaks: int
    xleaf: int
    yleaf: int
    n_alpha: int
    n_beta: int


def tree_stats(t: Node) -> TreeStats:
    """Counts under the (a, b, alpha, beta)-labeling.

    ``peaks`` counts vertices whose two children are both proper leaves
    (neither the a-leaf nor the b-leaf).
    """
    vr, leaves = roles(t)
    last = len(leaves) - 1
    proper = [lf for lf in leaves if 0 < lf.index < last]
    xleaf = sum(1 for lf in proper if lf.is_left)
    peaks = sum(1 for lf in proper if lf.is_left and lf.sibling_is_leaf and lf.index + 1 != last)
    n_alpha = sum(1 for r in vr.values() if r is Role.ALPHA)
    n_beta = sum(1 for r in vr.values() if r is Role.BETA)
    return TreeStats(peaks, xleaf, len(proper) - xleaf, n_alpha, n_beta)


def _sum_chunk(n: int, first: int, schemes: tuple) -> Counter:
    counts: Counter = Counter()
    for w in _chunk(n, first):
        t = perm_to_tree(w)
        for s in schemes:
            leaves, verts = _labels(t, s)
            c = Counter(leaves)
            c.update(verts.values())
            counts[(s, tuple(sorted(c.items())))] += 1
    return counts


def sum_weights_many(n: int, schemes: Sequence["Scheme | str"], threads: int | None = None) -> dict:
    """Total labeled weight over all trees on [n], for several schemes in one pass."""
    if n < 1:
        raise ValueError("n must be at least 1")
    schemes = tuple(Scheme(s) for s in schemes)
    counts = merged_counts(_sum_chunk, [(n, f, schemes) for f in range(1, n + 1)], threads)
    totals = {s: Poly() for s in schemes}
    for (s, key), c in counts.items():
        totals[s] = totals[s] + _weight_of(Counter(dict(key))) * c
    return totals


def sum_weights(n: int, scheme: "Scheme | str", threads: int | None = None) -> Poly:
    return sum_weights_many(n, [scheme], threads)[Scheme(scheme)]


def _signed_chunk(n: int, first: int) -> Counter:
    counts: Counter = Counter()
    for w in _chunk(n, first):
        st = tree_stats(perm_to_tree(w))
        counts[(st.yleaf % 2, st.n_alpha + st.n_beta)] += 1
    return counts


def signed_half_tree_sum(n: int, threads: int | None = None) -> Poly:
    """Sum over trees on [n+1] of (-1)^(#y-leaves) (q/2)^(#alpha + #beta vertices)."""
    from fractions import Fraction
    from .exactpoly import q

    counts = merged_counts(_signed_chunk, [(n + 1, f) for f in range(1, n + 2)], threads)
    total = Poly()
    for (parity, k), c in counts.items():
        total = total + q ** k * Fraction(-c if parity else c, 2 ** k)
    return total


def tree_of(word: "Sequence[int] | str") -> Node:
    from .perm import parse_perm

    w = parse_perm(word) if isinstance(word, str) else check_perm(word)
    return perm_to_tree(w)
