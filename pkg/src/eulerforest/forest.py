"""Supporting forests, orbit representatives, and forests of 0-1-2 plane trees.

Cutting an increasing binary tree at its alpha- and beta-vertices yields the
supporting forest: one planted tree per such vertex, holding the vertex and
the subtree hanging off its non-path child.  Swapping a leaf with a non-leaf
sibling only moves a tree inside its orbit; the orbit is represented by a
forest of planted increasing 0-1-2 plane trees.

A ``PlaneForest`` stores ordered child tuples indexed by label, with index 0
acting as a virtual super-root whose children are the component roots.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterator, Optional

from .exactpoly import Poly, alpha, beta, q, x, y
from .ibtree import Node, Role, roles, tree_to_text


class TooSmall(ValueError):
    pass


class RuleMismatch(ValueError):
    pass


# -- supporting forests -------------------------------------------------------

@dataclass(frozen=True)
class PlantedTree:
    root: int
    child: Optional[Node]  # None: a bare root

    def labels(self) -> list:
        out = [self.root]
        stack = [self.child]
        while stack:
            node = stack.pop()
            if node is not None:
                out.append(node.label)
                stack.extend((node.left, node.right))
        return sorted(out)

    def leaf_counts(self) -> tuple[int, int]:
        """(#left, #right) leaves of the hanging subtree."""
        left = right = 0
        stack = [self.child] if self.child is not None else []
        while stack:
            node = stack.pop()
            for c, is_left in ((node.left, True), (node.right, False)):
                if c is None:
                    if is_left:
                        left += 1
                    else:
                        right += 1
                else:
                    stack.append(c)
        return left, right

    def shifted(self, k: int) -> "PlantedTree":
        return PlantedTree(self.root + k, _shift(self.child, k))

    def to_text(self) -> str:
        return f"{self.root}[{tree_to_text(self.child)}]" if self.child else str(self.root)


def _shift(node: Optional[Node], k: int) -> Optional[Node]:
    if node is None:
        return None
    return Node(node.label + k, _shift(node.left, k), _shift(node.right, k))


@dataclass(frozen=True)
class SupportForest:
    components: tuple  # PlantedTree, sorted by root
    # alpha/beta side of each component when cut from a tree; not part of identity
    sides: tuple = field(default=(), compare=False)

    def rescaled(self) -> "SupportForest":
        """Shift labels down so the ground set starts at 1."""
        if not self.components:
            return self
        k = 1 - min(c.root for c in self.components)
        return SupportForest(tuple(c.shifted(k) for c in self.components), self.sides)

    def ground_set(self) -> list:
        return sorted(v for c in self.components for v in c.labels())

    def leaf_labels(self) -> list:
        """Inherited leaf labels, per component: a bare root keeps its one leaf
        (y under an alpha-vertex, x under a beta-vertex)."""
        out = []
        for i, c in enumerate(self.components):
            if c.child is None:
                side = self.sides[i] if self.sides else None
                out.append(["y"] if side == "alpha" else ["x"] if side == "beta" else ["?"])
            else:
                left, right = c.leaf_counts()
                out.append(["x"] * left + ["y"] * right)
        return out

    def to_text(self) -> str:
        return " | ".join(c.to_text() for c in self.components)


def supporting_forest(t: Node) -> SupportForest:
    if t.left is None and t.right is None:
        raise TooSmall("a single-vertex tree has no alpha- or beta-vertices")
    comps = []
    node = t.left
    while node is not None:
        comps.append((PlantedTree(node.label, node.right), "alpha"))
        node = node.left
    node = t.right
    while node is not None:
        comps.append((PlantedTree(node.label, node.left), "beta"))
        node = node.right
    comps.sort(key=lambda p: p[0].root)
    return SupportForest(tuple(c for c, _ in comps), tuple(s for _, s in comps))


def enumerate_support_forests(n: int) -> Iterator[SupportForest]:
    """Every forest of planted increasing binary trees on [n], once each.

    Labels are inserted in increasing order; label k either opens a new
    component or fills a free slot (the child slot of a bare root, or a leaf
    slot of an internal vertex).
    """
    kids: dict = {}   # root -> child label or None
    lr: dict = {}     # internal vertex -> [left, right]
    roots: list = []

    def build(v):
        if v is None:
            return None
        l, r = lr[v]
        return Node(v, build(l), build(r))

    def rec(k):
        if k > n:
            yield SupportForest(tuple(PlantedTree(r, build(kids[r])) for r in roots))
            return
        roots.append(k)
        kids[k] = None
        yield from rec(k + 1)
        roots.pop()
        del kids[k]
        lr[k] = [None, None]
        for r in list(roots):
            if kids[r] is None:
                kids[r] = k
                yield from rec(k + 1)
                kids[r] = None
        for v in list(lr):
            if v == k:
                continue
            for side in (0, 1):
                if lr[v][side] is None:
                    lr[v][side] = k
                    yield from rec(k + 1)
                    lr[v][side] = None
        del lr[k]

    yield from rec(1)


def support_forest_weight(f: SupportForest) -> Poly:
    """Updated labels: bare root x*beta + y*alpha (its leaf suppressed);
    a root with a child alpha + beta, times the inherited x/y leaf labels."""
    w = Poly.const(1)
    for c in f.components:
        if c.child is None:
            w = w * (x * beta + y * alpha)
        else:
            left, right = c.leaf_counts()
            w = w * (alpha + beta) * x ** left * y ** right
    return w


def total_support_weight(n: int) -> Poly:
    counts: Counter = Counter()
    for f in enumerate_support_forests(n):
        bare = 0
        xs = ys = 0
        for c in f.components:
            if c.child is None:
                bare += 1
            else:
                left, right = c.leaf_counts()
                xs += left
                ys += right
        counts[(bare, len(f.components) - bare, xs, ys)] += 1
    total = Poly()
    for (bare, rooted, xs, ys), c in counts.items():
        total += (x * beta + y * alpha) ** bare * (alpha + beta) ** rooted * x ** xs * y ** ys * c
    return total


# -- plane forests ------------------------------------------------------------

class VertexClass(str, Enum):
    SINGLE_ROOT = "singleRoot"
    ROOT_WITH_CHILD = "rootWithChild"
    UNARY = "unaryNonRoot"
    LEAF = "leaf"
    BINARY = "binaryNonRoot"


@dataclass(frozen=True)
class PlaneForest:
    children: tuple  # children[v] = ordered child labels; children[0] = roots

    @property
    def roots(self) -> tuple:
        return self.children[0]

    def vertices(self) -> list:
        out, stack = [], list(self.roots)
        while stack:
            v = stack.pop()
            out.append(v)
            stack.extend(self.children[v])
        return sorted(out)

    def vertex_class(self, v: int) -> VertexClass:
        k = len(self.children[v])
        if v in self.roots:
            return VertexClass.ROOT_WITH_CHILD if k else VertexClass.SINGLE_ROOT
        return (VertexClass.LEAF, VertexClass.UNARY, VertexClass.BINARY)[k]

    def class_counts(self) -> Counter:
        return Counter(self.vertex_class(v) for v in self.vertices())

    def is_fully_planted(self) -> bool:
        return all(self.children[r] for r in self.roots)

    def to_text(self) -> str:
        def one(v):
            kids = self.children[v]
            if not kids:
                return str(v)
            return f"{v}[" + ",".join(one(c) for c in kids) + "]"

        return " | ".join(one(r) for r in self.roots) if self.roots else "()"


class Rules(str, Enum):
    PLANE = "B"        # single root x*beta+y*alpha, root with child alpha+beta
    GAMMA_ALPHA = "C"  # single root alpha*(x+y), other roots 2*alpha
    DERANGEMENT = "D"  # root q, fully planted only
    PEAKS = "E"        # single root (x+y)(alpha+beta)/2, root with child alpha+beta


_UNARY = x + y
_LEAF = x * y

RULE_TABLES = {
    Rules.PLANE: {VertexClass.SINGLE_ROOT: x * beta + y * alpha,
                  VertexClass.ROOT_WITH_CHILD: alpha + beta},
    Rules.GAMMA_ALPHA: {VertexClass.SINGLE_ROOT: alpha * (x + y),
                        VertexClass.ROOT_WITH_CHILD: 2 * alpha},
    Rules.DERANGEMENT: {VertexClass.ROOT_WITH_CHILD: q},
    Rules.PEAKS: {VertexClass.SINGLE_ROOT: (x + y) * (alpha + beta) / 2,
                  VertexClass.ROOT_WITH_CHILD: alpha + beta},
}
for _table in RULE_TABLES.values():
    _table.update({VertexClass.UNARY: _UNARY, VertexClass.LEAF: _LEAF,
                   VertexClass.BINARY: Poly.const(1)})


def _weight_from_counts(counts: "Counter | dict", rules: Rules) -> Poly:
    table = RULE_TABLES[rules]
    w = Poly.const(1)
    for cls, k in counts.items():
        if not k:
            continue
        if cls not in table:
            raise RuleMismatch(f"rule set {rules.name} has no weight for {cls.value}")
        w = w * table[cls] ** k
    return w


def forest_weight(f: "SupportForest | PlaneForest", rules: "Rules | str | None" = None) -> Poly:
    if isinstance(f, SupportForest):
        if rules is not None:
            raise RuleMismatch("supporting forests carry their own updated labels")
        return support_forest_weight(f)
    if rules is None:
        raise RuleMismatch("plane forests need a rule set")
    return _weight_from_counts(f.class_counts(), Rules(rules))


def canonicalize(f: SupportForest) -> PlaneForest:
    """Orbit representative under swapping a leaf with its non-leaf sibling."""
    size = max((max(c.labels()) for c in f.components), default=0) + 1
    children = [()] * size
    children[0] = tuple(c.root for c in f.components)

    def canon(node: Node) -> int:
        kids = tuple(canon(c) for c in (node.left, node.right) if c is not None)
        children[node.label] = kids
        return node.label

    for c in f.components:
        children[c.root] = (canon(c.child),) if c.child is not None else ()
    return PlaneForest(tuple(children))


def enumerate_plane_forests(n: int, family: str = "all") -> Iterator[PlaneForest]:
    """Every forest of planted increasing 0-1-2 plane trees on [n], once each.

    Label k opens a new component, becomes the only child of a childless
    vertex, or becomes the second child of a non-root vertex, to the left or
    right of the existing child.  Roots take at most one child.
    """
    if family not in ("all", "fullyPlanted"):
        raise ValueError(f"unknown family {family!r}")
    fully = family == "fullyPlanted"
    children: list = [[] for _ in range(n + 1)]
    is_root = [False] * (n + 1)

    def rec(k, bare):
        if fully and bare > n - k + 1:
            return
        if k > n:
            yield PlaneForest(tuple(tuple(c) for c in children))
            return
        children[0].append(k)
        is_root[k] = True
        yield from rec(k + 1, bare + 1)
        children[0].pop()
        is_root[k] = False
        for v in range(1, k):
            kids = children[v]
            if not kids:
                kids.append(k)
                yield from rec(k + 1, bare - 1 if is_root[v] else bare)
                kids.pop()
            elif len(kids) == 1 and not is_root[v]:
                kids.insert(0, k)
                yield from rec(k + 1, bare)
                kids.pop(0)
                kids.append(k)
                yield from rec(k + 1, bare)
                kids.pop()

    yield from rec(1, 0)


def _family_for(rules: Rules) -> str:
    return "fullyPlanted" if rules is Rules.DERANGEMENT else "all"


def total_plane_weight(n: int, rules: "Rules | str") -> Poly:
    rules = Rules(rules)
    counts: Counter = Counter()
    for f in enumerate_plane_forests(n, _family_for(rules)):
        cc = f.class_counts()
        counts[tuple(cc.get(c, 0) for c in VertexClass)] += 1
    total = Poly()
    for key, c in counts.items():
        total += _weight_from_counts(dict(zip(VertexClass, key)), rules) * c
    return total


def gamma_from_forests(n: int) -> dict:
    """Gamma coefficients of the alpha-Eulerian polynomial read off forests.

    Returns ``{(k, j): c}``: the coefficient of ``alpha^k (xy)^j (x+y)^(n-2j)``,
    where a forest with k components and j leaves contributes 2^(#non-single roots).
    """
    out: Counter = Counter()
    for f in enumerate_plane_forests(n):
        cc = f.class_counts()
        k = len(f.roots)
        j = cc.get(VertexClass.LEAF, 0)
        out[(k, j)] += 2 ** cc.get(VertexClass.ROOT_WITH_CHILD, 0)
    return dict(out)
