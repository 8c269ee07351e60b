"""Orders, conjugacy-class data and a brute-force oracle for H_k = H_{k-1} wr C_2.

Elements of H_k act on the points 0..2^k-1.  With h = 2^{k-1}, the element
(a, b, +1) sends i < h to a(i) and h + j to h + b(j); the element (a, b, -1)
first moves each half onto the other (i -> i + h, h + j -> j) and then applies
b on the second half and a on the first.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from math import prod
from typing import Optional

from .errors import check_cap
from .trees import LEAF, Tree, bin_expansion, node

ORACLE_HEIGHT_CAP = 4


def order_Hk(k: int) -> int:
    if k < 0:
        raise ValueError("height must be non-negative")
    return 1 << ((1 << k) - 1)


def order_Pn(n: int) -> int:
    return prod(order_Hk(k) for k in bin_expansion(n))


@lru_cache(maxsize=None)
def class_size_tree(t: Tree) -> int:
    if t.is_leaf:
        return 1
    if len(t.children) == 1:
        (c,) = t.children
        return order_Hk(c.height) * class_size_tree(c)
    a, b = t.children
    if a is b:
        return class_size_tree(a) ** 2
    return 2 * class_size_tree(a) * class_size_tree(b)


def class_size_forest(forest) -> int:
    return prod(class_size_tree(t) for t in forest)


@lru_cache(maxsize=None)
def class_cycle_type(t: Tree) -> tuple:
    """Cycle lengths of the class's elements, in non-increasing order."""
    if t.is_leaf:
        return (1,)
    if len(t.children) == 1:
        return tuple(2 * length for length in class_cycle_type(t.children[0]))
    a, b = t.children
    return tuple(sorted(class_cycle_type(a) + class_cycle_type(b), reverse=True))


def class_cycle_type_forest(forest) -> tuple:
    lengths = []
    for t in forest:
        lengths.extend(class_cycle_type(t))
    return tuple(sorted(lengths, reverse=True))


# -- permutations --------------------------------------------------------------


def compose(p: tuple, q: tuple) -> tuple:
    """The permutation i -> p(q(i))."""
    return tuple(p[i] for i in q)


def inverse(p: tuple) -> tuple:
    inv = [0] * len(p)
    for i, j in enumerate(p):
        inv[j] = i
    return tuple(inv)


def cycle_type(p: tuple) -> tuple:
    seen = [False] * len(p)
    lengths = []
    for start in range(len(p)):
        if seen[start]:
            continue
        length = 0
        i = start
        while not seen[i]:
            seen[i] = True
            i = p[i]
            length += 1
        lengths.append(length)
    return tuple(sorted(lengths, reverse=True))


def wreath_perm(a: tuple, b: tuple, eps: int) -> tuple:
    h = len(a)
    if eps == 1:
        return a + tuple(h + j for j in b)
    return tuple(h + j for j in b) + a


@dataclass(frozen=True)
class WreathElement:
    """Recursive element of H_k; the unit of H_0 has no components."""

    left: Optional[WreathElement] = None
    right: Optional[WreathElement] = None
    eps: int = 1

    @property
    def height(self) -> int:
        return 0 if self.left is None else self.left.height + 1

    def to_permutation(self) -> tuple:
        if self.left is None:
            return (0,)
        return wreath_perm(self.left.to_permutation(), self.right.to_permutation(), self.eps)

    def __str__(self):
        if self.left is None:
            return "1"
        return f"({self.left},{self.right})^{'+' if self.eps == 1 else '-'}"


UNIT = WreathElement()


@dataclass(frozen=True)
class OracleClass:
    tree: Tree
    size: int
    cycle_type: tuple
    permutation: tuple
    representative: WreathElement

    def to_obj(self) -> dict:
        from .trees import format_tree

        return {
            "tree": format_tree(self.tree),
            "size": self.size,
            "cycle_type": list(self.cycle_type),
            "representative": list(self.permutation),
        }


class _OracleLevel:
    """All elements of H_k as permutations, split into conjugacy classes."""

    def __init__(self, k: int, below: Optional[_OracleLevel]):
        self.k = k
        if below is None:
            self.decomp = {(0,): None}
            self.generators = []
        else:
            self.decomp = {}
            for a in below.decomp:
                for b in below.decomp:
                    for eps in (1, -1):
                        self.decomp[wreath_perm(a, b, eps)] = (a, b, eps)
            ident = tuple(range(len(next(iter(below.decomp)))))
            self.generators = [wreath_perm(g, ident, 1) for g in below.generators]
            self.generators.append(wreath_perm(ident, ident, -1))
        self.below = below
        self.classes = self._split()
        self.tree_of = {}
        for members, tree in zip(self.classes, (self._theta(min(m)) for m in self.classes)):
            for p in members:
                self.tree_of[p] = tree

    def _split(self) -> list:
        # Conjugacy class = orbit of x -> g x g^-1 over a generating set.
        gens = [(g, inverse(g)) for g in self.generators]
        unseen = set(self.decomp)
        classes = []
        for x in sorted(self.decomp):
            if x not in unseen:
                continue
            orbit = {x}
            frontier = [x]
            while frontier:
                y = frontier.pop()
                for g, gi in gens:
                    z = compose(compose(g, y), gi)
                    if z not in orbit:
                        orbit.add(z)
                        frontier.append(z)
            unseen -= orbit
            classes.append(frozenset(orbit))
        return classes

    def _theta(self, p: tuple) -> Tree:
        d = self.decomp[p]
        if d is None:
            return LEAF
        a, b, eps = d
        t = self.below.tree_of
        if eps == 1:
            return node(t[a], t[b])
        return node(t[compose(a, b)])

    def element(self, p: tuple) -> WreathElement:
        d = self.decomp[p]
        if d is None:
            return UNIT
        a, b, eps = d
        return WreathElement(self.below.element(a), self.below.element(b), eps)


@lru_cache(maxsize=None)
def _oracle_level(k: int) -> _OracleLevel:
    return _OracleLevel(k, _oracle_level(k - 1) if k > 0 else None)


def oracle_elements(k: int, cap: Optional[int] = ORACLE_HEIGHT_CAP) -> dict:
    """Map every element of H_k (as a permutation) to the tree of its class."""
    check_cap("oracle height", k, cap)
    return dict(_oracle_level(k).tree_of)


def oracle_conjugacy_classes(k: int, cap: Optional[int] = ORACLE_HEIGHT_CAP) -> list:
    """Brute-force conjugacy classes of H_k, ordered by (cycle type, representative)."""
    if k < 0:
        raise ValueError("height must be non-negative")
    check_cap("oracle height", k, cap)
    level = _oracle_level(k)
    out = []
    for members in level.classes:
        rep = min(members)
        out.append(OracleClass(
            tree=level.tree_of[rep],
            size=len(members),
            cycle_type=cycle_type(rep),
            permutation=rep,
            representative=level.element(rep),
        ))
    out.sort(key=lambda c: (c.cycle_type, c.permutation))
    return out


def oracle_dump(classes) -> str:
    return json.dumps([c.to_obj() for c in classes], indent=1)


def oracle_matches_recursion(k: int, cap: Optional[int] = ORACLE_HEIGHT_CAP) -> list:
    """Discrepancies between the brute-force classes and the tree recursion (empty if none)."""
    from .trees import enumerate_trees

    classes = oracle_conjugacy_classes(k, cap)
    problems = []
    by_tree = Counter(c.tree for c in classes)
    for t, n in by_tree.items():
        if n > 1:
            problems.append(f"tree {t} labels {n} classes")
    trees = enumerate_trees(k, cap)
    if set(by_tree) != set(trees):
        problems.append(f"{len(by_tree)} oracle trees vs {len(trees)} enumerated trees")
    for c in classes:
        if c.size != class_size_tree(c.tree):
            problems.append(f"class {c.tree}: oracle size {c.size}, recursion {class_size_tree(c.tree)}")
        if c.cycle_type != class_cycle_type(c.tree):
            problems.append(f"class {c.tree}: oracle cycle type {c.cycle_type}, recursion {class_cycle_type(c.tree)}")
    total = sum(c.size for c in classes)
    if total != order_Hk(k):
        problems.append(f"class sizes sum to {total}, expected {order_Hk(k)}")
    return problems
