"""1-2 binary trees and forests.

A tree of height ``k`` has all leaves at depth ``k`` and every internal node
carries one or two subtrees. Trees are interned: building the same shape twice
returns the same object, so identity, equality and hashing coincide.

Canonical order (the indexing contract for every table and diagram):

* ``Leaf`` precedes every node.
* Nodes compare their sorted child lists element by element.
* When one child list is a prefix of the other, the longer list comes first,
  so ``(. .)`` precedes ``(.)``.

With this order the identity class (the all-doubled chain) is the first tree
of every height, and ``(. .)`` is the first child of ``((. .) (.))``.
"""

from __future__ import annotations

import enum
import itertools
import json
import threading
import warnings
from functools import lru_cache
from math import comb, prod
from typing import Iterable, Sequence

from .errors import NonCanonicalTreeWarning, TreeParseError, check_cap

TREE_HEIGHT_CAP = 4
FOREST_SIZE_CAP = 31

ORDER_NOTE = "canonical order: leaf first; sorted child lists compared elementwise; on a prefix tie the longer list first"


class NodeShape(enum.Enum):
    DOUBLED = "DoubledChild"
    SINGLE = "SingleChild"
    DISTINCT = "DistinctChildren"


class Tree:
    __slots__ = ("children", "height", "key", "__weakref__")

    _interned: dict = {}
    _lock = threading.Lock()

    children: tuple
    height: int
    key: tuple

    def __new__(cls, *children: Tree) -> Tree:
        if len(children) > 2:
            raise ValueError("a 1-2 binary tree node has at most two children")
        if children:
            heights = {c.height for c in children}
            if len(heights) != 1:
                raise ValueError("children of a node must have equal heights")
            children = tuple(sorted(children, key=_sort_key))
        existing = cls._interned.get(children)
        if existing is not None:
            return existing
        with cls._lock:
            existing = cls._interned.get(children)
            if existing is not None:
                return existing
            self = object.__new__(cls)
            object.__setattr__(self, "children", children)
            object.__setattr__(self, "height", children[0].height + 1 if children else 0)
            # (0, child key) per child then a (1,) terminator: on a prefix tie
            # the longer list sees (0, ...) where the shorter sees (1,).
            key = tuple((0, c.key) for c in children) + ((1,),) if children else ()
            object.__setattr__(self, "key", key)
            cls._interned[children] = self
            return self

    def __setattr__(self, name, value):
        raise AttributeError("Tree is immutable")

    def __reduce__(self):
        return (Tree, self.children)

    def __lt__(self, other: Tree) -> bool:
        return self.key < other.key

    def __le__(self, other: Tree) -> bool:
        return self.key <= other.key

    def __gt__(self, other: Tree) -> bool:
        return self.key > other.key

    def __ge__(self, other: Tree) -> bool:
        return self.key >= other.key

    def __repr__(self) -> str:
        return f"Tree({format_tree(self)!r})"

    def __str__(self) -> str:
        return format_tree(self)

    @property
    def is_leaf(self) -> bool:
        return not self.children


def _sort_key(t: Tree) -> tuple:
    return t.key


LEAF = Tree()

# A forest is a plain tuple of trees with strictly decreasing heights.
Forest = tuple


def node(*children: Tree) -> Tree:
    """Build (and canonicalize) the node with the given subtrees."""
    if not children:
        raise ValueError("a node needs one or two children; use LEAF for the trivial tree")
    return Tree(*children)


def node_shape(t: Tree) -> NodeShape:
    if t.is_leaf:
        raise ValueError("a leaf has no node shape")
    if len(t.children) == 1:
        return NodeShape.SINGLE
    a, b = t.children
    return NodeShape.DOUBLED if a is b else NodeShape.DISTINCT


def count_trees(k: int) -> int:
    """Number of 1-2 binary trees of height k: a_k = 2 a_{k-1} + C(a_{k-1}, 2)."""
    if k < 0:
        raise ValueError("height must be non-negative")
    a = 1
    for _ in range(k):
        a = 2 * a + comb(a, 2)
    return a


@lru_cache(maxsize=None)
def _enumerate(k: int) -> tuple:
    if k == 0:
        return (LEAF,)
    prev = _enumerate(k - 1)
    out = [node(t, t) for t in prev]
    out += [node(t) for t in prev]
    out += [node(a, b) for a, b in itertools.combinations(prev, 2)]
    out.sort()
    return tuple(out)


def enumerate_trees(k: int, cap: int | None = TREE_HEIGHT_CAP) -> list:
    """All trees of height k in canonical order."""
    if k < 0:
        raise ValueError("height must be non-negative")
    check_cap("tree height", k, cap)
    return list(_enumerate(k))


@lru_cache(maxsize=None)
def dim_tree(t: Tree) -> int:
    if t.is_leaf:
        return 1
    if len(t.children) == 1 or t.children[0] is t.children[1]:
        d = dim_tree(t.children[0])
        return d * d
    a, b = t.children
    return 2 * dim_tree(a) * dim_tree(b)


def dim_forest(forest: Sequence[Tree]) -> int:
    return prod(dim_tree(t) for t in forest)


def bin_expansion(n: int) -> tuple:
    """Exponents of the binary digits of n, strictly decreasing."""
    if n < 0:
        raise ValueError("n must be non-negative")
    return tuple(k for k in range(n.bit_length() - 1, -1, -1) if n >> k & 1)


def forest_size(forest: Sequence[Tree]) -> int:
    return sum(1 << t.height for t in forest)


def is_forest(forest: Sequence[Tree]) -> bool:
    heights = [t.height for t in forest]
    return all(a > b for a, b in zip(heights, heights[1:]))


def make_forest(trees: Iterable[Tree]) -> tuple:
    forest = tuple(trees)
    if not is_forest(forest):
        raise ValueError("forest heights must be strictly decreasing")
    return forest


def forests_of_size(n: int, cap: int | None = FOREST_SIZE_CAP) -> list:
    """Forests of size n, lexicographic in canonical tree order."""
    if n < 0:
        raise ValueError("size must be non-negative")
    check_cap("forest size", n, cap)
    factors = [_enumerate(k) for k in bin_expansion(n)]
    return list(itertools.product(*factors))


def compare_forests(f: Sequence[Tree], g: Sequence[Tree]) -> int:
    """Three-way comparison of equal-size forests in canonical order."""
    kf = [t.key for t in f]
    kg = [t.key for t in g]
    return (kf > kg) - (kf < kg)


def forest_key(forest: Sequence[Tree]) -> tuple:
    return tuple(t.key for t in forest)


# -- text and JSON forms -------------------------------------------------------


def format_tree(t: Tree) -> str:
    if t.is_leaf:
        return "."
    return "(" + " ".join(format_tree(c) for c in t.children) + ")"


def format_forest(forest: Sequence[Tree]) -> str:
    return "[" + ", ".join(format_tree(t) for t in forest) + "]"


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0
        self.reordered = False

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def parse(self) -> Tree:
        start = self.pos
        if self.pos >= len(self.text):
            raise TreeParseError("unexpected end of input", self.pos)
        ch = self.text[self.pos]
        if ch == ".":
            self.pos += 1
            return LEAF
        if ch != "(":
            raise TreeParseError(f"unexpected character {ch!r}", self.pos)
        self.pos += 1
        children = []
        while True:
            self.skip_ws()
            if self.pos >= len(self.text):
                raise TreeParseError("unclosed '('", start)
            if self.text[self.pos] == ")":
                self.pos += 1
                break
            child_at = self.pos
            if len(children) == 2:
                raise TreeParseError("node has more than two children", child_at)
            child = self.parse()
            if children and child.height != children[0].height:
                raise TreeParseError("leaves at unequal depths", child_at)
            children.append(child)
        if not children:
            raise TreeParseError("empty node", start)
        t = Tree(*children)
        if list(t.children) != children:
            self.reordered = True
        return t


def parse_tree(text: str) -> Tree:
    """Parse the ``.``/``( ... )`` grammar.

    Child order is canonicalized; a :class:`NonCanonicalTreeWarning` is issued
    when the input was not already in canonical form.
    """
    p = _Parser(text)
    p.skip_ws()
    t = p.parse()
    p.skip_ws()
    if p.pos != len(text):
        raise TreeParseError("trailing characters", p.pos)
    if p.reordered or format_tree(t) != text:
        warnings.warn(f"non-canonical tree text {text!r}, read as {format_tree(t)!r}",
                      NonCanonicalTreeWarning, stacklevel=2)
    return t


def parse_forest(text: str) -> tuple:
    """Inverse of :func:`format_forest`."""
    s = text.strip()
    if not (s.startswith("[") and s.endswith("]")):
        raise TreeParseError("forest text must be bracketed", 0)
    body = s[1:-1].strip()
    if not body:
        return ()
    trees = []
    depth = 0
    start = 0
    for i, ch in enumerate(body):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch == "," and depth == 0:
            trees.append(parse_tree(body[start:i].strip()))
            start = i + 1
    trees.append(parse_tree(body[start:].strip()))
    return make_forest(trees)


def tree_to_obj(t: Tree):
    if t.is_leaf:
        return "."
    return [tree_to_obj(c) for c in t.children]


def tree_from_obj(obj) -> Tree:
    if obj == ".":
        return LEAF
    if not isinstance(obj, list) or not 1 <= len(obj) <= 2:
        raise ValueError(f"invalid tree JSON value: {obj!r}")
    return Tree(*(tree_from_obj(c) for c in obj))


def forest_to_obj(forest: Sequence[Tree]) -> list:
    return [tree_to_obj(t) for t in forest]


def forest_from_obj(obj) -> tuple:
    return make_forest(tree_from_obj(t) for t in obj)


def tree_to_json(t: Tree) -> str:
    return json.dumps(tree_to_obj(t))


def tree_from_json(text: str) -> Tree:
    return tree_from_obj(json.loads(text))
