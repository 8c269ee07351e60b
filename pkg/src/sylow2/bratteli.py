"""Restriction of P_n-irreps to P_{n-1} on the level of forests.

``res_forest(F)`` lists the constituents of the restriction of the irrep
labelled ``F``; since the branching is multiplicity free the list has no
repeats.  ``build_diagram`` assembles the resulting Bratteli diagram.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

from .errors import BranchingError, check_cap
from .graphs import LeveledGraph, export_dot, export_json  # noqa: F401  (re-exported)
from .trees import (
    LEAF,
    Tree,
    bin_expansion,
    forest_key,
    forest_size,
    forest_to_obj,
    format_forest,
    forests_of_size,
    node,
)

DIAGRAM_SIZE_CAP = 16


@lru_cache(maxsize=None)
def _res_tree(t: Tree) -> tuple:
    if t.is_leaf:
        return ((),)
    if len(t.children) == 1 or t.children[0] is t.children[1]:
        c = t.children[0]
        return tuple((c,) + f for f in _res_tree(c))
    a, b = t.children
    return tuple((a,) + f for f in _res_tree(b)) + tuple((b,) + f for f in _res_tree(a))


def res_tree(t: Tree) -> list:
    """Forests of size 2^k - 1 in the restriction of the height-k tree ``t``."""
    return list(_res_tree(t))


def res_forest(forest) -> list:
    if not forest:
        raise ValueError("the empty forest has no restriction")
    prefix = tuple(forest[:-1])
    return [prefix + f for f in _res_tree(forest[-1])]


@lru_cache(maxsize=None)
def _trees_restricting_to(tail: tuple) -> tuple:
    # trees T (height len(tail)) with tail in Res(T)
    if not tail:
        return (LEAF,)
    first, rest = tail[0], tail[1:]
    below = _trees_restricting_to(rest)
    out = []
    if first in below:
        out += [node(first, first), node(first)]
    out += [node(first, u) for u in below if u is not first]
    return tuple(sorted(out))


def covers_of(forest) -> list:
    """Forests of size |F| + 1 whose restriction contains ``forest``."""
    forest = tuple(forest)
    m = forest_size(forest) + 1
    j = (m & -m).bit_length() - 1
    keep = len(bin_expansion(m)) - 1
    prefix, tail = forest[:keep], forest[keep:]
    if [t.height for t in tail] != list(range(j - 1, -1, -1)):
        raise ValueError("not a valid forest")
    out = []
    for t in _trees_restricting_to(tail):
        g = prefix + (t,)
        if forest not in res_forest(g):
            raise AssertionError(f"inverse restriction produced {format_forest(g)}, which does not restrict to {format_forest(forest)}")
        out.append(g)
    out.sort(key=forest_key)
    return out


class BratteliDiagram(LeveledGraph):
    pass


def _forest_graph(levels, edges, start=0) -> BratteliDiagram:
    return BratteliDiagram(levels=levels, edges=edges, start=start,
                           label=format_forest, to_obj=forest_to_obj)


def build_diagram(N: int, cap: Optional[int] = DIAGRAM_SIZE_CAP) -> BratteliDiagram:
    if N < 0:
        raise ValueError("N must be non-negative")
    check_cap("diagram size", N, cap)
    levels = [forests_of_size(n, cap=None) for n in range(N + 1)]
    edges = []
    for n in range(1, N + 1):
        index = {f: j for j, f in enumerate(levels[n - 1])}
        for i, f in enumerate(levels[n]):
            below = res_forest(f)
            if len(set(below)) != len(below):
                raise BranchingError(f"restriction of {format_forest(f)} has repeated constituents")
            edges.extend((n, i, index[g]) for g in sorted(below, key=forest_key))
    edges.sort()
    return _forest_graph(levels, edges)


@dataclass
class SelfSimilarity:
    tree: Tree
    m: int
    mapping: dict
    violation: Optional[str] = None

    @property
    def ok(self) -> bool:
        return self.violation is None


def check_self_similar(t: Tree, m: int) -> SelfSimilarity:
    """Check that the part of the diagram above ``(t,)`` up to size ``m`` is a copy
    of the diagram of sizes ``0..m - 2^k``, via "delete ``t`` from the front"."""
    k = t.height
    if not (1 << k) <= m < (1 << (k + 1)):
        raise ValueError(f"m={m} outside [{1 << k}, {1 << (k + 1)})")
    base = 1 << k
    # upward closure of (t,) through covers
    upper = {base: [(t,)]}
    for n in range(base + 1, m + 1):
        upper[n] = sorted({g for f in upper[n - 1] for g in covers_of(f)}, key=forest_key)
    mapping = {}
    result = SelfSimilarity(t, m, mapping)
    for n in range(base, m + 1):
        for f in upper[n]:
            if f[0] is not t:
                result.violation = f"vertex {format_forest(f)} above {t} does not start with it"
                return result
            mapping[f] = f[1:]
    lower = build_diagram(m - base, cap=None)
    for n in range(m - base + 1):
        images = sorted((mapping[f] for f in upper[base + n]), key=forest_key)
        if images != lower.level(n):
            result.violation = f"level {base + n} does not map onto level {n}"
            return result
    upper_edges = {(f, g) for n in range(base + 1, m + 1) for f in upper[n]
                   for g in res_forest(f) if g in mapping}
    lower_edges = lower.edge_set()
    for f, g in sorted(upper_edges, key=lambda e: (forest_size(e[0]), forest_key(e[0]), forest_key(e[1]))):
        if (mapping[f], mapping[g]) not in lower_edges:
            result.violation = f"edge {format_forest(f)} -> {format_forest(g)} has no image"
            return result
    inverse = {v: u for u, v in mapping.items()}
    for f, g in sorted(lower_edges, key=lambda e: (forest_size(e[0]), forest_key(e[0]), forest_key(e[1]))):
        if (inverse[f], inverse[g]) not in upper_edges:
            result.violation = f"edge {format_forest(f)} -> {format_forest(g)} has no preimage"
            return result
    return result
