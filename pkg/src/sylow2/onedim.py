"""One-dimensional representations of P_n as sequences of bit strings.

A one-dimensional tree is encoded by reading its spine from the root: ``0``
for a doubled child, ``1`` for a single child.  The trivial tree is the empty
string, so the size-1 sequence is ``("",)`` and the size-0 sequence is ``()``.
"""

from __future__ import annotations

from itertools import product
from typing import Optional

from .bratteli import res_forest
from .errors import check_cap
from .graphs import LeveledGraph
from .trees import LEAF, Tree, bin_expansion, forests_of_size, node

ONEDIM_SIZE_CAP = 31


def is_one_dim(t: Tree) -> bool:
    while not t.is_leaf:
        if len(t.children) == 2 and t.children[0] is not t.children[1]:
            return False
        t = t.children[0]
    return True


def beta_tree(t: Tree) -> str:
    bits = []
    s = t
    while not s.is_leaf:
        if len(s.children) == 2 and s.children[0] is not s.children[1]:
            raise ValueError(f"{t} is not one-dimensional")
        bits.append("1" if len(s.children) == 1 else "0")
        s = s.children[0]
    return "".join(bits)


def beta_inverse(b: str) -> Tree:
    t = LEAF
    for bit in reversed(b):
        if bit == "0":
            t = node(t, t)
        elif bit == "1":
            t = node(t)
        else:
            raise ValueError(f"not a bit string: {b!r}")
    return t


def beta_forest(forest) -> tuple:
    return tuple(beta_tree(t) for t in forest)


def beta_forest_inverse(seq) -> tuple:
    return tuple(beta_inverse(b) for b in seq)


def L_string(b: str) -> tuple:
    """Restriction of a one-dimensional tree, on its code: successive tails down to ``""``."""
    if not b:
        raise ValueError("L is undefined on the empty string")
    return tuple(b[i:] for i in range(1, len(b) + 1))


def L_seq(seq) -> tuple:
    if not seq:
        raise ValueError("L is undefined on the empty sequence")
    if not seq[-1]:
        # trivial tree: P_1 restricts to P_0
        return tuple(seq[:-1])
    return tuple(seq[:-1]) + L_string(seq[-1])


def seq_size(seq) -> int:
    return sum(1 << len(b) for b in seq)


def format_seq(seq) -> str:
    return "(" + ",".join(b if b else "ε" for b in seq) + ")"


def count_onedim(n: int) -> int:
    return 1 << sum(bin_expansion(n))


def _seq_graph(levels, edges) -> LeveledGraph:
    return LeveledGraph(levels=levels, edges=sorted(edges), label=format_seq, to_obj=list)


def _link(levels) -> list:
    edges = []
    for n in range(1, len(levels)):
        index = {s: j for j, s in enumerate(levels[n - 1])}
        edges.extend((n, i, index[L_seq(s)]) for i, s in enumerate(levels[n]))
    return edges


def build_onedim_direct(N: int, cap: Optional[int] = ONEDIM_SIZE_CAP) -> LeveledGraph:
    """One-dimensional forests of sizes 0..N, filtered from all forests."""
    if N < 0:
        raise ValueError("N must be non-negative")
    check_cap("one-dimensional poset size", N, cap)
    levels = []
    for n in range(N + 1):
        seqs = [beta_forest(f) for f in forests_of_size(n, cap=None) if all(is_one_dim(t) for t in f)]
        levels.append(sorted(seqs))
    return _seq_graph(levels, _link(levels))


def onedim_from_diagram(diagram) -> LeveledGraph:
    """Restrict a Bratteli diagram to its one-dimensional vertices, encoded by beta."""
    levels = []
    edges = []
    for n, lv in enumerate(diagram.levels):
        keep = [i for i, f in enumerate(lv) if all(is_one_dim(t) for t in f)]
        levels.append(sorted(beta_forest(lv[i]) for i in keep))
    for n, i, j in diagram.edges:
        f, g = diagram.level(n)[i], diagram.level(n - 1)[j]
        if all(is_one_dim(t) for t in f) and all(is_one_dim(t) for t in g):
            edges.append((n, levels[n].index(beta_forest(f)), levels[n - 1].index(beta_forest(g))))
    return _seq_graph(levels, edges)


def _stage(k: int) -> tuple:
    """Vertices and (upper, lower) edges for sizes 0..2^k - 1, built by copying."""
    if k == 0:
        return [()], set()
    verts, edges = _stage(k - 1)
    new_verts = list(verts)
    new_edges = set(edges)
    if k == 1:
        # a single copy, labelled by the trivial tree's empty string
        prefixes = [""]
    else:
        # two copies 0b and 1b for every string b of length k - 2
        prefixes = [e + "".join(b) for b in product("01", repeat=k - 2) for e in "01"]
    for p in prefixes:
        new_verts.extend((p,) + v for v in verts)
        new_edges.update(((p,) + u, (p,) + v) for u, v in edges)
        # the copy's root (p,) hangs off L(p) on the top level of the previous stage
        new_edges.add(((p,), L_string(p) if p else ()))
    return new_verts, new_edges


def build_onedim_recursive(N: int, cap: Optional[int] = ONEDIM_SIZE_CAP) -> LeveledGraph:
    """Same poset as :func:`build_onedim_direct`, grown stage by stage by self-similar copies."""
    if N < 0:
        raise ValueError("N must be non-negative")
    check_cap("one-dimensional poset size", N, cap)
    # smallest full stage 2^k - 1 >= N, then truncate
    verts, pairs = _stage(N.bit_length())
    levels = [[] for _ in range(N + 1)]
    for v in verts:
        n = seq_size(v)
        if n <= N:
            levels[n].append(v)
    levels = [sorted(lv) for lv in levels]
    index = [{s: i for i, s in enumerate(lv)} for lv in levels]
    edges = []
    for u, v in pairs:
        n = seq_size(u)
        if n <= N:
            edges.append((n, index[n][u], index[n - 1][v]))
    return _seq_graph(levels, edges)


def unique_onedim_restriction(forest) -> tuple:
    """The single one-dimensional forest in the restriction of ``forest``."""
    found = [g for g in res_forest(forest) if all(is_one_dim(t) for t in g)]
    if len(found) != 1:
        raise ValueError(f"expected one one-dimensional constituent, found {len(found)}")
    return found[0]

