"""Character values and character tables of H_k and P_n.

Rows are irreducible representations, columns conjugacy classes, both indexed
by trees (H_k) or forests (P_n) in canonical order.  Entries are exact
integers; tables are stored as ``numpy`` int64 arrays, whose range is checked
before any product that could overflow.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Optional

import numpy as np

from .errors import check_cap
from .groups import class_size_tree, order_Hk, order_Pn
from .trees import (
    ORDER_NOTE,
    TREE_HEIGHT_CAP,
    Tree,
    bin_expansion,
    dim_forest,
    dim_tree,
    enumerate_trees,
    format_forest,
    format_tree,
    forests_of_size,
)

TABLE_ROW_CAP = 1000

_INT64_SAFE = 1 << 62


@lru_cache(maxsize=None)
def _chi(rep: Tree, cls: Tree) -> int:
    if rep.is_leaf:
        return 1
    if len(cls.children) == 1:
        # class (Id, s)^-1: extensions give +/- phi(s), induced ones vanish
        (s,) = cls.children
        if len(rep.children) == 1:
            return -_chi(rep.children[0], s)
        a, b = rep.children
        return _chi(a, s) if a is b else 0
    s1, s2 = cls.children
    if len(rep.children) == 1:
        phi = rep.children[0]
        return _chi(phi, s1) * _chi(phi, s2)
    a, b = rep.children
    if a is b:
        return _chi(a, s1) * _chi(a, s2)
    return _chi(a, s1) * _chi(b, s2) + _chi(a, s2) * _chi(b, s1)


def char_value(rep: Tree, cls: Tree) -> int:
    """Value of the irreducible character labelled ``rep`` on the class labelled ``cls``."""
    if rep.height != cls.height:
        raise ValueError(f"height mismatch: rep has height {rep.height}, class has height {cls.height}")
    return _chi(rep, cls)


def char_value_forest(rep, cls) -> int:
    if [t.height for t in rep] != [t.height for t in cls]:
        raise ValueError("forests of different sizes")
    value = 1
    for r, c in zip(rep, cls):
        value *= _chi(r, c)
    return value


@dataclass
class CharacterTable:
    rows: list
    cols: list
    values: np.ndarray
    class_sizes: np.ndarray
    order: int
    level: Optional[int] = None
    size: Optional[int] = None
    dims: list = field(default=None)

    def __post_init__(self):
        self.values.setflags(write=False)
        self.class_sizes.setflags(write=False)
        if self.dims is None:
            self.dims = [self._dim(r) for r in self.rows]

    @staticmethod
    def _dim(label) -> int:
        return dim_tree(label) if isinstance(label, Tree) else dim_forest(label)

    def label(self, x) -> str:
        return format_tree(x) if isinstance(x, Tree) else format_forest(x)

    def entry(self, rep, cls) -> int:
        return int(self.values[self.rows.index(rep), self.cols.index(cls)])

    def to_lists(self) -> list:
        return [[int(v) for v in row] for row in self.values]

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["irrep\\class"] + [self.label(c) for c in self.cols])
        for r, row in zip(self.rows, self.values):
            w.writerow([self.label(r)] + [int(v) for v in row])
        return buf.getvalue()

    def to_json(self) -> str:
        obj = {
            "group": f"H_{self.level}" if self.level is not None else f"P_{self.size}",
            "order": self.order,
            "index_order": ORDER_NOTE,
            "rows": [self.label(r) for r in self.rows],
            "cols": [self.label(c) for c in self.cols],
            "class_sizes": [int(s) for s in self.class_sizes],
            "values": self.to_lists(),
        }
        return json.dumps(obj, indent=1)

    def to_text(self) -> str:
        rows = [self.label(r) for r in self.rows]
        cols = [self.label(c) for c in self.cols]
        width = max(len(s) for s in rows)
        cw = [max(len(c), max(len(str(int(v))) for v in self.values[:, j])) for j, c in enumerate(cols)]
        lines = [f"# {ORDER_NOTE}"]
        lines.append(" " * width + " | " + " ".join(c.rjust(w) for c, w in zip(cols, cw)))
        for r, row in zip(rows, self.values):
            lines.append(r.ljust(width) + " | " + " ".join(str(int(v)).rjust(w) for v, w in zip(row, cw)))
        lines.append("size".ljust(width) + " | " + " ".join(str(int(s)).rjust(w) for s, w in zip(self.class_sizes, cw)))
        return "\n".join(lines) + "\n"


@lru_cache(maxsize=None)
def _template_table(k: int) -> np.ndarray:
    """Values of H_k assembled block-wise from the H_{k-1} table."""
    if k == 0:
        return np.ones((1, 1), dtype=np.int64)
    prev = _template_table(k - 1)
    lower = enumerate_trees(k - 1, cap=None)
    idx = {t: i for i, t in enumerate(lower)}
    trees = enumerate_trees(k, cap=None)
    out = np.zeros((len(trees), len(trees)), dtype=np.int64)
    for j, cls in enumerate(trees):
        if len(cls.children) == 1:
            s = idx[cls.children[0]]
            for i, rep in enumerate(trees):
                kind = len(rep.children)
                if kind == 1:
                    out[i, j] = -prev[idx[rep.children[0]], s]
                elif rep.children[0] is rep.children[1]:
                    out[i, j] = prev[idx[rep.children[0]], s]
            continue
        s1, s2 = (idx[c] for c in cls.children)
        for i, rep in enumerate(trees):
            if len(rep.children) == 1 or rep.children[0] is rep.children[1]:
                p = idx[rep.children[0]]
                out[i, j] = prev[p, s1] * prev[p, s2]
            else:
                p, q = (idx[c] for c in rep.children)
                out[i, j] = prev[p, s1] * prev[q, s2] + prev[p, s2] * prev[q, s1]
    return out


def build_table_Hk(k: int, cap: Optional[int] = TREE_HEIGHT_CAP) -> CharacterTable:
    if k < 0:
        raise ValueError("height must be non-negative")
    check_cap("table height", k, cap)
    trees = enumerate_trees(k, cap=None)
    return CharacterTable(
        rows=trees,
        cols=list(trees),
        values=_template_table(k),
        class_sizes=np.array([class_size_tree(t) for t in trees], dtype=np.int64),
        order=order_Hk(k),
        level=k,
    )


def build_table_Pn(n: int, cap: Optional[int] = TABLE_ROW_CAP, height_cap: Optional[int] = TREE_HEIGHT_CAP) -> CharacterTable:
    """Kronecker product of the H_k tables over the binary digits of n, largest first."""
    if n < 0:
        raise ValueError("size must be non-negative")
    ks = bin_expansion(n)
    for k in ks:
        check_cap("table height", k, height_cap)
    rows = 1
    for k in ks:
        rows *= len(enumerate_trees(k, cap=None))
    check_cap("table rows", rows, cap)
    values = np.ones((1, 1), dtype=np.int64)
    sizes = np.ones(1, dtype=np.int64)
    for k in ks:
        t = build_table_Hk(k, cap=None)
        values = np.kron(values, t.values)
        sizes = np.kron(sizes, t.class_sizes)
    forests = forests_of_size(n, cap=None)
    return CharacterTable(
        rows=forests,
        cols=list(forests),
        values=values,
        class_sizes=sizes,
        order=order_Pn(n),
        size=n,
    )


def direct_table(trees) -> np.ndarray:
    """Table entries from the memoized recursion, for cross-checking the template."""
    return np.array([[char_value(r, c) for c in trees] for r in trees], dtype=np.int64)


@dataclass
class Check:
    name: str
    passed: bool
    counterexample: Optional[str] = None


@dataclass
class TableReport:
    checks: list

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def __str__(self):
        lines = []
        for c in self.checks:
            line = f"{'PASS' if c.passed else 'FAIL'} {c.name}"
            if c.counterexample:
                line += f": {c.counterexample}"
            lines.append(line)
        return "\n".join(lines)


def _as_exact(a: np.ndarray, bound: int) -> np.ndarray:
    # switch to Python ints when int64 products could overflow
    return a if bound < _INT64_SAFE else a.astype(object)


def verify_table(tbl: CharacterTable) -> TableReport:
    """Orthogonality and dimension checks for a character table."""
    G = tbl.order
    X = tbl.values
    sizes = tbl.class_sizes
    n = X.shape[0]
    checks = []
    if X.shape != (n, n) or len(sizes) != n:
        return TableReport([Check("square", False, f"shape {X.shape}, {len(sizes)} class sizes")])
    maxabs = int(np.abs(X).max()) if n else 0
    bound = n * int(sizes.max()) * maxabs * maxabs + G
    Xe = _as_exact(X, bound)
    Se = _as_exact(sizes, bound)

    # rows: sum_j |C_j| chi_r(j) chi_s(j) = |G| delta_rs
    gram = (Xe * Se) @ Xe.T
    bad = _first_offdiag(gram, G)
    checks.append(Check("row orthogonality", bad is None, _describe(bad, tbl.rows, tbl.rows, tbl.label)))

    # columns: sum_r chi_r(i) chi_r(j) = |G| / |C_i| delta_ij
    colgram = Xe.T @ Xe
    bad = None
    for i in range(n):
        for j in range(n):
            want = G // int(sizes[i]) if i == j else 0
            if i == j and G % int(sizes[i]):
                want = None
            if colgram[i, j] != want:
                bad = (i, j, int(colgram[i, j]), want)
                break
        if bad:
            break
    checks.append(Check("column orthogonality", bad is None, _describe(bad, tbl.cols, tbl.cols, tbl.label)))

    total = sum(d * d for d in tbl.dims)
    checks.append(Check("sum of squared dimensions", total == G,
                        None if total == G else f"sum {total} != |G| {G}"))

    # the identity class is the first column in canonical order
    cex = None
    if int(sizes[0]) != 1:
        cex = f"first class {tbl.label(tbl.cols[0])} has size {int(sizes[0])}"
    else:
        for i in range(n):
            if int(X[i, 0]) != tbl.dims[i]:
                cex = f"row {tbl.label(tbl.rows[i])}: first column {int(X[i, 0])}, dim {tbl.dims[i]}"
                break
    checks.append(Check("identity column equals dimensions", cex is None, cex))

    return TableReport(checks)


def _first_offdiag(gram, diag_value):
    n = gram.shape[0]
    for i in range(n):
        for j in range(n):
            want = diag_value if i == j else 0
            if gram[i, j] != want:
                return (i, j, int(gram[i, j]), want)
    return None


def _describe(bad, rows, cols, label):
    if bad is None:
        return None
    i, j, got, want = bad
    return f"({label(rows[i])}, {label(cols[j])}): got {got}, expected {want}"
