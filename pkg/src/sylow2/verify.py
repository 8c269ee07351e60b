"""Aggregated invariant suites, as run by ``sylow2 verify``."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from . import bratteli, characters, groups, macdonald, onedim, trees


@dataclass
class SuiteResult:
    name: str
    passed: bool
    detail: str = ""

    def __str__(self):
        line = f"{'PASS' if self.passed else 'FAIL'} {self.name}"
        return line + (f" ({self.detail})" if self.detail else "")


def _counting(level):
    for k in range(level + 1):
        got = len(trees.enumerate_trees(k, cap=None))
        if got != trees.count_trees(k):
            return False, f"height {k}: {got} trees, recurrence {trees.count_trees(k)}"
    return True, f"heights 0..{level}"


def _oracle(level):
    for k in range(level + 1):
        problems = groups.oracle_matches_recursion(k, cap=None)
        if problems:
            return False, f"height {k}: {problems[0]}"
    return True, f"heights 0..{level}"


def _tables(level, max_n):
    for k in range(level + 1):
        tbl = characters.build_table_Hk(k, cap=None)
        report = characters.verify_table(tbl)
        if not report.passed:
            return False, f"H_{k}: {report}"
        if k <= 3 and not (characters.direct_table(tbl.rows) == tbl.values).all():
            return False, f"H_{k}: template and direct recursion disagree"
    for n in range(max_n + 1):
        report = characters.verify_table(characters.build_table_Pn(n, cap=None))
        if not report.passed:
            return False, f"P_{n}: {report}"
    return True, f"H_0..H_{level}, P_0..P_{max_n}"


def _restriction(max_n):
    for n in range(1, max_n + 1):
        for f in trees.forests_of_size(n, cap=None):
            below = bratteli.res_forest(f)
            if len(set(below)) != len(below):
                return False, f"{trees.format_forest(f)} has repeated constituents"
            if sum(trees.dim_forest(g) for g in below) != trees.dim_forest(f):
                return False, f"{trees.format_forest(f)}: dimension not conserved"
            for g in below:
                if f not in bratteli.covers_of(g):
                    return False, f"{trees.format_forest(f)} missing from covers of {trees.format_forest(g)}"
    return True, f"all forests of size 1..{max_n}"


def _self_similar(max_n):
    checked = 0
    for k in range(3):
        for t in trees.enumerate_trees(k, cap=None):
            for m in range(1 << k, min(1 << (k + 1), max_n + 1)):
                r = bratteli.check_self_similar(t, m)
                checked += 1
                if not r.ok:
                    return False, f"{t}, m={m}: {r.violation}"
    return True, f"{checked} (tree, m) pairs"


def _onedim(max_n):
    for N in (1, 3, 7, 15):
        if N > max_n:
            break
        if not onedim.build_onedim_direct(N, cap=None).same_graph(onedim.build_onedim_recursive(N, cap=None)):
            return False, f"direct and recursive builds differ at N={N}"
    for n in range(1, max_n + 1):
        for f in trees.forests_of_size(n, cap=None):
            if trees.dim_forest(f) != 1:
                continue
            if onedim.L_seq(onedim.beta_forest(f)) != onedim.beta_forest(onedim.unique_onedim_restriction(f)):
                return False, f"L and Res do not commute at {trees.format_forest(f)}"
    return True, f"sizes up to {max_n}"


def _mckay(max_n):
    for n in range(1, max_n + 1):
        odd = sum(1 for la in macdonald.partitions(n, cap=None) if macdonald.is_odd_dim(la))
        if odd != onedim.count_onedim(n):
            return False, f"n={n}: {odd} odd-dimensional partitions, {onedim.count_onedim(n)} linear characters"
    return True, f"n = 1..{max_n}"


def _non_isomorphism(max_n):
    N = 16 if max_n >= 16 else 8
    report = macdonald.compare_structures(
        macdonald.build_macdonald(N, cap=None), onedim.build_onedim_direct(N, cap=None), N)
    d = report.first_difference
    if d is None:
        return False, f"no difference up to {N}"
    return True, f"N={N}: {d.invariant} at level {d.level}: {d.first} vs {d.second}"


def run_suites(level: int = 3, max_n: int = 12, cap_level: Optional[int] = 4, cap_n: Optional[int] = 16) -> list:
    from .errors import check_cap

    check_cap("verify level", level, cap_level)
    check_cap("verify max-n", max_n, cap_n)
    suites = [
        ("tree counts", lambda: _counting(level)),
        ("oracle conjugacy classes", lambda: _oracle(level)),
        ("character tables", lambda: _tables(level, max_n)),
        ("restriction: multiplicity-free, dimension, duality", lambda: _restriction(max_n)),
        ("self-similarity", lambda: _self_similar(max_n)),
        ("one-dimensional subposet", lambda: _onedim(max_n)),
    ]
    if max_n >= 1:
        suites.append(("odd-dimensional count", lambda: _mckay(max_n)))
    if max_n >= 8:
        suites.append(("Macdonald tree vs one-dimensional poset", lambda: _non_isomorphism(max_n)))
    results = []
    for name, fn in suites:
        ok, detail = fn()
        results.append(SuiteResult(name, ok, detail))
    return results
