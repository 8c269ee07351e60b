"""The odd-dimensional part of Young's lattice, and its comparison with the
one-dimensional poset of the 2-Sylow subgroups."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from math import factorial, prod
from typing import Optional

from .errors import check_cap
from .graphs import LeveledGraph

PARTITION_SIZE_CAP = 25
MACDONALD_SIZE_CAP = 20


def _partitions(n: int, largest: int):
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions(n - first, first):
            yield (first,) + rest


def partitions(n: int, cap: Optional[int] = PARTITION_SIZE_CAP) -> list:
    """Partitions of n as tuples, in descending lexicographic order."""
    if n < 0:
        raise ValueError("n must be non-negative")
    check_cap("partition size", n, cap)
    return list(_partitions(n, n))


def conjugate(la: tuple) -> tuple:
    return tuple(sum(1 for part in la if part > j) for j in range(la[0])) if la else ()


def hook_lengths(la: tuple) -> list:
    lc = conjugate(la)
    return [la[i] - j + lc[j] - i - 1 for i in range(len(la)) for j in range(la[i])]


@lru_cache(maxsize=None)
def sn_dimension(la: tuple) -> int:
    """Dimension of the Specht module S^la by the hook-length formula."""
    la = tuple(la)
    n = sum(la)
    check_cap("partition size", n, PARTITION_SIZE_CAP)
    num = factorial(n)
    den = prod(hook_lengths(la))
    q, r = divmod(num, den)
    assert r == 0
    return q


def is_odd_dim(la: tuple) -> bool:
    return sn_dimension(tuple(la)) % 2 == 1


def remove_box(la: tuple) -> list:
    """Partitions obtained by deleting one removable box, in descending lex order."""
    out = []
    for i, part in enumerate(la):
        if i + 1 == len(la) or la[i + 1] < part:
            mu = la[:i] + (part - 1,) + la[i + 1:]
            out.append(tuple(p for p in mu if p))
    return sorted(out, reverse=True)


def format_partition(la: tuple) -> str:
    return "[" + ",".join(map(str, la)) + "]"


class MacdonaldGraph(LeveledGraph):
    pass


def build_macdonald(N: int, cap: Optional[int] = MACDONALD_SIZE_CAP) -> MacdonaldGraph:
    """Odd-dimensional partitions of 1..N with single-box inclusions as edges."""
    if N < 1:
        raise ValueError("N must be at least 1")
    check_cap("Macdonald tree size", N, cap)
    levels = [[la for la in partitions(n, cap=None) if is_odd_dim(la)] for n in range(1, N + 1)]
    edges = []
    for n in range(2, N + 1):
        index = {mu: j for j, mu in enumerate(levels[n - 2])}
        for i, la in enumerate(levels[n - 1]):
            edges.extend((n, i, index[mu]) for mu in remove_box(la) if mu in index)
    edges.sort()
    return MacdonaldGraph(levels=levels, edges=edges, start=1,
                          label=format_partition, to_obj=list)


# -- structural comparison -----------------------------------------------------


def _invariants(g: LeveledGraph, N: int) -> list:
    """(name, level, value) rows for levels 1..N."""
    up = g.up()
    rows = []
    for n in range(1, N + 1):
        rows.append(("vertices", n, len(g.level(n))))
    for n in range(1, N):
        two = sum(1 for j in range(len(g.level(n))) if len(up.get((n, j), ())) == 2)
        rows.append(("vertices with two upward covers", n, two))
    k = 0
    while (1 << (k + 1)) <= N:
        lo, hi = 1 << k, 1 << (k + 1)
        counts = []
        for j in range(len(g.level(lo))):
            frontier = {j}
            for n in range(lo, hi):
                frontier = {i for v in frontier for i in up.get((n, v), ())}
            counts.append(len(frontier))
        rows.append(("power-of-2 vertices with two extensions to the next power of 2", lo,
                     sum(1 for c in counts if c == 2)))
        k += 1
    return rows


@dataclass
class Difference:
    invariant: str
    level: int
    first: int
    second: int


@dataclass
class ComparisonReport:
    N: int
    invariants: list = field(default_factory=list)
    differences: list = field(default_factory=list)

    @property
    def first_difference(self) -> Optional[Difference]:
        return self.differences[0] if self.differences else None

    def __str__(self):
        lines = [f"{'invariant':<66} {'level':>5} {'first':>6} {'second':>6}"]
        for name, n, a, b in self.invariants:
            mark = "  *" if a != b else ""
            lines.append(f"{name:<66} {n:>5} {a:>6} {b:>6}{mark}")
        d = self.first_difference
        if d is None:
            lines.append("no structural difference found")
        else:
            lines.append(f"first difference: {d.invariant} at level {d.level}: {d.first} vs {d.second}")
        return "\n".join(lines)


def compare_structures(first: LeveledGraph, second: LeveledGraph, N: int) -> ComparisonReport:
    """Compare two leveled graphs on levels 1..N by counts of vertices, of
    two-way branchings, and of vertices on a power-of-2 level with exactly two
    descendants at the next power-of-2 level."""
    for g in (first, second):
        if g.start > 1 or g.max_level < N:
            raise ValueError(f"graph covers levels {g.start}..{g.max_level}, need 1..{N}")
    a = _invariants(first, N)
    b = _invariants(second, N)
    report = ComparisonReport(N)
    for (name, n, x), (_, _, y) in zip(a, b):
        report.invariants.append((name, n, x, y))
        if x != y:
            report.differences.append(Difference(name, n, x, y))
    return report
