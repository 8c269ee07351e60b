"""Leveled graphs (Bratteli-type diagrams) and their DOT / JSON serializations.

Edges are triples ``(n, i, j)``: vertex ``i`` of level ``n`` covers vertex
``j`` of level ``n - 1``.  Levels are numbered from ``start``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Callable


@dataclass
class LeveledGraph:
    levels: list
    edges: list
    start: int = 0
    label: Callable = field(default=str, repr=False, compare=False)
    to_obj: Callable = field(default=lambda v: v, repr=False, compare=False)

    @property
    def max_level(self) -> int:
        return self.start + len(self.levels) - 1

    def level(self, n: int) -> list:
        return self.levels[n - self.start]

    def level_counts(self) -> list:
        return [len(lv) for lv in self.levels]

    def down(self) -> dict:
        """(n, i) -> list of indices j at level n - 1."""
        out = {}
        for n, i, j in self.edges:
            out.setdefault((n, i), []).append(j)
        return out

    def up(self) -> dict:
        """(n, j) -> list of indices i at level n + 1."""
        out = {}
        for n, i, j in self.edges:
            out.setdefault((n - 1, j), []).append(i)
        return out

    def edge_set(self) -> set:
        """Edges as (upper vertex, lower vertex) pairs of vertex values."""
        return {(self.level(n)[i], self.level(n - 1)[j]) for n, i, j in self.edges}

    def same_graph(self, other: LeveledGraph) -> bool:
        return (self.start == other.start and self.levels == other.levels
                and self.edge_set() == other.edge_set())


def export_json(g: LeveledGraph) -> str:
    obj = {"levels": [[g.to_obj(v) for v in lv] for lv in g.levels],
           "edges": [list(e) for e in sorted(g.edges)]}
    if g.start:
        obj["start"] = g.start
    return json.dumps(obj, separators=(",", ":"), ensure_ascii=False) + "\n"


def _dot_escape(s: str) -> str:
    return s.replace("\\", "\\\\").replace('"', '\\"')


def export_dot(g: LeveledGraph, name: str = "G") -> str:
    lines = [f"digraph {name} {{", "  rankdir=BT;", "  node [shape=box, fontname=monospace];"]
    for offset, lv in enumerate(g.levels):
        n = g.start + offset
        ids = " ".join(f"v{n}_{i};" for i in range(len(lv)))
        lines.append(f"  {{ rank=same; {ids} }}")
        for i, v in enumerate(lv):
            lines.append(f'  v{n}_{i} [label="{_dot_escape(g.label(v))}"];')
    for n, i, j in sorted(g.edges):
        lines.append(f"  v{n - 1}_{j} -> v{n}_{i};")
    lines.append("}")
    return "\n".join(lines) + "\n"
