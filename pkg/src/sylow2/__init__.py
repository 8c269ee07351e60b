"""Exact representation theory of the 2-Sylow subgroups of symmetric groups,
organized around forests of 1-2 binary trees."""

from .trees import LEAF, Tree, node, parse_tree, format_tree

__version__ = "0.1.0"

__all__ = ["LEAF", "Tree", "node", "parse_tree", "format_tree"]
