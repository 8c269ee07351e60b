"""Command-line interface.

Exit status: 0 on success, 1 when a verification fails, 2 on usage errors
(including requests beyond a size cap).
"""

from __future__ import annotations

import argparse
import json
import sys
import warnings

from . import bratteli, characters, graphs, groups, macdonald, onedim, trees, verify
from .errors import NonCanonicalTreeWarning, ResourceLimitError, TreeParseError


class UsageError(Exception):
    pass


def _parse_label(text: str):
    text = text.strip()
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always", NonCanonicalTreeWarning)
        value = trees.parse_forest(text) if text.startswith("[") else trees.parse_tree(text)
    for w in caught:
        print(f"note: {w.message}", file=sys.stderr)
    return value


def _emit(text: str, out):
    out.write(text if text.endswith("\n") else text + "\n")


def cmd_trees(args, out):
    ts = trees.enumerate_trees(args.k, cap=args.cap(trees.TREE_HEIGHT_CAP))
    if args.format == "json":
        _emit(json.dumps([trees.tree_to_obj(t) for t in ts]), out)
    elif args.format == "csv":
        _emit("tree,dim,class_size\n" + "".join(
            f"{trees.format_tree(t)},{trees.dim_tree(t)},{groups.class_size_tree(t)}\n" for t in ts), out)
    else:
        _emit("".join(trees.format_tree(t) + "\n" for t in ts), out)


def cmd_forests(args, out):
    fs = trees.forests_of_size(args.n, cap=args.cap(trees.FOREST_SIZE_CAP))
    if args.format == "json":
        _emit(json.dumps([trees.forest_to_obj(f) for f in fs]), out)
    else:
        _emit("".join(trees.format_forest(f) + "\n" for f in fs), out)


def cmd_classes(args, out):
    cap = args.cap(groups.ORACLE_HEIGHT_CAP if args.oracle else trees.TREE_HEIGHT_CAP)
    if args.oracle:
        classes = groups.oracle_conjugacy_classes(args.k, cap=cap)
        problems = groups.oracle_matches_recursion(args.k, cap=cap)
        if args.format == "json":
            _emit(groups.oracle_dump(classes), out)
        else:
            lines = [f"{trees.format_tree(c.tree)}\t{c.size}\t{list(c.cycle_type)}\t{list(c.permutation)}"
                     for c in classes]
            _emit("\n".join(lines), out)
        for p in problems:
            print(f"mismatch: {p}", file=sys.stderr)
        return 1 if problems else 0
    ts = trees.enumerate_trees(args.k, cap=cap)
    rows = [(t, groups.class_size_tree(t), groups.class_cycle_type(t)) for t in ts]
    if args.format == "json":
        _emit(json.dumps([{"tree": trees.format_tree(t), "size": s, "cycle_type": list(ct)}
                          for t, s, ct in rows], indent=1), out)
    elif args.format == "csv":
        _emit("tree,size,cycle_type\n" + "".join(
            f"{trees.format_tree(t)},{s},{' '.join(map(str, ct))}\n" for t, s, ct in rows), out)
    else:
        _emit("".join(f"{trees.format_tree(t)}\t{s}\t{list(ct)}\n" for t, s, ct in rows), out)
    return 0


def cmd_table(args, out):
    if args.group == "hk":
        tbl = characters.build_table_Hk(args.index, cap=args.cap(trees.TREE_HEIGHT_CAP))
    else:
        tbl = characters.build_table_Pn(args.index, cap=args.cap(characters.TABLE_ROW_CAP),
                                        height_cap=args.cap(trees.TREE_HEIGHT_CAP))
    if args.format == "csv":
        _emit(tbl.to_csv(), out)
    elif args.format == "json":
        _emit(tbl.to_json(), out)
    else:
        _emit(tbl.to_text(), out)


def cmd_char(args, out):
    rep = _parse_label(args.rep)
    cls = _parse_label(args.cls)
    if isinstance(rep, trees.Tree) and isinstance(cls, trees.Tree):
        value = characters.char_value(rep, cls)
    else:
        as_forest = lambda x: (x,) if isinstance(x, trees.Tree) else x  # noqa: E731
        value = characters.char_value_forest(as_forest(rep), as_forest(cls))
    _emit(json.dumps(value) if args.format == "json" else str(value), out)


def _graph_out(g, args, out, name):
    fmt = args.format
    if fmt == "dot":
        _emit(graphs.export_dot(g, name), out)
    elif fmt == "json":
        _emit(graphs.export_json(g), out)
    else:
        lines = []
        down = g.down()
        for offset, lv in enumerate(g.levels):
            n = g.start + offset
            lines.append(f"level {n}: {len(lv)} vertices")
            for i, v in enumerate(lv):
                below = [g.label(g.level(n - 1)[j]) for j in down.get((n, i), [])]
                lines.append(f"  {g.label(v)}" + (f" -> {' '.join(below)}" if below else ""))
        _emit("\n".join(lines), out)


def cmd_diagram(args, out):
    g = bratteli.build_diagram(args.N, cap=args.cap(bratteli.DIAGRAM_SIZE_CAP))
    _graph_out(g, args, out, "Bratteli")


def cmd_onedim(args, out):
    build = onedim.build_onedim_recursive if args.recursive else onedim.build_onedim_direct
    g = build(args.N, cap=args.cap(onedim.ONEDIM_SIZE_CAP))
    _graph_out(g, args, out, "OneDim")


def cmd_macdonald(args, out):
    g = macdonald.build_macdonald(args.N, cap=args.cap(macdonald.MACDONALD_SIZE_CAP))
    _graph_out(g, args, out, "Macdonald")


def cmd_compare(args, out):
    if args.N < 8:
        raise UsageError("compare needs N >= 8")
    M = macdonald.build_macdonald(args.N, cap=args.cap(macdonald.MACDONALD_SIZE_CAP))
    O = onedim.build_onedim_direct(args.N, cap=args.cap(onedim.ONEDIM_SIZE_CAP))
    report = macdonald.compare_structures(M, O, args.N)
    if args.format == "json":
        obj = {
            "N": args.N,
            "columns": ["invariant", "level", "macdonald", "onedim"],
            "invariants": [list(row) for row in report.invariants],
            "differences": [[d.invariant, d.level, d.first, d.second] for d in report.differences],
        }
        _emit(json.dumps(obj, indent=1), out)
    else:
        _emit("first = Macdonald tree, second = one-dimensional poset\n" + str(report), out)


def cmd_verify(args, out):
    results = verify.run_suites(args.level, args.max_n,
                                cap_level=args.cap(groups.ORACLE_HEIGHT_CAP),
                                cap_n=args.cap(bratteli.DIAGRAM_SIZE_CAP))
    if args.format == "json":
        _emit(json.dumps([{"suite": r.name, "passed": r.passed, "detail": r.detail} for r in results], indent=1), out)
    else:
        _emit("\n".join(str(r) for r in results), out)
    return 0 if all(r.passed for r in results) else 1


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["text", "json", "csv", "dot"], default="text")
    common.add_argument("--unsafe-cap", action="store_true",
                        help="lift the desk-scale size caps")

    parser = argparse.ArgumentParser(prog="sylow2", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    p = sub.add_parser("trees", parents=[common], help="trees of height k, canonical order")
    p.add_argument("k", type=int)
    p.set_defaults(func=cmd_trees)

    p = sub.add_parser("forests", parents=[common], help="forests of size n")
    p.add_argument("n", type=int)
    p.set_defaults(func=cmd_forests)

    p = sub.add_parser("classes", parents=[common], help="conjugacy classes of H_k")
    p.add_argument("k", type=int)
    p.add_argument("--oracle", action="store_true", help="brute-force the classes and compare")
    p.set_defaults(func=cmd_classes)

    p = sub.add_parser("table", parents=[common], help="character table of H_K or P_N")
    p.add_argument("group", choices=["hk", "pn"])
    p.add_argument("index", type=int)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("char", parents=[common], help="one character value")
    p.add_argument("--rep", required=True, help="irrep tree (or [forest])")
    p.add_argument("--class", dest="cls", required=True, help="class tree (or [forest])")
    p.set_defaults(func=cmd_char)

    for name, func, help_text in [("diagram", cmd_diagram, "Bratteli diagram of sizes 0..N"),
                                  ("onedim", cmd_onedim, "one-dimensional subposet of sizes 0..N"),
                                  ("macdonald", cmd_macdonald, "Macdonald tree of sizes 1..N")]:
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.add_argument("N", type=int)
        p.add_argument("--dot", dest="format", action="store_const", const="dot")
        p.add_argument("--json", dest="format", action="store_const", const="json")
        if name == "onedim":
            p.add_argument("--recursive", action="store_true", help="build by self-similar copies")
        p.set_defaults(func=func)

    p = sub.add_parser("compare", parents=[common], help="Macdonald tree vs one-dimensional poset")
    p.add_argument("N", type=int)
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("verify", parents=[common], help="run every invariant suite")
    p.add_argument("--level", type=int, default=3, help="largest tree height (default 3)")
    p.add_argument("--max-n", type=int, default=12, help="largest forest size (default 12)")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    args.cap = lambda default: None if args.unsafe_cap else default
    try:
        status = args.func(args, out)
    except (ResourceLimitError, TreeParseError, UsageError, ValueError) as e:
        print(f"{parser.prog} {args.command}: error: {e}", file=sys.stderr)
        return 2
    return status or 0


if __name__ == "__main__":
    sys.exit(main())
