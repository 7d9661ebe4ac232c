"""Command-line front end: ``python -m liec <command> ...``.

Exit codes: 0 success, 1 non-colorable input to ``solve``, 2 invalid input,
3 internal solver bug.
"""
from __future__ import annotations

import argparse
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from . import generators
from .cactus import cactus_liec
from .classify import classify, format_class
from .coloring import format_coloring, parse_coloring, verify_liec
from .errors import LiecError, NonColorableError, SolverBug
from .graph import Graph, format_edge_list, parse_edge_list
from .oracle import DEFAULT_MAX_EDGES, exact_chi_irr

OK, NONCOLORABLE, INVALID, BUG = 0, 1, 2, 3

PALETTE = {1: "red", 2: "blue", 3: "forestgreen", 4: "orange"}


class UsageError(LiecError):
    pass


def _read_graph(path: str) -> Graph:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    return parse_edge_list(text)


def _emit(text: str, out: str | None, force: bool) -> None:
    if out is None:
        sys.stdout.write(text)
        return
    target = Path(out)
    if target.exists() and not force:
        raise UsageError(f"{out} exists; pass --force to overwrite")
    target.write_text(text)


def _solve_one(path: str):
    """Worker for ``solve``: returns (exit code, coloring text, message)."""
    try:
        g = _read_graph(path)
        col = cactus_liec(g)
    except NonColorableError as exc:
        return NONCOLORABLE, None, format_class(exc.klass)
    except SolverBug as exc:
        return BUG, None, f"internal error: {exc}"
    except LiecError as exc:
        return INVALID, None, str(exc)
    return OK, format_coloring(col), f"{col.k} colors"


def cmd_solve(args) -> int:
    if len(args.inputs) > 1 and args.out:
        raise UsageError("--out needs a single input; several inputs write <input>.col")
    if args.jobs > 1 and len(args.inputs) > 1:
        with ProcessPoolExecutor(args.jobs) as pool:
            results = list(pool.map(_solve_one, args.inputs))
    else:
        results = [_solve_one(p) for p in args.inputs]
    worst = OK
    for path, (code, text, message) in zip(args.inputs, results):
        prefix = f"{path}: " if len(args.inputs) > 1 else ""
        if code == OK:
            if len(args.inputs) > 1:
                _emit(text, path + ".col", args.force)
            elif args.out:
                _emit(text, args.out, args.force)
            else:
                text = f"# {message}\n" + text
                _emit(text, None, False)
                message = None
        if message is not None:
            stream = sys.stdout if code in (OK, NONCOLORABLE) else sys.stderr
            print(prefix + ("not colorable: " if code == NONCOLORABLE else "") + message,
                  file=stream)
        worst = max(worst, code)
    return worst


def cmd_verify(args) -> int:
    g = _read_graph(args.graph)
    try:
        text = Path(args.coloring).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {args.coloring}: {exc.strerror}") from None
    report = verify_liec(parse_coloring(text, g))
    lab = g.labels
    lines = ["VALID" if report.valid else "INVALID"]
    lines += [f"{lab[u]} {lab[v]} {c}" for (u, v), c in report.violations]
    _emit("\n".join(lines) + "\n", args.out, args.force)
    return OK


def cmd_classify(args) -> int:
    g = _read_graph(args.graph)
    _emit(format_class(classify(g), g.labels) + "\n", args.out, args.force)
    return OK


def cmd_exact(args) -> int:
    g = _read_graph(args.graph)
    k = exact_chi_irr(g, args.kmax, max_edges=args.max_edges)
    _emit(("NONE" if k is None else str(k)) + "\n", args.out, args.force)
    return OK


GENERATORS = {
    "bowtie": lambda a: generators.gen_bowtie(),
    "tree": lambda a: generators.gen_random_tree(a.n, a.seed),
    "cactus": lambda a: generators.gen_random_cactus(a.n, a.cycles, a.seed),
    "grape": lambda a: generators.gen_random_grape(a.n, a.cycles, a.seed),
    "tmember": lambda a: generators.gen_T_member(a.seed, a.steps),
    "path": lambda a: generators.gen_path(a.n - 1),
    "cycle": lambda a: generators.gen_cycle(a.n),
}


def cmd_gen(args) -> int:
    g = GENERATORS[args.kind](args)
    _emit(format_edge_list(g), args.out, args.force)
    return OK


def to_dot(g: Graph, coloring=None) -> str:
    lab = g.labels
    lines = ["graph G {"]
    lines += [f"  {lab[v]};" for v in range(g.n) if not g.degree(v)]
    for u, v in g.edges:
        attrs = ""
        if coloring is not None:
            c = coloring[u, v]
            attrs = f' [color="{PALETTE.get(c, "black")}", label="{c}"]'
        lines.append(f"  {lab[u]} -- {lab[v]}{attrs};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def cmd_export_dot(args) -> int:
    g = _read_graph(args.graph)
    coloring = None
    if args.coloring:
        try:
            coloring = parse_coloring(Path(args.coloring).read_text(), g)
        except OSError as exc:
            raise UsageError(f"cannot read {args.coloring}: {exc.strerror}") from None
    _emit(to_dot(g, coloring), args.out, args.force)
    return OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="liec", description="Locally irregular edge colorings.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--out", help="write output to this file instead of stdout")
        p.add_argument("--force", action="store_true", help="overwrite existing output files")
        return p

    p = common(sub.add_parser("solve", help="color a cactus with at most 4 colors"))
    p.add_argument("inputs", nargs="+", metavar="GRAPH")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_solve)

    p = common(sub.add_parser("verify", help="check a coloring"))
    p.add_argument("graph")
    p.add_argument("coloring")
    p.set_defaults(func=cmd_verify)

    p = common(sub.add_parser("classify", help="colorable or which obstruction"))
    p.add_argument("graph")
    p.set_defaults(func=cmd_classify)

    p = common(sub.add_parser("exact", help="exhaustive chromatic index"))
    p.add_argument("graph")
    p.add_argument("--kmax", type=int, default=4)
    p.add_argument("--max-edges", type=int, default=DEFAULT_MAX_EDGES)
    p.set_defaults(func=cmd_exact)

    p = common(sub.add_parser("gen", help="write a generated edge list"))
    p.add_argument("kind", choices=sorted(GENERATORS))
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--n", type=int, default=10)
    p.add_argument("--cycles", type=int, default=2)
    p.add_argument("--steps", type=int, default=2)
    p.set_defaults(func=cmd_gen)

    p = common(sub.add_parser("export-dot", help="Graphviz rendering, colored if a coloring is given"))
    p.add_argument("graph")
    p.add_argument("coloring", nargs="?")
    p.set_defaults(func=cmd_export_dot)
    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return OK if exc.code == 0 else INVALID
    try:
        return args.func(args)
    except SolverBug as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return BUG
    except (LiecError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return INVALID


def main() -> None:
    sys.exit(run())
