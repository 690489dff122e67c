"""Command-line front end.

``gp2 [--one] PROGRAM GRAPH MAXAPPS`` runs a program and prints a report;
``gp2 gen ...`` prints a generated host graph; ``gp2 corpus NAME`` prints a
bundled benchmark program.
"""

from __future__ import annotations

import argparse
import sys
from importlib import resources
from pathlib import Path
from typing import Sequence

from . import generators
from .checker import check
from .errors import GP2Error
from .evaluator import EvalOutput, Mode, eval_program
from .graph import HostGraph
from .parser import parse_host_graph, parse_program
from .printer import format_host_graph

CORPUS = ("transitive_closure", "vertex_colouring", "shortest_distances", "acyclicity", "sierpinski")


def corpus_text(name: str) -> str:
    """Source of a bundled program; ``-`` and ``_`` are interchangeable in ``name``."""
    name = name.replace("-", "_")
    if name not in CORPUS:
        raise KeyError(f"unknown corpus program {name!r}; choose from {', '.join(CORPUS)}")
    return resources.files("gp2").joinpath("corpus", f"{name}.gp2").read_text(encoding="utf-8")


def generate_host(kind: str, *sizes: int, grey_corner: bool = True) -> HostGraph:
    if kind == "linear":
        return generators.linear(*sizes)
    if kind == "cyclic":
        return generators.cyclic(*sizes)
    if kind == "grid":
        return generators.grid(*sizes, grey_corner=grey_corner)
    if kind == "gen":
        return generators.gen(*sizes)
    raise ValueError(f"unknown graph family {kind!r}")


def format_report(out: EvalOutput) -> str:
    lines = [f"Classes: {len(out.classes)}"]
    for i, c in enumerate(out.classes, 1):
        lines.append(f"Class {i}: {c.count} x")
        lines.append(format_host_graph(c.representative))
    lines.append(f"Failures: {out.failures}")
    lines.append(f"Unfinished: {out.unfinished}")
    if out.apps is None:
        apps = "none"
    elif out.apps[0] == out.apps[1]:
        apps = str(out.apps[0])
    else:
        apps = f"{out.apps[0]}-{out.apps[1]}"
    lines.append(f"Apps: {apps}")
    return "\n".join(lines) + "\n"


def run_files(program_path: str, graph_path: str, max_apps: int, mode: Mode) -> str:
    program = check(parse_program(Path(program_path).read_text(encoding="utf-8")))
    host = parse_host_graph(Path(graph_path).read_text(encoding="utf-8"))
    return format_report(eval_program(program, host, max_apps, mode))


def _non_negative(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be non-negative: {value}")
    return value


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be at least 1: {value}")
    return value


def _gen_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="gp2 gen", description="Print a generated host graph.")
    sub = p.add_subparsers(dest="kind", required=True)
    for kind in ("linear", "cyclic"):
        sub.add_parser(kind).add_argument("n", type=_positive)
    g = sub.add_parser("grid")
    g.add_argument("x", type=_positive)
    g.add_argument("y", type=_positive)
    g.add_argument("--plain", action="store_true", help="leave the top-left node unmarked")
    sub.add_parser("gen").add_argument("n", type=_non_negative)
    return p


def _run_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="gp2",
        description="Run a GP 2 program on a host graph.",
        epilog="Other forms: 'gp2 gen FAMILY SIZE...' and 'gp2 corpus NAME'.",
    )
    p.add_argument("--one", action="store_true", help="single-result mode: follow only the first branch")
    p.add_argument("program")
    p.add_argument("graph")
    p.add_argument("max_apps", type=_non_negative, metavar="MAXAPPS")
    return p


def main(argv: Sequence[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        if argv[:1] == ["gen"]:
            a = _gen_parser().parse_args(argv[1:])
            sizes = (a.x, a.y) if a.kind == "grid" else (a.n,)
            g = generate_host(a.kind, *sizes, grey_corner=not getattr(a, "plain", False))
            sys.stdout.write(format_host_graph(g) + "\n")
            return 0
        if argv[:1] == ["corpus"]:
            if len(argv) != 2:
                print(f"usage: gp2 corpus NAME  (one of: {', '.join(CORPUS)})", file=sys.stderr)
                return 2
            sys.stdout.write(corpus_text(argv[1]))
            return 0
        a = _run_parser().parse_args(argv)
    except SystemExit as exc:
        # argparse exits with 2 on usage errors and 0 for --help
        return int(exc.code or 0)
    except KeyError as exc:
        print(f"gp2: {exc.args[0]}", file=sys.stderr)
        return 2

    try:
        report = run_files(a.program, a.graph, a.max_apps, Mode.SINGLE_RESULT if a.one else Mode.ALL_RESULTS)
    except (GP2Error, OSError) as exc:
        print(f"gp2: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    sys.stdout.write(report)
    return 0


if __name__ == "__main__":
    sys.exit(main())
