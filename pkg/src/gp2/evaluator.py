"""Branching evaluation of GP 2 command sequences.

Each nondeterministic branch of a run is tracked as a :class:`GraphState`.
Evaluating a command maps one state to a lazily produced sequence of states,
so single-result mode only pays for the first branch.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import chain
from typing import Iterable, Iterator, Union

from . import ast
from .checker import CheckedProgram
from .graph import HostGraph
from .isomorphism import IsoClass, partition_classes
from .rules import apply_rule


@dataclass(frozen=True, eq=False)
class Active:
    graph: HostGraph
    count: int


@dataclass(frozen=True)
class Failed:
    count: int


@dataclass(frozen=True)
class Unfinished:
    pass


GraphState = Union[Active, Failed, Unfinished]


class Mode(enum.Enum):
    ALL_RESULTS = "all"
    SINGLE_RESULT = "one"


@dataclass
class EvalOutput:
    classes: list[IsoClass]
    failures: int = 0
    unfinished: int = 0
    # smallest and largest application count over finished branches
    apps: tuple[int, int] | None = None

    @property
    def total(self) -> int:
        return sum(c.count for c in self.classes)


def eval_command(
    program: CheckedProgram, cmd: ast.Command, st: GraphState, max_apps: int
) -> Iterator[GraphState]:
    if not isinstance(st, Active):
        yield st
        return
    g, count = st.graph, st.count

    if isinstance(cmd, (ast.RuleCall, ast.RuleSetCall)):
        if count >= max_apps:
            yield Unfinished()
            return
        results = chain.from_iterable(apply_rule(g, program.rules[name]) for name in cmd.names)
        first = next(results, None)
        if first is None:
            yield Failed(count)
            return
        yield Active(first, count + 1)
        for h in results:
            yield Active(h, count + 1)

    elif isinstance(cmd, ast.Seq):
        yield from _eval_seq(program, cmd.commands, st, max_apps)

    elif isinstance(cmd, ast.Loop):
        yield from _eval_loop(program, cmd.body, st, max_apps)

    elif isinstance(cmd, (ast.If, ast.Try)):
        # every terminal state of the condition picks a branch on its own.
        # The else branch always starts from the original graph but keeps the
        # count carried by the failure; the then branch of an if starts from
        # the original graph and count.
        for r in eval_command(program, cmd.cond, st, max_apps):
            if isinstance(r, Active):
                yield from eval_command(program, cmd.then, r if isinstance(cmd, ast.Try) else st, max_apps)
            elif isinstance(r, Failed):
                yield from eval_command(program, cmd.else_, Active(g, r.count), max_apps)
            else:
                yield r

    elif isinstance(cmd, ast.Skip):
        yield st

    elif isinstance(cmd, ast.Fail):
        yield Failed(count)

    else:
        raise TypeError(f"cannot evaluate {cmd!r}")


def _eval_seq(program, commands, st, max_apps) -> Iterator[GraphState]:
    head, rest = commands[0], commands[1:]
    for r in eval_command(program, head, st, max_apps):
        if rest and isinstance(r, Active):
            yield from _eval_seq(program, rest, r, max_apps)
        else:
            yield r


def _eval_loop(program, body, st: Active, max_apps) -> Iterator[GraphState]:
    # depth-first over iterations with an explicit stack; each frame holds the
    # state an iteration was entered with and that iteration's pending results
    stack = [(st, eval_command(program, body, st, max_apps))]
    while stack:
        entry, pending = stack[-1]
        r = next(pending, None)
        if r is None:
            stack.pop()
        elif isinstance(r, Failed):
            yield entry
        elif isinstance(r, Unfinished):
            yield r
        elif r.count == entry.count:
            # no rule was applied, so the graph is unchanged and the
            # iteration would repeat forever
            yield Unfinished()
        else:
            stack.append((r, eval_command(program, body, r, max_apps)))


def run(program: CheckedProgram, g0: HostGraph, max_apps: int) -> Iterator[GraphState]:
    """Every terminal state of the main command, in enumeration order."""
    return eval_command(program, program.main, Active(g0, 0), max_apps)


def collate(states: Iterable[GraphState]) -> EvalOutput:
    out = EvalOutput(classes=[])
    counts: list[int] = []

    def finished_graphs():
        for st in states:
            if isinstance(st, Unfinished):
                out.unfinished += 1
                continue
            counts.append(st.count)
            if isinstance(st, Failed):
                out.failures += 1
            else:
                yield st.graph

    out.classes = partition_classes(finished_graphs())
    if counts:
        out.apps = (min(counts), max(counts))
    return out


def eval_program(program: CheckedProgram, g0: HostGraph, max_apps: int, mode: Mode = Mode.ALL_RESULTS) -> EvalOutput:
    states = run(program, g0, max_apps)
    if mode is Mode.SINGLE_RESULT:
        first = next(states, None)
        return collate([] if first is None else [first])
    return collate(states)
