"""Abstract syntax of GP 2 programs."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Optional, Union

from .errors import RecursiveMacro, UndeclaredRule
from .graph import Atom, Mark


class VarType(enum.Enum):
    INT = "int"
    CHAR = "char"
    STRING = "string"
    ATOM = "atom"
    LIST = "list"


# -- label expressions ------------------------------------------------------


@dataclass(frozen=True)
class Const:
    value: Atom


@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class Concat:
    """String concatenation ``s . t``; parts are flattened left to right."""

    parts: tuple[Expr, ...]


@dataclass(frozen=True)
class Arith:
    op: str  # one of + - * /
    lhs: Expr
    rhs: Expr


@dataclass(frozen=True)
class Indeg:
    node: str


@dataclass(frozen=True)
class Outdeg:
    node: str


Expr = Union[Const, Var, Concat, Arith, Indeg, Outdeg]


@dataclass(frozen=True)
class RuleLabel:
    items: tuple[Expr, ...] = ()
    mark: Mark = Mark.NONE


@dataclass(frozen=True)
class RuleNode:
    id: str
    label: RuleLabel
    root: bool = False


@dataclass(frozen=True)
class RuleEdge:
    id: str
    src: str
    tgt: str
    label: RuleLabel


@dataclass(frozen=True)
class RuleGraph:
    nodes: tuple[RuleNode, ...] = ()
    edges: tuple[RuleEdge, ...] = ()

    def node_ids(self) -> list[str]:
        return [n.id for n in self.nodes]

    def node(self, node_id: str) -> RuleNode:
        for n in self.nodes:
            if n.id == node_id:
                return n
        raise KeyError(node_id)

    def edge(self, edge_id: str) -> RuleEdge:
        for e in self.edges:
            if e.id == edge_id:
                return e
        raise KeyError(edge_id)


# -- conditions -------------------------------------------------------------


@dataclass(frozen=True)
class TrueC:
    pass


@dataclass(frozen=True)
class TypeCheck:
    type: VarType
    var: str


@dataclass(frozen=True)
class EdgePred:
    src: str
    tgt: str
    label: Optional[RuleLabel] = None


@dataclass(frozen=True)
class Rel:
    op: str  # one of = != > >= < <=
    lhs: Expr
    rhs: Expr


@dataclass(frozen=True)
class Not:
    cond: Condition


@dataclass(frozen=True)
class And:
    lhs: Condition
    rhs: Condition


@dataclass(frozen=True)
class Or:
    lhs: Condition
    rhs: Condition


Condition = Union[TrueC, TypeCheck, EdgePred, Rel, Not, And, Or]


# -- commands ---------------------------------------------------------------


@dataclass(frozen=True)
class RuleCall:
    names: tuple[str, ...]


@dataclass(frozen=True)
class RuleSetCall:
    names: tuple[str, ...]


@dataclass(frozen=True)
class MacroCall:
    name: str


@dataclass(frozen=True)
class Seq:
    commands: tuple[Command, ...]


@dataclass(frozen=True)
class Loop:
    body: Command


@dataclass(frozen=True)
class If:
    cond: Command
    then: Command
    else_: Command = field(default_factory=lambda: Skip())


@dataclass(frozen=True)
class Try:
    cond: Command
    then: Command
    else_: Command = field(default_factory=lambda: Skip())


@dataclass(frozen=True)
class Skip:
    pass


@dataclass(frozen=True)
class Fail:
    pass


Command = Union[RuleCall, RuleSetCall, MacroCall, Seq, Loop, If, Try, Skip, Fail]


# -- declarations -----------------------------------------------------------


@dataclass(frozen=True)
class RuleDecl:
    name: str
    params: tuple[tuple[str, VarType], ...]
    lhs: RuleGraph
    rhs: RuleGraph
    interface: tuple[str, ...]
    condition: Condition = TrueC()


@dataclass(frozen=True)
class MacroDecl:
    name: str
    body: Command


@dataclass(frozen=True)
class MainDecl:
    body: Command


Declaration = Union[RuleDecl, MacroDecl, MainDecl]


@dataclass(frozen=True)
class Program:
    declarations: tuple[Declaration, ...]

    @property
    def main(self) -> MainDecl:
        mains = [d for d in self.declarations if isinstance(d, MainDecl)]
        if len(mains) != 1:
            raise ValueError(f"program has {len(mains)} Main declarations")
        return mains[0]

    def rules(self) -> list[RuleDecl]:
        return [d for d in self.declarations if isinstance(d, RuleDecl)]

    def macros(self) -> list[MacroDecl]:
        return [d for d in self.declarations if isinstance(d, MacroDecl)]


def rule_lookup(name: str, decls) -> RuleDecl:
    for d in decls:
        if isinstance(d, RuleDecl) and d.name == name:
            return d
    raise UndeclaredRule(f"rule {name!r} is not declared")


def expand_macros(program: Program) -> Program:
    """Replace every macro call by its body and drop macro declarations."""
    bodies = {m.name: m.body for m in program.macros()}
    expanded: dict[str, Command] = {}

    def expand(cmd: Command, active: tuple[str, ...]) -> Command:
        if isinstance(cmd, MacroCall):
            if cmd.name in active:
                cycle = " -> ".join(active[active.index(cmd.name):] + (cmd.name,))
                raise RecursiveMacro(f"recursive macro: {cycle}")
            if cmd.name not in bodies:
                raise UndeclaredRule(f"macro {cmd.name!r} is not declared")
            if cmd.name not in expanded:
                expanded[cmd.name] = expand(bodies[cmd.name], active + (cmd.name,))
            return expanded[cmd.name]
        if isinstance(cmd, Seq):
            return Seq(tuple(expand(c, active) for c in cmd.commands))
        if isinstance(cmd, Loop):
            return Loop(expand(cmd.body, active))
        if isinstance(cmd, (If, Try)):
            return type(cmd)(expand(cmd.cond, active), expand(cmd.then, active), expand(cmd.else_, active))
        return cmd

    # expanding every macro (not just reachable ones) reports cycles in dead code too
    for name in bodies:
        expand(MacroCall(name), ())
    decls = []
    for d in program.declarations:
        if isinstance(d, MacroDecl):
            continue
        if isinstance(d, MainDecl):
            d = MainDecl(expand(d.body, ()))
        decls.append(d)
    return Program(tuple(decls))
