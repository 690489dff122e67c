"""Static checks and the translation of rule declarations into rule schemata."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from . import ast
from .ast import VarType
from .errors import (
    DuplicateDeclaration,
    InterfaceNotInBothSides,
    LhsExpressionForbidden,
    MarkOnWrongEntity,
    NoMain,
    PreservedEdgeMismatch,
    TwoListVariablesInLabel,
    TwoStringVariablesInConcat,
    TypeMismatch,
    UndeclaredRule,
    UndeclaredVariable,
    UnknownNodeReference,
    VariableNotInLHS,
)
from .graph import Mark


@dataclass(frozen=True, eq=False)
class RuleSchema:
    """A checked rule, with node and edge ids split by what application does to them."""

    name: str
    var_types: Mapping[str, VarType]
    lhs: ast.RuleGraph
    rhs: ast.RuleGraph
    interface: frozenset[str]
    condition: ast.Condition
    deleted_nodes: tuple[str, ...]
    created_nodes: tuple[str, ...]
    preserved_edges: tuple[str, ...]
    deleted_edges: tuple[str, ...]
    created_edges: tuple[str, ...]


@dataclass(frozen=True, eq=False)
class CheckedProgram:
    main: ast.Command
    rules: Mapping[str, RuleSchema]


# expression "shapes" used for type checking
_INT, _STR, _ATOM, _LIST = "int", "string", "atom", "list"
_VAR_SHAPE = {
    VarType.INT: _INT,
    VarType.CHAR: _STR,
    VarType.STRING: _STR,
    VarType.ATOM: _ATOM,
    VarType.LIST: _LIST,
}


def check(program: ast.Program) -> CheckedProgram:
    """Validate ``program`` and build its rule schemata; raises a CheckError subclass."""
    mains = [d for d in program.declarations if isinstance(d, ast.MainDecl)]
    if not mains:
        raise NoMain("program has no Main declaration")
    if len(mains) > 1:
        raise DuplicateDeclaration("program declares Main more than once")
    seen: set[str] = set()
    for d in program.declarations:
        if isinstance(d, (ast.RuleDecl, ast.MacroDecl)):
            if d.name in seen:
                raise DuplicateDeclaration(f"{d.name!r} is declared more than once")
            seen.add(d.name)

    flat = ast.expand_macros(program)
    rules = {d.name: check_rule(d) for d in flat.rules()}
    main = flat.main.body
    _check_calls(main, rules)
    return CheckedProgram(main, rules)


def _check_calls(cmd: ast.Command, rules) -> None:
    if isinstance(cmd, (ast.RuleCall, ast.RuleSetCall)):
        for name in cmd.names:
            if name not in rules:
                raise UndeclaredRule(f"rule {name!r} is not declared")
    elif isinstance(cmd, ast.Seq):
        for c in cmd.commands:
            _check_calls(c, rules)
    elif isinstance(cmd, ast.Loop):
        _check_calls(cmd.body, rules)
    elif isinstance(cmd, (ast.If, ast.Try)):
        for c in (cmd.cond, cmd.then, cmd.else_):
            _check_calls(c, rules)


def check_rule(decl: ast.RuleDecl) -> RuleSchema:
    where = f"rule {decl.name}"
    var_types: dict[str, VarType] = {}
    for name, t in decl.params:
        if name in var_types:
            raise DuplicateDeclaration(f"{where}: variable {name!r} declared twice")
        var_types[name] = t

    _check_graph_shape(decl.lhs, f"{where} left-hand side")
    _check_graph_shape(decl.rhs, f"{where} right-hand side")

    lhs_ids = set(decl.lhs.node_ids())
    rhs_ids = set(decl.rhs.node_ids())
    interface = frozenset(decl.interface)
    for i in decl.interface:
        if i not in lhs_ids or i not in rhs_ids:
            raise InterfaceNotInBothSides(f"{where}: interface node {i!r} must occur in both sides")

    lhs_vars: set[str] = set()
    for n in decl.lhs.nodes:
        lhs_vars |= _check_lhs_label(n.label, var_types, f"{where} node {n.id}", is_edge=False)
    for e in decl.lhs.edges:
        lhs_vars |= _check_lhs_label(e.label, var_types, f"{where} edge {e.id}", is_edge=True)

    scope = _Scope(var_types, lhs_vars, lhs_ids, where)
    for n in decl.rhs.nodes:
        _check_mark(n.label, is_edge=False, where=f"{where} node {n.id}")
        scope.label(n.label)
    for e in decl.rhs.edges:
        _check_mark(e.label, is_edge=True, where=f"{where} edge {e.id}")
        scope.label(e.label)
    scope.condition(decl.condition)

    lhs_edges = {e.id: e for e in decl.lhs.edges}
    rhs_edges = {e.id: e for e in decl.rhs.edges}
    preserved = tuple(e.id for e in decl.lhs.edges if e.id in rhs_edges)
    for eid in preserved:
        le, re_ = lhs_edges[eid], rhs_edges[eid]
        if (le.src, le.tgt) != (re_.src, re_.tgt) or le.src not in interface or le.tgt not in interface:
            raise PreservedEdgeMismatch(
                f"{where}: edge {eid!r} occurs in both sides so it must join the same interface nodes"
            )

    return RuleSchema(
        name=decl.name,
        var_types=var_types,
        lhs=decl.lhs,
        rhs=decl.rhs,
        interface=interface,
        condition=decl.condition,
        deleted_nodes=tuple(i for i in decl.lhs.node_ids() if i not in interface),
        created_nodes=tuple(i for i in decl.rhs.node_ids() if i not in interface),
        preserved_edges=preserved,
        deleted_edges=tuple(e.id for e in decl.lhs.edges if e.id not in rhs_edges),
        created_edges=tuple(e.id for e in decl.rhs.edges if e.id not in lhs_edges),
    )


def classify_variable_context(schema: RuleSchema) -> dict[str, VarType]:
    """Declared type of every variable bound by the left-hand side."""
    used: dict[str, VarType] = {}
    items = [n.label for n in schema.lhs.nodes] + [e.label for e in schema.lhs.edges]
    for lab in items:
        for item in lab.items:
            for v in _vars_of(item):
                used[v] = schema.var_types[v]
    return used


def _vars_of(e: ast.Expr):
    if isinstance(e, ast.Var):
        yield e.name
    elif isinstance(e, ast.Concat):
        for p in e.parts:
            yield from _vars_of(p)
    elif isinstance(e, ast.Arith):
        yield from _vars_of(e.lhs)
        yield from _vars_of(e.rhs)


def _check_graph_shape(g: ast.RuleGraph, where: str) -> None:
    ids = g.node_ids()
    if len(set(ids)) != len(ids):
        raise DuplicateDeclaration(f"{where}: duplicate node identifier")
    eids = [e.id for e in g.edges]
    if len(set(eids)) != len(eids):
        raise DuplicateDeclaration(f"{where}: duplicate edge identifier")
    for e in g.edges:
        for end in (e.src, e.tgt):
            if end not in ids:
                raise UnknownNodeReference(f"{where}: edge {e.id} refers to unknown node {end!r}")


def _check_mark(label: ast.RuleLabel, is_edge: bool, where: str) -> None:
    if is_edge and label.mark is Mark.GREY:
        raise MarkOnWrongEntity(f"{where}: grey marks are reserved for nodes")
    if not is_edge and label.mark is Mark.DASHED:
        raise MarkOnWrongEntity(f"{where}: dashed marks are reserved for edges")


def _declared(name: str, var_types, where: str) -> VarType:
    if name not in var_types:
        raise UndeclaredVariable(f"{where}: variable {name!r} is not declared")
    return var_types[name]


def _check_lhs_label(label: ast.RuleLabel, var_types, where: str, is_edge: bool) -> set[str]:
    _check_mark(label, is_edge, where)
    bound: set[str] = set()
    list_vars = 0
    for item in label.items:
        if isinstance(item, ast.Const):
            continue
        if isinstance(item, ast.Var):
            if _declared(item.name, var_types, where) is VarType.LIST:
                list_vars += 1
            bound.add(item.name)
        elif isinstance(item, ast.Concat):
            string_vars = 0
            for part in item.parts:
                if isinstance(part, ast.Const) and isinstance(part.value, str):
                    continue
                if isinstance(part, ast.Var):
                    t = _declared(part.name, var_types, where)
                    if t is VarType.STRING:
                        string_vars += 1
                    elif t is not VarType.CHAR:
                        raise TypeMismatch(f"{where}: {part.name!r} of type {t.value} in string concatenation")
                    bound.add(part.name)
                    continue
                if isinstance(part, ast.Const):
                    raise TypeMismatch(f"{where}: integer in string concatenation")
                raise LhsExpressionForbidden(f"{where}: only constants and variables may be concatenated")
            if string_vars > 1:
                raise TwoStringVariablesInConcat(f"{where}: at most one string variable per concatenation")
        else:
            raise LhsExpressionForbidden(f"{where}: expressions and degree operators are not allowed here")
    if list_vars > 1:
        raise TwoListVariablesInLabel(f"{where}: at most one list variable per label")
    return bound


class _Scope:
    """Type checker for right-hand side labels and conditions."""

    def __init__(self, var_types, lhs_vars, lhs_nodes, where):
        self.var_types = var_types
        self.lhs_vars = lhs_vars
        self.lhs_nodes = lhs_nodes
        self.where = where

    def var(self, name: str) -> VarType:
        t = _declared(name, self.var_types, self.where)
        if name not in self.lhs_vars:
            raise VariableNotInLHS(f"{self.where}: variable {name!r} does not occur in the left-hand side")
        return t

    def node(self, node_id: str) -> None:
        if node_id not in self.lhs_nodes:
            raise UnknownNodeReference(f"{self.where}: {node_id!r} is not a left-hand side node")

    def expr(self, e: ast.Expr) -> str:
        if isinstance(e, ast.Const):
            return _INT if isinstance(e.value, int) else _STR
        if isinstance(e, ast.Var):
            return _VAR_SHAPE[self.var(e.name)]
        if isinstance(e, (ast.Indeg, ast.Outdeg)):
            self.node(e.node)
            return _INT
        if isinstance(e, ast.Arith):
            for side in (e.lhs, e.rhs):
                if self.expr(side) != _INT:
                    raise TypeMismatch(f"{self.where}: arithmetic operand must be an integer")
            return _INT
        if isinstance(e, ast.Concat):
            for part in e.parts:
                if self.expr(part) != _STR:
                    raise TypeMismatch(f"{self.where}: concatenated values must be strings")
            return _STR
        raise TypeError(f"not an expression: {e!r}")

    def label(self, label: ast.RuleLabel) -> None:
        for item in label.items:
            self.expr(item)

    def condition(self, c: ast.Condition) -> None:
        if isinstance(c, ast.TrueC):
            return
        if isinstance(c, ast.TypeCheck):
            self.var(c.var)
        elif isinstance(c, ast.EdgePred):
            self.node(c.src)
            self.node(c.tgt)
            if c.label is not None:
                _check_mark(c.label, is_edge=True, where=self.where)
                self.label(c.label)
        elif isinstance(c, ast.Rel):
            shapes = (self.expr(c.lhs), self.expr(c.rhs))
            if c.op not in ("=", "!=") and any(s not in (_INT, _ATOM) for s in shapes):
                raise TypeMismatch(f"{self.where}: {c.op} compares integers only")
        elif isinstance(c, ast.Not):
            self.condition(c.cond)
        elif isinstance(c, (ast.And, ast.Or)):
            self.condition(c.lhs)
            self.condition(c.rhs)
        else:
            raise TypeError(f"not a condition: {c!r}")
