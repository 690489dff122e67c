"""Text rendering of host graphs and programs in the parser's concrete syntax."""

from __future__ import annotations

from . import ast
from .graph import HostGraph, HostLabel, Mark


def format_atom(a) -> str:
    if isinstance(a, str):
        return '"' + a.replace("\\", "\\\\").replace('"', '\\"') + '"'
    return str(a)


def format_host_label(label: HostLabel) -> str:
    text = ":".join(format_atom(a) for a in label.values) if label.values else "empty"
    if label.mark is not Mark.NONE:
        text += f" # {label.mark.value}"
    return text


def format_host_graph(g: HostGraph) -> str:
    """One node or edge per line; node keys become identifiers ``n<key>``."""
    lines = ["["]
    for k, node in g.node_items():
        root = "(R)" if node.root else ""
        lines.append(f"  (n{k}{root}, {format_host_label(node.label)})")
    lines.append("|")
    for i, ((s, t, _), label) in enumerate(g.edge_items()):
        lines.append(f"  (e{i}, n{s}, n{t}, {format_host_label(label)})")
    lines.append("]")
    return "\n".join(lines)


# -- programs ---------------------------------------------------------------

_PREC = {".": 1, "+": 2, "-": 2, "*": 3, "/": 3}


def format_expr(e: ast.Expr, prec: int = 0) -> str:
    if isinstance(e, ast.Const):
        return format_atom(e.value)
    if isinstance(e, ast.Var):
        return e.name
    if isinstance(e, ast.Indeg):
        return f"indeg({e.node})"
    if isinstance(e, ast.Outdeg):
        return f"outdeg({e.node})"
    if isinstance(e, ast.Concat):
        text = " . ".join(format_expr(p, 2) for p in e.parts)
        return f"({text})" if prec > 1 else text
    if isinstance(e, ast.Arith):
        p = _PREC[e.op]
        # operators are left-associative: the right operand binds one level tighter
        text = f"{format_expr(e.lhs, p)} {e.op} {format_expr(e.rhs, p + 1)}"
        return f"({text})" if prec > p else text
    raise TypeError(f"not an expression: {e!r}")


def format_rule_label(label: ast.RuleLabel) -> str:
    text = ":".join(format_expr(i) for i in label.items) if label.items else "empty"
    if label.mark is not Mark.NONE:
        text += f" # {label.mark.value}"
    return text


def format_rule_graph(g: ast.RuleGraph) -> str:
    nodes = " ".join(f"({n.id}{'(R)' if n.root else ''}, {format_rule_label(n.label)})" for n in g.nodes)
    edges = " ".join(f"({e.id}, {e.src}, {e.tgt}, {format_rule_label(e.label)})" for e in g.edges)
    return f"[{nodes} | {edges}]"


def format_condition(c: ast.Condition) -> str:
    if isinstance(c, ast.TypeCheck):
        return f"{c.type.value}({c.var})"
    if isinstance(c, ast.EdgePred):
        lab = f", {format_rule_label(c.label)}" if c.label is not None else ""
        return f"edge({c.src}, {c.tgt}{lab})"
    if isinstance(c, ast.Rel):
        return f"{format_expr(c.lhs)} {c.op} {format_expr(c.rhs)}"
    if isinstance(c, ast.Not):
        return f"not ({format_condition(c.cond)})"
    if isinstance(c, ast.And):
        return f"({format_condition(c.lhs)}) and ({format_condition(c.rhs)})"
    if isinstance(c, ast.Or):
        return f"({format_condition(c.lhs)}) or ({format_condition(c.rhs)})"
    raise TypeError(f"not a printable condition: {c!r}")


def format_command(c: ast.Command) -> str:
    if isinstance(c, ast.RuleCall):
        return c.names[0] if len(c.names) == 1 else "{" + ", ".join(c.names) + "}"
    if isinstance(c, ast.RuleSetCall):
        return "{" + ", ".join(c.names) + "}"
    if isinstance(c, ast.MacroCall):
        return c.name
    if isinstance(c, ast.Skip):
        return "skip"
    if isinstance(c, ast.Fail):
        return "fail"
    if isinstance(c, ast.Seq):
        return "; ".join(_grouped(x) for x in c.commands)
    if isinstance(c, ast.Loop):
        return _grouped(c.body) + "!"
    if isinstance(c, (ast.If, ast.Try)):
        kw = "if" if isinstance(c, ast.If) else "try"
        return f"{kw} {format_command(c.cond)} then {format_command(c.then)} else {format_command(c.else_)}"
    raise TypeError(f"not a command: {c!r}")


def _grouped(c: ast.Command) -> str:
    text = format_command(c)
    return f"({text})" if isinstance(c, (ast.Seq, ast.If, ast.Try)) else text


def format_params(params) -> str:
    groups: list[tuple[list[str], ast.VarType]] = []
    for name, t in params:
        if groups and groups[-1][1] is t:
            groups[-1][0].append(name)
        else:
            groups.append(([name], t))
    return "; ".join(f"{', '.join(names)}: {t.value}" for names, t in groups)


def format_declaration(d: ast.Declaration) -> str:
    if isinstance(d, ast.MainDecl):
        return f"Main = {format_command(d.body)}"
    if isinstance(d, ast.MacroDecl):
        return f"{d.name} = {format_command(d.body)}"
    text = (
        f"{d.name}({format_params(d.params)})\n"
        f"  {format_rule_graph(d.lhs)}\n"
        f"  => {format_rule_graph(d.rhs)}\n"
        f"  interface = {{{', '.join(d.interface)}}}"
    )
    if not isinstance(d.condition, ast.TrueC):
        text += f"\n  where {format_condition(d.condition)}"
    return text


def format_program(p: ast.Program) -> str:
    return "\n\n".join(format_declaration(d) for d in p.declarations) + "\n"
