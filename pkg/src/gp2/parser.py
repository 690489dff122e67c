"""Parsers for GP 2 program text and host graph text.

Each nonterminal of the grammar is a parsy parser of the same name, so the
code reads close to the grammar::

    Prog      ::= Decl {Decl}
    Decl      ::= MainDecl | MacroDecl | RuleDecl
    MainDecl  ::= "Main" "=" ComSeq
    MacroDecl ::= Id "=" ComSeq
    ComSeq    ::= Com {";" Com}
    Com       ::= RuleSetCall | Id | "if" ComSeq "then" ComSeq ["else" ComSeq]
                | "try" ComSeq "then" ComSeq ["else" ComSeq]
                | Com "!" | "(" ComSeq ")" | "skip" | "fail"
    RuleDecl  ::= Id "(" [VarList {";" VarList}] ")" Graph "=>" Graph
                  "interface" "=" "{" [NodeId {"," NodeId}] "}" ["where" Cond]
    Graph     ::= "[" {NodeDef} "|" {EdgeDef} "]"
    Label     ::= List ["#" Mark]

Comments run from ``//`` to the end of the line.
"""

from __future__ import annotations

import re
from functools import reduce

import parsy
from parsy import forward_declaration, regex, seq, string

from . import ast
from .errors import ParseError
from .graph import GraphEditor, HostGraph, HostLabel, HostNode, Mark

KEYWORDS = frozenset(
    """Main if then else try skip fail interface where empty int char string atom list
    indeg outdeg edge not and or red green blue grey dashed""".split()
)

INT64_MIN, INT64_MAX = -(2**63), 2**63 - 1

# -- lexical layer ----------------------------------------------------------

whitespace = regex(r"(?:\s|//[^\n]*)*")


def lexeme(p: parsy.Parser) -> parsy.Parser:
    return p << whitespace


def sym(s: str) -> parsy.Parser:
    return lexeme(string(s))


def keyword(word: str) -> parsy.Parser:
    return lexeme(regex(re.escape(word) + r"(?![A-Za-z0-9_])")).desc(repr(word))


identifier = lexeme(
    regex(r"[A-Za-z_][A-Za-z0-9_]*").bind(
        lambda s: parsy.fail("identifier") if s in KEYWORDS else parsy.success(s)
    )
).desc("identifier")

item_id = lexeme(regex(r"[A-Za-z0-9_]+")).desc("node or edge identifier")


@parsy.Parser
def _int_literal(stream, index):
    m = re.compile(r"-?[0-9]+").match(stream, index)
    if not m:
        return parsy.Result.failure(index, "integer")
    value = int(m.group(0))
    if not INT64_MIN <= value <= INT64_MAX:
        return parsy.Result.failure(index, "integer within 64-bit range")
    return parsy.Result.success(m.end(), value)


integer = lexeme(_int_literal)

string_literal = lexeme(
    regex(r'"(?:[^"\\\n]|\\.)*"').map(lambda s: re.sub(r"\\(.)", r"\1", s[1:-1]))
).desc("string literal")

mark = (
    keyword("red").result(Mark.RED)
    | keyword("green").result(Mark.GREEN)
    | keyword("blue").result(Mark.BLUE)
    | keyword("grey").result(Mark.GREY)
    | keyword("dashed").result(Mark.DASHED)
)

var_type = (
    keyword("int").result(ast.VarType.INT)
    | keyword("char").result(ast.VarType.CHAR)
    | keyword("string").result(ast.VarType.STRING)
    | keyword("atom").result(ast.VarType.ATOM)
    | keyword("list").result(ast.VarType.LIST)
)

# -- label expressions ------------------------------------------------------

atom_exp = forward_declaration()

primary = (
    integer.map(ast.Const)
    | string_literal.map(ast.Const)
    | (keyword("indeg") >> sym("(") >> item_id << sym(")")).map(ast.Indeg)
    | (keyword("outdeg") >> sym("(") >> item_id << sym(")")).map(ast.Outdeg)
    | (sym("(") >> atom_exp << sym(")"))
    | identifier.map(ast.Var)
)


def _chainl(operand: parsy.Parser, op: parsy.Parser) -> parsy.Parser:
    rest = seq(op, operand).many()
    return seq(operand, rest).combine(
        lambda first, pairs: reduce(lambda acc, p: ast.Arith(p[0], acc, p[1]), pairs, first)
    )


multiplicative = _chainl(primary, sym("*") | sym("/"))
additive = _chainl(multiplicative, sym("+") | sym("-"))


def _concat(parts):
    if len(parts) == 1:
        return parts[0]
    flat = []
    for p in parts:
        flat.extend(p.parts if isinstance(p, ast.Concat) else (p,))
    return ast.Concat(tuple(flat))


atom_exp.become(additive.sep_by(sym("."), min=1).map(_concat))

rule_list = keyword("empty").result(()) | atom_exp.sep_by(sym(":"), min=1).map(tuple)

label = seq(rule_list, (sym("#") >> mark).optional(Mark.NONE)).combine(ast.RuleLabel)

# -- rule graphs ------------------------------------------------------------

root_flag = lexeme(regex(r"\(\s*R\s*\)")).result(True).optional(False)

node_def = seq(
    sym("(") >> item_id,
    root_flag,
    sym(",") >> label << sym(")"),
).combine(lambda i, r, lab: ast.RuleNode(i, lab, r))

edge_def = seq(
    sym("(") >> item_id,
    sym(",") >> item_id,
    sym(",") >> item_id,
    sym(",") >> label << sym(")"),
).combine(ast.RuleEdge)

rule_graph = seq(
    sym("[") >> node_def.many(),
    sym("|") >> edge_def.many() << sym("]"),
).combine(lambda ns, es: ast.RuleGraph(tuple(ns), tuple(es)))

# -- conditions -------------------------------------------------------------

cond = forward_declaration()

type_check = seq(
    keyword("int").result(ast.VarType.INT)
    | keyword("char").result(ast.VarType.CHAR)
    | keyword("string").result(ast.VarType.STRING)
    | keyword("atom").result(ast.VarType.ATOM),
    sym("(") >> identifier << sym(")"),
).combine(ast.TypeCheck)

edge_pred = seq(
    keyword("edge") >> sym("(") >> item_id,
    sym(",") >> item_id,
    (sym(",") >> label).optional() << sym(")"),
).combine(ast.EdgePred)

rel_op = sym("!=") | sym(">=") | sym("<=") | sym("=") | sym(">") | sym("<")

relation = seq(atom_exp, rel_op, atom_exp).combine(lambda a, op, b: ast.Rel(op, a, b))

simple_cond = type_check | edge_pred | (sym("(") >> cond << sym(")")) | relation

not_cond = forward_declaration()
not_cond.become((keyword("not") >> not_cond).map(ast.Not) | simple_cond)

and_cond = not_cond.sep_by(keyword("and"), min=1).map(lambda cs: reduce(ast.And, cs))
cond.become(and_cond.sep_by(keyword("or"), min=1).map(lambda cs: reduce(ast.Or, cs)))

# -- commands ---------------------------------------------------------------

com_seq = forward_declaration()

if_com = seq(
    keyword("if") >> com_seq,
    keyword("then") >> com_seq,
    (keyword("else") >> com_seq).optional(ast.Skip()),
).combine(ast.If)

try_com = seq(
    keyword("try") >> com_seq,
    keyword("then") >> com_seq,
    (keyword("else") >> com_seq).optional(ast.Skip()),
).combine(ast.Try)

rule_set_call = (sym("{") >> identifier.sep_by(sym(",")) << sym("}")).map(
    lambda names: ast.RuleSetCall(tuple(names))
)

simple_com = (
    if_com
    | try_com
    | keyword("skip").result(ast.Skip())
    | keyword("fail").result(ast.Fail())
    | (sym("(") >> com_seq << sym(")"))
    | rule_set_call
    | identifier.map(lambda name: ast.RuleCall((name,)))
)

com = seq(simple_com, sym("!").many()).combine(
    lambda c, bangs: reduce(lambda body, _: ast.Loop(body), bangs, c)
)

com_seq.become(com.sep_by(sym(";"), min=1).map(lambda cs: cs[0] if len(cs) == 1 else ast.Seq(tuple(cs))))

# -- declarations -----------------------------------------------------------

var_list = seq(identifier.sep_by(sym(","), min=1), sym(":") >> var_type).combine(
    lambda names, t: [(n, t) for n in names]
)

rule_decl = seq(
    identifier,
    sym("(") >> var_list.sep_by(sym(";")).map(lambda groups: tuple(p for g in groups for p in g)) << sym(")"),
    rule_graph,
    sym("=>") >> rule_graph,
    keyword("interface") >> sym("=") >> sym("{") >> item_id.sep_by(sym(",")).map(tuple) << sym("}"),
    (keyword("where") >> cond).optional(ast.TrueC()),
).combine(ast.RuleDecl)

main_decl = (keyword("Main") >> sym("=") >> com_seq).map(ast.MainDecl)
macro_decl = seq(identifier << sym("="), com_seq).combine(ast.MacroDecl)

declaration = main_decl | macro_decl | rule_decl
program = whitespace >> declaration.at_least(1)

# -- host graphs ------------------------------------------------------------

host_atom = integer | string_literal
host_list = keyword("empty").result(()) | host_atom.sep_by(sym(":"), min=1).map(tuple)
host_label = seq(host_list, (sym("#") >> mark).optional(Mark.NONE)).combine(HostLabel)

host_node = seq(sym("(") >> item_id, root_flag, sym(",") >> host_label << sym(")")).mark()
host_edge = seq(
    sym("(") >> item_id,
    sym(",") >> item_id,
    sym(",") >> item_id,
    sym(",") >> host_label << sym(")"),
).mark()

host_graph = whitespace >> seq(
    sym("[") >> host_node.many(),
    sym("|") >> host_edge.many() << sym("]"),
)


# -- entry points -----------------------------------------------------------


def _convert(err: parsy.ParseError) -> ParseError:
    line, col = parsy.line_info_at(err.stream, err.index)
    expected = " or ".join(sorted(err.expected)) if err.expected else "end of input"
    found = err.stream[err.index : err.index + 12] or "end of input"
    return ParseError(line + 1, col + 1, expected, found.split("\n")[0] or "end of line")


def _resolve_calls(cmd: ast.Command, macros: set[str]) -> ast.Command:
    if isinstance(cmd, ast.RuleCall) and len(cmd.names) == 1 and cmd.names[0] in macros:
        return ast.MacroCall(cmd.names[0])
    if isinstance(cmd, ast.Seq):
        return ast.Seq(tuple(_resolve_calls(c, macros) for c in cmd.commands))
    if isinstance(cmd, ast.Loop):
        return ast.Loop(_resolve_calls(cmd.body, macros))
    if isinstance(cmd, (ast.If, ast.Try)):
        return type(cmd)(*(_resolve_calls(c, macros) for c in (cmd.cond, cmd.then, cmd.else_)))
    return cmd


def parse_program(text: str) -> ast.Program:
    """Parse GP 2 program text; raises ParseError at the first syntax error."""
    try:
        decls = program.parse(text)
    except parsy.ParseError as err:
        raise _convert(err) from None
    macros = {d.name for d in decls if isinstance(d, ast.MacroDecl)}
    resolved = []
    for d in decls:
        if isinstance(d, ast.MainDecl):
            d = ast.MainDecl(_resolve_calls(d.body, macros))
        elif isinstance(d, ast.MacroDecl):
            d = ast.MacroDecl(d.name, _resolve_calls(d.body, macros))
        resolved.append(d)
    return ast.Program(tuple(resolved))


def parse_host_graph(text: str) -> HostGraph:
    """Parse host graph text; node keys are assigned 1, 2, ... in textual order."""
    try:
        nodes, edges = host_graph.parse(text)
    except parsy.ParseError as err:
        raise _convert(err) from None
    ed = GraphEditor(HostGraph())
    keys: dict[str, int] = {}
    for (line, col), (node_id, root, lab), _ in nodes:
        if node_id in keys:
            raise ParseError(line + 1, col + 1, "a fresh node identifier", node_id)
        if lab.mark is Mark.DASHED:
            raise ParseError(line + 1, col + 1, "a node mark", "dashed")
        keys[node_id] = ed.add_node(HostNode(lab, root))
    seen_edges: set[str] = set()
    for (line, col), (edge_id, src, tgt, lab), _ in edges:
        if edge_id in seen_edges:
            raise ParseError(line + 1, col + 1, "a fresh edge identifier", edge_id)
        seen_edges.add(edge_id)
        for end in (src, tgt):
            if end not in keys:
                raise ParseError(line + 1, col + 1, "a declared node identifier", end)
        if lab.mark is Mark.GREY:
            raise ParseError(line + 1, col + 1, "an edge mark", "grey")
        ed.add_edge(keys[src], keys[tgt], lab)
    return ed.freeze()
