import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gp2 import ast
from gp2.cli import CORPUS, corpus_text
from gp2.errors import GP2Error, ParseError
from gp2.graph import Mark
from gp2.isomorphism import isomorphic
from gp2.parser import parse_host_graph, parse_program
from gp2.printer import format_command, format_expr, format_host_graph, format_program

LINK = """
Main = link!
link(a, b, x, y, z: list)
  [ (1, x) (2, y) (3, z) | (e1, 1, 2, a) (e2, 2, 3, b) ]
  => [ (1, x) (2, y) (3, z) | (e1, 1, 2, a) (e2, 2, 3, b) (e3, 1, 3, empty) ]
  interface = {1, 2, 3}
  where not edge(1, 3)
"""

R = "r(x: list) [ (1, x) | ] => [ (1, x) | ] interface = {1}\n"


def main_of(text):
    return parse_program(text).main.body


def test_link_program():
    p = parse_program(LINK)
    assert p.main.body == ast.Loop(ast.RuleCall(("link",)))
    (rule,) = p.rules()
    assert [t for _, t in rule.params] == [ast.VarType.LIST] * 5
    assert rule.interface == ("1", "2", "3")
    assert rule.condition == ast.Not(ast.EdgePred("1", "3"))
    assert len(rule.rhs.edges) == 3


def test_empty_text_is_an_error():
    with pytest.raises(GP2Error):
        parse_program("")


def test_bang_binds_tighter_than_semicolon():
    body = main_of("Main = r1; r2!\n" + R.replace("r(", "r1(") + R.replace("r(", "r2("))
    assert body == ast.Seq((ast.RuleCall(("r1",)), ast.Loop(ast.RuleCall(("r2",)))))


def test_parenthesised_loop():
    body = main_of("Main = (a; b)!")
    assert body == ast.Loop(ast.Seq((ast.RuleCall(("a",)), ast.RuleCall(("b",)))))


def test_if_and_try_default_else():
    assert main_of("Main = if a then b") == ast.If(ast.RuleCall(("a",)), ast.RuleCall(("b",)), ast.Skip())
    assert main_of("Main = try a then b else fail") == ast.Try(
        ast.RuleCall(("a",)), ast.RuleCall(("b",)), ast.Fail()
    )


def test_rule_set_and_macro_calls():
    p = parse_program("Main = m; {a, b}\nm = skip")
    assert p.main.body == ast.Seq((ast.MacroCall("m"), ast.RuleSetCall(("a", "b"))))


def test_comments_are_ignored():
    assert main_of("// leading\nMain = skip // trailing\n") == ast.Skip()


def test_expression_precedence():
    p = parse_program("r(x, y: int) [ (1, x:y) | ] => [ (1, x + y * 2 - 1) | ] interface = {1}\nMain = r")
    (item,) = p.rules()[0].rhs.nodes[0].label.items
    mul = ast.Arith("*", ast.Var("y"), ast.Const(2))
    assert item == ast.Arith("-", ast.Arith("+", ast.Var("x"), mul), ast.Const(1))


def test_marks_roots_and_strings():
    p = parse_program('r(s: string) [ (1(R), "ab" . s # red) | ] => [ (1, s) | ] interface = {1}\nMain = r')
    n = p.rules()[0].lhs.nodes[0]
    assert n.root and n.label.mark is Mark.RED
    assert n.label.items == (ast.Concat((ast.Const("ab"), ast.Var("s"))),)


def test_keywords_are_not_identifiers():
    with pytest.raises(ParseError):
        parse_program("Main = edge")


def test_parse_error_position():
    with pytest.raises(ParseError) as info:
        parse_program("Main = skip\nr(x: list) [ (1, x) | ] => [ (1 x) | ] interface = {1}")
    assert info.value.line == 2
    assert info.value.column > 1


def test_host_graph_basic():
    g = parse_host_graph("[ (n0, 3) (n1, empty) | (e0, n0, n1, empty) ]")
    assert g.node_count == 2 and g.edge_count == 1
    assert g.node(1).label.values == (3,)


def test_host_graph_grey_node():
    g = parse_host_graph("[ (n0, 0 # grey) | ]")
    (k,) = g.nodes()
    assert g.node(k).label.values == (0,) and g.node(k).label.mark is Mark.GREY


@pytest.mark.parametrize(
    "text",
    [
        "[ (n0, 1) | (e0, n0, n9, empty) ]",
        "[ (n0, 1) (n0, 2) | ]",
        "[ (n0, 1 # dashed) | ]",
        "[ (n0, 1) | (e0, n0, n0, 1 # grey) ]",
        "[ (n0, x) | ]",
    ],
)
def test_bad_host_graphs(text):
    with pytest.raises(ParseError):
        parse_host_graph(text)


def test_integer_range():
    parse_host_graph(f"[ (n0, {2**63 - 1}) | ]")
    with pytest.raises(ParseError):
        parse_host_graph(f"[ (n0, {2**63}) | ]")


@pytest.mark.parametrize("name", CORPUS)
def test_corpus_round_trip(name):
    p = parse_program(corpus_text(name))
    assert parse_program(format_program(p)) == p


# -- generated round trips --------------------------------------------------

names = st.sampled_from(["a", "b", "r1", "grow"])
commands = st.recursive(
    st.one_of(
        names.map(lambda n: ast.RuleCall((n,))),
        st.lists(names, min_size=1, max_size=3).map(lambda ns: ast.RuleSetCall(tuple(ns))),
        st.just(ast.Skip()),
        st.just(ast.Fail()),
    ),
    lambda inner: st.one_of(
        inner.map(ast.Loop),
        st.lists(inner, min_size=2, max_size=3).map(lambda cs: ast.Seq(tuple(cs))),
        st.builds(ast.If, inner, inner, inner),
        st.builds(ast.Try, inner, inner, inner),
    ),
    max_leaves=8,
)


@settings(max_examples=200, deadline=None)
@given(commands)
def test_command_round_trip(c):
    assert main_of("Main = " + format_command(c)) == c


int_exprs = st.recursive(
    st.one_of(st.integers(0, 99).map(ast.Const), st.sampled_from(["i", "j"]).map(ast.Var)),
    lambda inner: st.builds(ast.Arith, st.sampled_from("+-*/"), inner, inner),
    max_leaves=6,
)


@settings(max_examples=200, deadline=None)
@given(int_exprs)
def test_expression_round_trip(e):
    text = f"r(i, j: int) [ (1, i:j) | ] => [ (1, {format_expr(e)}) | ] interface = {{1}}\nMain = r"
    assert parse_program(text).rules()[0].rhs.nodes[0].label.items == (e,)


@settings(max_examples=100, deadline=None)
@given(st.data())
def test_host_graph_round_trip(data):
    from gp2.graph import HostGraph, HostLabel, HostNode

    atoms = st.one_of(st.integers(-5, 5), st.text("ab\"\\ ", max_size=3))
    n = data.draw(st.integers(1, 5))
    nodes = [
        HostNode(
            HostLabel(tuple(data.draw(st.lists(atoms, max_size=3))), data.draw(st.sampled_from([Mark.NONE, Mark.GREY]))),
            data.draw(st.booleans()),
        )
        for _ in range(n)
    ]
    edges = data.draw(
        st.lists(
            st.tuples(
                st.integers(0, n - 1),
                st.integers(0, n - 1),
                st.builds(HostLabel, st.lists(atoms, max_size=2).map(tuple), st.sampled_from([Mark.NONE, Mark.DASHED])),
            ),
            max_size=6,
        )
    )
    g = HostGraph.build(nodes, edges)
    h = parse_host_graph(format_host_graph(g))
    assert isomorphic(g, h)
    assert format_host_graph(h) == format_host_graph(parse_host_graph(format_host_graph(h)))
