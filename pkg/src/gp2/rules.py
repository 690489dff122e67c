"""Rule application: dangling check, condition evaluation and graph rewriting."""

from __future__ import annotations

from typing import Iterable, Iterator, Mapping

from . import ast
from .ast import VarType
from .checker import RuleSchema
from .errors import EvaluationError
from .graph import GraphEditor, HostGraph, HostLabel, HostNode, NodeKey
from .matching import GraphMorphism, match_graph

INT64_MIN, INT64_MAX = -(2**63), 2**63 - 1


def dangling_condition(g: HostGraph, edge_matches: Iterable, deleted_nodes: Iterable[NodeKey]) -> bool:
    """True iff no edge incident to a deleted node lies outside the matched edges."""
    matched = set(edge_matches)
    return all(e in matched for n in deleted_nodes for e in g.incident_edges(n))


def _checked_int(value: int) -> int:
    if not INT64_MIN <= value <= INT64_MAX:
        raise EvaluationError(f"integer overflow: {value}")
    return value


def _as_int(value, what: str) -> int:
    if isinstance(value, tuple) and len(value) == 1:
        value = value[0]
    if not isinstance(value, int):
        raise EvaluationError(f"{what} is not an integer: {value!r}")
    return value


def eval_expression(e: ast.Expr, env: Mapping, g: HostGraph, node_map: Mapping[str, NodeKey]):
    """Value of ``e``: an atom, or a tuple of atoms for list variables."""
    if isinstance(e, ast.Const):
        return e.value
    if isinstance(e, ast.Var):
        try:
            return env[e.name]
        except KeyError:
            raise EvaluationError(f"unbound variable {e.name!r}") from None
    if isinstance(e, ast.Indeg):
        return g.indegree(node_map[e.node])
    if isinstance(e, ast.Outdeg):
        return g.outdegree(node_map[e.node])
    if isinstance(e, ast.Arith):
        a = _as_int(eval_expression(e.lhs, env, g, node_map), "left operand")
        b = _as_int(eval_expression(e.rhs, env, g, node_map), "right operand")
        if e.op == "+":
            return _checked_int(a + b)
        if e.op == "-":
            return _checked_int(a - b)
        if e.op == "*":
            return _checked_int(a * b)
        if b == 0:
            raise EvaluationError("division by zero")
        q = abs(a) // abs(b)
        return _checked_int(q if (a < 0) == (b < 0) else -q)
    if isinstance(e, ast.Concat):
        out = []
        for p in e.parts:
            v = eval_expression(p, env, g, node_map)
            if isinstance(v, tuple) and len(v) == 1:
                v = v[0]
            if not isinstance(v, str):
                raise EvaluationError(f"cannot concatenate non-string {v!r}")
            out.append(v)
        return "".join(out)
    raise TypeError(f"not an expression: {e!r}")


def eval_label(rl: ast.RuleLabel, env: Mapping, g: HostGraph, node_map: Mapping[str, NodeKey]) -> HostLabel:
    values: list = []
    for item in rl.items:
        v = eval_expression(item, env, g, node_map)
        if isinstance(v, tuple):
            values.extend(v)
        else:
            values.append(v)
    return HostLabel(tuple(values), rl.mark)


def _as_list(v) -> tuple:
    return v if isinstance(v, tuple) else (v,)


def _has_type(t: VarType, v) -> bool:
    if isinstance(v, tuple):
        if len(v) != 1:
            return t is VarType.LIST
        v = v[0]
    if t is VarType.INT:
        return isinstance(v, int)
    if t is VarType.STRING:
        return isinstance(v, str)
    if t is VarType.CHAR:
        return isinstance(v, str) and len(v) == 1
    return True


def eval_condition(c: ast.Condition, env: Mapping, g: HostGraph, node_map: Mapping[str, NodeKey]) -> bool:
    if isinstance(c, ast.TrueC):
        return True
    if isinstance(c, ast.TypeCheck):
        return _has_type(c.type, env[c.var])
    if isinstance(c, ast.EdgePred):
        candidates = g.edges_between(node_map[c.src], node_map[c.tgt])
        if c.label is None:
            return bool(candidates)
        wanted = eval_label(c.label, env, g, node_map)
        return any(g.edge_label(k) == wanted for k in candidates)
    if isinstance(c, ast.Rel):
        a = eval_expression(c.lhs, env, g, node_map)
        b = eval_expression(c.rhs, env, g, node_map)
        if c.op in ("=", "!="):
            la, lb = _as_list(a), _as_list(b)
            same = len(la) == len(lb) and all(type(x) is type(y) and x == y for x, y in zip(la, lb))
            return same if c.op == "=" else not same
        a, b = _as_int(a, "comparison operand"), _as_int(b, "comparison operand")
        return {">": a > b, ">=": a >= b, "<": a < b, "<=": a <= b}[c.op]
    if isinstance(c, ast.Not):
        return not eval_condition(c.cond, env, g, node_map)
    if isinstance(c, ast.And):
        return eval_condition(c.lhs, env, g, node_map) and eval_condition(c.rhs, env, g, node_map)
    if isinstance(c, ast.Or):
        return eval_condition(c.lhs, env, g, node_map) or eval_condition(c.rhs, env, g, node_map)
    raise TypeError(f"not a condition: {c!r}")


def apply_at(g: HostGraph, schema: RuleSchema, m: GraphMorphism) -> HostGraph:
    """Rewrite ``g`` at match ``m``.

    Steps run in a fixed order: delete edges, delete nodes, relabel nodes,
    add nodes, relabel edges, add edges.  Every right-hand label is evaluated
    against the untouched host graph first.
    """
    rhs_nodes = {n.id: n for n in schema.rhs.nodes}
    rhs_edges = {e.id: e for e in schema.rhs.edges}

    def label_of(rl):
        return eval_label(rl, m.env, g, m.node_map)

    node_labels = {n.id: label_of(n.label) for n in schema.rhs.nodes}
    edge_labels = {eid: label_of(rhs_edges[eid].label) for eid in schema.preserved_edges + schema.created_edges}

    ed = GraphEditor(g)
    for eid in schema.deleted_edges:
        ed.delete_edge(m.edge_map[eid])
    for nid in schema.deleted_nodes:
        ed.delete_node(m.node_map[nid])
    keys: dict[str, NodeKey] = {}
    for n in schema.rhs.nodes:
        if n.id in schema.interface:
            keys[n.id] = m.node_map[n.id]
            ed.relabel_node(keys[n.id], node_labels[n.id], root=n.root)
    for nid in schema.created_nodes:
        keys[nid] = ed.add_node(HostNode(node_labels[nid], rhs_nodes[nid].root))
    for eid in schema.preserved_edges:
        ed.relabel_edge(m.edge_map[eid], edge_labels[eid])
    for eid in schema.created_edges:
        e = rhs_edges[eid]
        ed.add_edge(keys[e.src], keys[e.tgt], edge_labels[eid])
    return ed.freeze()


def valid_matches(g: HostGraph, schema: RuleSchema) -> Iterator[GraphMorphism]:
    """Morphisms that satisfy the dangling condition and the rule condition."""
    for m in match_graph(schema.lhs, g, schema.var_types):
        if schema.deleted_nodes and not dangling_condition(
            g, m.edge_map.values(), (m.node_map[n] for n in schema.deleted_nodes)
        ):
            continue
        if eval_condition(schema.condition, m.env, g, m.node_map):
            yield m


def apply_rule(g: HostGraph, schema: RuleSchema) -> Iterator[HostGraph]:
    """Lazily produce the result of every valid application of ``schema`` to ``g``."""
    for m in valid_matches(g, schema):
        yield apply_at(g, schema, m)
