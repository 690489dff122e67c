"""Slow, obviously-correct reference implementations used by the tests.

None of these share code with the interpreter beyond the graph container.
"""

from __future__ import annotations

import itertools
from collections import Counter
from typing import Iterator

import networkx as nx

from gp2 import ast
from gp2.ast import VarType
from gp2.graph import EMPTY, GraphEditor, HostGraph, HostLabel, HostNode, Mark


# -- labels --------------------------------------------------------------


def _type_ok(t: VarType, value) -> bool:
    if t is VarType.INT:
        return isinstance(value, int)
    if t is VarType.STRING:
        return isinstance(value, str)
    if t is VarType.CHAR:
        return isinstance(value, str) and len(value) == 1
    return True


def _assign(env: dict, name: str, value) -> dict | None:
    if name in env:
        old = env[name]
        return env if (old == value and type(old) is type(value)) else None
    return {**env, name: value}


def _atom_envs(env: dict, item: ast.Expr, atom, types) -> Iterator[dict]:
    if isinstance(item, ast.Const):
        if item.value == atom and type(item.value) is type(atom):
            yield env
    elif isinstance(item, ast.Var):
        if types[item.name] is not VarType.LIST and _type_ok(types[item.name], atom):
            new = _assign(env, item.name, atom)
            if new is not None:
                yield new
    elif isinstance(item, ast.Concat):
        if isinstance(atom, str):
            yield from _concat_envs(env, list(item.parts), atom, types)


def _concat_envs(env, parts, s: str, types) -> Iterator[dict]:
    # try every way of cutting s into len(parts) pieces
    if not parts:
        if s == "":
            yield env
        return
    head, rest = parts[0], parts[1:]
    for cut in range(len(s) + 1):
        piece = s[:cut]
        if isinstance(head, ast.Const):
            if head.value != piece:
                continue
            yield from _concat_envs(env, rest, s[cut:], types)
        else:
            if not _type_ok(types[head.name], piece):
                continue
            new = _assign(env, head.name, piece)
            if new is not None:
                yield from _concat_envs(new, rest, s[cut:], types)


def label_envs(env: dict, rl: ast.RuleLabel, hl: HostLabel, types) -> Iterator[dict]:
    """Every environment extending ``env`` under which ``rl`` denotes ``hl``."""
    if rl.mark is not hl.mark:
        return
    values = hl.values

    def walk(env, items, i) -> Iterator[dict]:
        if not items:
            if i == len(values):
                yield env
            return
        head, rest = items[0], items[1:]
        if isinstance(head, ast.Var) and types[head.name] is VarType.LIST:
            for j in range(i, len(values) + 1):
                new = _assign(env, head.name, tuple(values[i:j]))
                if new is not None:
                    yield from walk(new, rest, j)
        elif i < len(values):
            for new in _atom_envs(env, head, values[i], types):
                yield from walk(new, rest, i + 1)

    seen = []
    for e in walk(env, list(rl.items), 0):
        if e not in seen:
            seen.append(e)
            yield e


# -- matching ------------------------------------------------------------


def brute_force_matches(lhs: ast.RuleGraph, g: HostGraph, types) -> set:
    """All (node map, edge map, environment) triples, as a set of frozen items."""
    out = set()
    nodes, edges = lhs.nodes, lhs.edges
    for hn in itertools.permutations(g.nodes(), len(nodes)):
        node_map = {rn.id: k for rn, k in zip(nodes, hn)}
        if any(rn.root and not g.node(k).root for rn, k in zip(nodes, hn)):
            continue
        for he in itertools.permutations(g.edges(), len(edges)):
            if any((s, t) != (node_map[e.src], node_map[e.tgt]) for e, (s, t, _) in zip(edges, he)):
                continue
            envs = [{}]
            pairs = [(rn.label, g.node(k).label) for rn, k in zip(nodes, hn)]
            pairs += [(e.label, g.edge_label(k)) for e, k in zip(edges, he)]
            for rl, hl in pairs:
                envs = [e2 for e in envs for e2 in label_envs(e, rl, hl, types)]
            for env in envs:
                out.add(
                    (
                        frozenset(node_map.items()),
                        frozenset(zip((e.id for e in edges), he)),
                        frozenset(env.items()),
                    )
                )
    return out


# -- isomorphism ---------------------------------------------------------


def brute_force_isomorphic(g1: HostGraph, g2: HostGraph) -> bool:
    """Try every bijection between node keys."""
    if g1.node_count != g2.node_count or g1.edge_count != g2.edge_count:
        return False
    k1, k2 = g1.nodes(), g2.nodes()
    target = Counter((s, t, label) for (s, t, _), label in g2.edge_items())
    for perm in itertools.permutations(k2):
        f = dict(zip(k1, perm))
        if any(g1.node(a) != g2.node(f[a]) for a in k1):
            continue
        if Counter((f[s], f[t], label) for (s, t, _), label in g1.edge_items()) == target:
            return True
    return False


def permuted(g: HostGraph, order: list[int], edge_order: list[int] | None = None) -> HostGraph:
    """Copy of ``g`` whose nodes are inserted in the given order of positions."""
    keys = g.nodes()
    ed = GraphEditor(HostGraph())
    new = {}
    for pos in order:
        new[keys[pos]] = ed.add_node(g.node(keys[pos]))
    items = g.edge_items()
    for pos in edge_order or range(len(items)):
        (s, t, _), label = items[pos]
        ed.add_edge(new[s], new[t], label)
    return ed.freeze()


# -- Sierpinski ----------------------------------------------------------


def sierpinski(n: int) -> HostGraph:
    """Generation ``n`` glued from three copies of generation ``n - 1``.

    Triangles are (top, left, right) corner triples; the top copy's left
    and right corners are the tops of the left and right copies, and the
    bottom copies share their inner base corner.
    """
    # corners and triangles over abstract integer ids
    next_id = itertools.count()

    def build(level):
        if level == 0:
            t, l, r = next(next_id), next(next_id), next(next_id)
            return (t, l, r), [(t, l, r)]
        (at, al, ar), atri = build(level - 1)
        (bt, bl, br), btri = build(level - 1)
        (ct, cl, cr), ctri = build(level - 1)
        ren = {al: bt, ar: ct, br: cl}

        def fix(x):
            return ren.get(x, x)

        tris = [tuple(map(fix, tr)) for tr in atri + btri + ctri]
        return (at, bl, cr), tris

    _, tris = build(n)
    tops = {t for t, _, _ in tris}
    ids = sorted({x for tr in tris for x in tr})
    ed = GraphEditor(HostGraph())
    key = {}
    key[None] = ed.add_node(HostNode(HostLabel((n, n)), root=True))
    for x in ids:
        key[x] = ed.add_node(HostNode(HostLabel((n,)) if x in tops else EMPTY))
    for t, l, r in tris:
        ed.add_edge(key[t], key[l], HostLabel((), Mark.RED))
        ed.add_edge(key[t], key[r], HostLabel((), Mark.BLUE))
        ed.add_edge(key[l], key[r], HostLabel((), Mark.GREEN))
    return ed.freeze()


# -- shortest paths ------------------------------------------------------


def dijkstra_distances(g: HostGraph, source: int) -> dict[int, int]:
    """Distances from ``source`` with each edge's single integer label as its cost."""
    d = nx.MultiDiGraph()
    d.add_nodes_from(g.nodes())
    for (s, t, _), label in g.edge_items():
        (cost,) = label.values
        d.add_edge(s, t, weight=cost)
    return nx.single_source_dijkstra_path_length(d, source)
