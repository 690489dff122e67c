"""Enumeration of injective morphisms from a left-hand side into a host graph.

Matching runs in two stages: node morphisms first (label and root checks,
environment merging), then edge morphisms for each node morphism.  Every
enumeration is in ascending host key order, with left-hand side nodes and
edges taken in declaration order, so results are reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Mapping, Optional

from . import ast
from .ast import VarType
from .graph import EdgeKey, HostGraph, NodeKey
from .labels import Environment, match_label


@dataclass(frozen=True)
class NodeMorphism:
    env: Environment
    node_map: dict[str, NodeKey]


@dataclass(frozen=True)
class GraphMorphism:
    env: Environment
    node_map: dict[str, NodeKey]
    edge_map: dict[str, EdgeKey]


def merge_environments(a: Mapping, b: Mapping) -> Optional[Environment]:
    out = dict(a)
    for k, v in b.items():
        if k in out:
            if out[k] != v or type(out[k]) is not type(v):
                return None
        else:
            out[k] = v
    return out


def candidate_nodes(
    lhs: ast.RuleGraph, g: HostGraph, var_types: Mapping[str, VarType]
) -> list[list[tuple[NodeKey, Environment]]]:
    """For each left-hand node, the host nodes it may map to with their bindings."""
    result = []
    host = g.node_items()
    for rn in lhs.nodes:
        cands = []
        for k, hn in host:
            if rn.root and not hn.root:
                continue
            env = match_label({}, rn.label, hn.label, var_types)
            if env is not None:
                cands.append((k, env))
        result.append(cands)
    return result


def node_morphisms(lhs: ast.RuleGraph, g: HostGraph, var_types: Mapping[str, VarType]) -> Iterator[NodeMorphism]:
    """All injective selections of candidates whose environments agree."""
    ids = lhs.node_ids()
    cands = candidate_nodes(lhs, g, var_types)

    def extend(i: int, env: Environment, chosen: list[NodeKey]):
        if i == len(ids):
            yield NodeMorphism(env, dict(zip(ids, chosen)))
            return
        for k, e in cands[i]:
            if k in chosen:
                continue
            merged = merge_environments(env, e)
            if merged is not None:
                yield from extend(i + 1, merged, chosen + [k])

    yield from extend(0, {}, [])


def edge_morphisms(
    lhs: ast.RuleGraph, g: HostGraph, nm: NodeMorphism, var_types: Mapping[str, VarType]
) -> Iterator[GraphMorphism]:
    """Complete ``nm`` with injective edge maps whose labels match."""
    edges = lhs.edges

    def extend(i: int, env: Environment, chosen: list[EdgeKey]):
        if i == len(edges):
            yield GraphMorphism(env, nm.node_map, dict(zip((e.id for e in edges), chosen)))
            return
        le = edges[i]
        for hk in g.edges_between(nm.node_map[le.src], nm.node_map[le.tgt]):
            if hk in chosen:
                continue
            extended = match_label(env, le.label, g.edge_label(hk), var_types)
            if extended is not None:
                yield from extend(i + 1, extended, chosen + [hk])

    yield from extend(0, nm.env, [])


def _adjacency_plan(lhs: ast.RuleGraph):
    """Per left-hand node: edge-count requirements towards earlier nodes.

    Entry ``i`` lists ``(j, out_count, in_count)``: at least ``out_count``
    edges from node ``j`` to node ``i`` and ``in_count`` from ``i`` to ``j``
    (``j == i`` covers loops).
    """
    index = {n.id: i for i, n in enumerate(lhs.nodes)}
    plan: list[dict[int, list[int]]] = [dict() for _ in lhs.nodes]
    for e in lhs.edges:
        s, t = index[e.src], index[e.tgt]
        later, earlier = max(s, t), min(s, t)
        req = plan[later].setdefault(earlier, [0, 0])
        if s == earlier and t == later and s != t:
            req[0] += 1
        else:
            req[1] += 1
    return [[(j, o, i_) for j, (o, i_) in sorted(p.items())] for p in plan]


def pruned_node_morphisms(
    lhs: ast.RuleGraph, g: HostGraph, var_types: Mapping[str, VarType]
) -> Iterator[NodeMorphism]:
    """The node morphisms that can possibly extend to graph morphisms.

    Emits the subsequence of :func:`node_morphisms` that leaves enough host
    edges between mapped nodes for every left-hand edge; the dropped ones
    have no edge morphisms, so ``match_graph`` output is unchanged.
    """
    ids = lhs.node_ids()
    cands = [dict(c) for c in candidate_nodes(lhs, g, var_types)]
    plan = _adjacency_plan(lhs)

    def options(i: int, chosen: list[NodeKey]):
        for j, out_count, _ in plan[i]:
            if j == i:
                continue
            # restrict to host neighbours of an already-mapped node
            near = g.successors(chosen[j]) if out_count else g.predecessors(chosen[j])
            return sorted(k for k in near if k in cands[i])
        return list(cands[i])

    def fits(i: int, k: NodeKey, chosen: list[NodeKey]) -> bool:
        for j, out_count, in_count in plan[i]:
            if j == i:
                if len(g.edges_between(k, k)) < in_count:
                    return False
                continue
            if out_count and len(g.edges_between(chosen[j], k)) < out_count:
                return False
            if in_count and len(g.edges_between(k, chosen[j])) < in_count:
                return False
        return True

    def extend(i: int, env: Environment, chosen: list[NodeKey]):
        if i == len(ids):
            yield NodeMorphism(env, dict(zip(ids, chosen)))
            return
        for k in options(i, chosen):
            if k in chosen or not fits(i, k, chosen):
                continue
            merged = merge_environments(env, cands[i][k])
            if merged is not None:
                yield from extend(i + 1, merged, chosen + [k])

    yield from extend(0, {}, [])


def match_graph(
    lhs: ast.RuleGraph, g: HostGraph, var_types: Mapping[str, VarType], prune: bool = True
) -> Iterator[GraphMorphism]:
    """Lazily enumerate every graph morphism from ``lhs`` into ``g``."""
    stage = pruned_node_morphisms if prune else node_morphisms
    for nm in stage(lhs, g, var_types):
        yield from edge_morphisms(lhs, g, nm, var_types)
