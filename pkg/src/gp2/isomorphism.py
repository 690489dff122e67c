"""Host graph isomorphism and collation of output graphs into classes."""

from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass
from typing import Iterable

from .graph import HostGraph, NodeKey


@dataclass
class IsoClass:
    representative: HostGraph
    count: int = 1


class _Shape:
    """Per-graph lookup tables for the isomorphism search."""

    def __init__(self, g: HostGraph):
        self.graph = g
        self.pairs: dict[tuple[NodeKey, NodeKey], Counter] = {}
        for (s, t, _), label in g.edge_items():
            self.pairs.setdefault((s, t), Counter())[label] += 1
        self.neighbours = {k: g.successors(k) | g.predecessors(k) for k in g.nodes()}
        self.sig = {
            k: (n.label, n.root, g.indegree(k), g.outdegree(k), self.pairs.get((k, k), Counter()).total())
            for k, n in g.node_items()
        }

    def between(self, s: NodeKey, t: NodeKey) -> Counter:
        return self.pairs.get((s, t), _NONE)


_NONE: Counter = Counter()


def _search_order(a: _Shape) -> list[NodeKey]:
    """Nodes ordered so each one (after a component's first) neighbours an earlier one."""
    rarity = Counter(a.sig.values())
    remaining = sorted(a.sig, key=lambda k: (rarity[a.sig[k]], k))
    seen: set[NodeKey] = set()
    order = []
    for start in remaining:
        if start in seen:
            continue
        seen.add(start)
        queue = deque([start])
        while queue:
            k = queue.popleft()
            order.append(k)
            for n in sorted(a.neighbours[k]):
                if n not in seen:
                    seen.add(n)
                    queue.append(n)
    return order


def isomorphic(g1: HostGraph, g2: HostGraph) -> bool:
    """True iff some node bijection preserves labels, marks, roots and all edges."""
    if g1.node_count != g2.node_count or g1.edge_count != g2.edge_count:
        return False
    a, b = _Shape(g1), _Shape(g2)
    if Counter(a.sig.values()) != Counter(b.sig.values()):
        return False
    by_sig: dict = {}
    for k, s in b.sig.items():
        by_sig.setdefault(s, []).append(k)
    order = _search_order(a)
    mapping: dict[NodeKey, NodeKey] = {}
    used: set[NodeKey] = set()

    def consistent(u: NodeKey, v: NodeKey) -> bool:
        if a.between(u, u) != b.between(v, v):
            return False
        for u2 in a.neighbours[u]:
            v2 = mapping.get(u2)
            if v2 is None:
                continue
            if a.between(u, u2) != b.between(v, v2) or a.between(u2, u) != b.between(v2, v):
                return False
        # an edge between v and an image whose preimage is not adjacent to u
        mapped_neighbours = sum(1 for u2 in a.neighbours[u] if u2 in mapping)
        return sum(1 for v2 in b.neighbours[v] if v2 in used) == mapped_neighbours

    def candidates(u: NodeKey):
        for u2 in a.neighbours[u]:
            if u2 in mapping:
                return [v for v in b.neighbours[mapping[u2]] if b.sig[v] == a.sig[u]]
        return by_sig[a.sig[u]]

    # iterative backtracking: graphs can be deeper than the recursion limit
    if not order:
        return True
    levels = [iter(candidates(order[0]))]
    while levels:
        u = order[len(levels) - 1]
        if u in mapping:
            used.discard(mapping.pop(u))
        for v in levels[-1]:
            if v not in used and consistent(u, v):
                mapping[u] = v
                used.add(v)
                break
        else:
            levels.pop()
            continue
        if len(levels) == len(order):
            return True
        levels.append(iter(candidates(order[len(levels)])))
    return False


def partition_classes(graphs: Iterable[HostGraph]) -> list[IsoClass]:
    """Greedy left-to-right partition; class order is first-occurrence order."""
    classes: list[IsoClass] = []
    for g in graphs:
        for c in classes:
            if isomorphic(c.representative, g):
                c.count += 1
                break
        else:
            classes.append(IsoClass(g))
    return classes
