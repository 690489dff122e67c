"""Persistent labelled multigraph used for host graphs.

A graph is a pair of keyed maps, one for nodes and one for edges.  Node keys
are integers drawn from a monotone counter and never reused; edge keys are
``(source, target, index)`` triples so parallel edges stay distinct.

Graph values are never mutated once built.  Every public operation returns a
new graph; batches of changes go through :class:`GraphEditor`, which copies
the maps once and freezes the result.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Union

from .errors import GraphError

Atom = Union[int, str]
NodeKey = int
EdgeKey = tuple[int, int, int]


class Mark(enum.Enum):
    NONE = "none"
    RED = "red"
    GREEN = "green"
    BLUE = "blue"
    GREY = "grey"
    DASHED = "dashed"


@dataclass(frozen=True)
class HostLabel:
    values: tuple[Atom, ...] = ()
    mark: Mark = Mark.NONE

    def __post_init__(self):
        for a in self.values:
            if isinstance(a, bool) or not isinstance(a, (int, str)):
                raise GraphError(f"host label atoms must be int or str, got {a!r}")


EMPTY = HostLabel()


@dataclass(frozen=True)
class HostNode:
    label: HostLabel = EMPTY
    root: bool = False


def _check_node_label(label: HostLabel) -> None:
    if label.mark is Mark.DASHED:
        raise GraphError("the dashed mark is reserved for edges")


def _check_edge_label(label: HostLabel) -> None:
    if label.mark is Mark.GREY:
        raise GraphError("the grey mark is reserved for nodes")


class HostGraph:
    __slots__ = ("_nodes", "_edges", "_out", "_in", "_next_node", "_next_edge", "_sorted_edges")

    def __init__(self):
        self._nodes: dict[NodeKey, HostNode] = {}
        self._edges: dict[EdgeKey, HostLabel] = {}
        # adjacency tuples are immutable so a shallow dict copy is enough
        self._out: dict[NodeKey, tuple[EdgeKey, ...]] = {}
        self._in: dict[NodeKey, tuple[EdgeKey, ...]] = {}
        self._next_node = 1
        self._next_edge = 1
        self._sorted_edges: list[EdgeKey] | None = None

    @classmethod
    def build(
        cls,
        nodes: Iterable[HostNode | HostLabel],
        edges: Iterable[tuple[int, int, HostLabel]] = (),
    ) -> HostGraph:
        """Build a graph from node labels and ``(src, tgt, label)`` triples.

        Endpoints in ``edges`` are 0-based positions into ``nodes``.
        """
        ed = GraphEditor(cls())
        keys = [ed.add_node(n if isinstance(n, HostNode) else HostNode(n)) for n in nodes]
        for s, t, label in edges:
            ed.add_edge(keys[s], keys[t], label)
        return ed.freeze()

    # -- enumeration -------------------------------------------------------

    def nodes(self) -> list[NodeKey]:
        # keys are allocated in increasing order and dicts keep insertion order
        return list(self._nodes)

    def edges(self) -> list[EdgeKey]:
        if self._sorted_edges is None:
            self._sorted_edges = sorted(self._edges)
        return list(self._sorted_edges)

    def node_items(self) -> list[tuple[NodeKey, HostNode]]:
        return list(self._nodes.items())

    def edge_items(self) -> list[tuple[EdgeKey, HostLabel]]:
        return [(k, self._edges[k]) for k in self.edges()]

    @property
    def node_count(self) -> int:
        return len(self._nodes)

    @property
    def edge_count(self) -> int:
        return len(self._edges)

    # -- lookup ------------------------------------------------------------

    def has_node(self, k: NodeKey) -> bool:
        return k in self._nodes

    def has_edge(self, k: EdgeKey) -> bool:
        return k in self._edges

    def node(self, k: NodeKey) -> HostNode:
        try:
            return self._nodes[k]
        except KeyError:
            raise GraphError(f"no node with key {k}") from None

    def edge_label(self, k: EdgeKey) -> HostLabel:
        try:
            return self._edges[k]
        except KeyError:
            raise GraphError(f"no edge with key {k}") from None

    def out_edges(self, k: NodeKey) -> tuple[EdgeKey, ...]:
        self.node(k)
        return self._out[k]

    def in_edges(self, k: NodeKey) -> tuple[EdgeKey, ...]:
        self.node(k)
        return self._in[k]

    def outdegree(self, k: NodeKey) -> int:
        return len(self.out_edges(k))

    def indegree(self, k: NodeKey) -> int:
        return len(self.in_edges(k))

    def incident_edges(self, k: NodeKey) -> list[EdgeKey]:
        """Edges with ``k`` as source or target; a loop is reported once."""
        self.node(k)
        return sorted(set(self._out[k]) | set(self._in[k]))

    def edges_between(self, src: NodeKey, tgt: NodeKey) -> list[EdgeKey]:
        """Host edges from ``src`` to ``tgt`` in ascending key order."""
        return [e for e in self._out.get(src, ()) if e[1] == tgt]

    def successors(self, k: NodeKey) -> set[NodeKey]:
        return {e[1] for e in self._out.get(k, ())}

    def predecessors(self, k: NodeKey) -> set[NodeKey]:
        return {e[0] for e in self._in.get(k, ())}

    # -- persistent updates ------------------------------------------------

    def add_node(self, node: HostNode) -> tuple[HostGraph, NodeKey]:
        ed = GraphEditor(self)
        k = ed.add_node(node)
        return ed.freeze(), k

    def add_edge(self, src: NodeKey, tgt: NodeKey, label: HostLabel = EMPTY) -> tuple[HostGraph, EdgeKey]:
        ed = GraphEditor(self)
        k = ed.add_edge(src, tgt, label)
        return ed.freeze(), k

    def delete_node(self, k: NodeKey) -> HostGraph:
        ed = GraphEditor(self)
        ed.delete_node(k)
        return ed.freeze()

    def delete_edge(self, k: EdgeKey) -> HostGraph:
        ed = GraphEditor(self)
        ed.delete_edge(k)
        return ed.freeze()

    def relabel_node(self, k: NodeKey, label: HostLabel, root: bool | None = None) -> HostGraph:
        ed = GraphEditor(self)
        ed.relabel_node(k, label, root)
        return ed.freeze()

    def relabel_edge(self, k: EdgeKey, label: HostLabel) -> HostGraph:
        ed = GraphEditor(self)
        ed.relabel_edge(k, label)
        return ed.freeze()

    # -- checks ------------------------------------------------------------

    def validate(self) -> None:
        """Raise GraphError unless every structural invariant holds."""
        for (s, t, _), label in self._edges.items():
            if s not in self._nodes or t not in self._nodes:
                raise GraphError(f"edge {(s, t)} has a missing endpoint")
            _check_edge_label(label)
        for k, n in self._nodes.items():
            _check_node_label(n.label)
            if set(self._out[k]) != {e for e in self._edges if e[0] == k}:
                raise GraphError(f"out-adjacency of node {k} is stale")
            if set(self._in[k]) != {e for e in self._edges if e[1] == k}:
                raise GraphError(f"in-adjacency of node {k} is stale")
        if self._nodes and max(self._nodes) >= self._next_node:
            raise GraphError("node counter behind existing keys")

    def __eq__(self, other):
        if not isinstance(other, HostGraph):
            return NotImplemented
        return self._nodes == other._nodes and self._edges == other._edges

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self):
        return f"<HostGraph {self.node_count} nodes, {self.edge_count} edges>"


class GraphEditor:
    """Copy-on-construction batch editor producing a new :class:`HostGraph`."""

    def __init__(self, graph: HostGraph):
        g = HostGraph()
        g._nodes = dict(graph._nodes)
        g._edges = dict(graph._edges)
        g._out = dict(graph._out)
        g._in = dict(graph._in)
        g._next_node = graph._next_node
        g._next_edge = graph._next_edge
        self._g: HostGraph | None = g

    @property
    def graph(self) -> HostGraph:
        if self._g is None:
            raise GraphError("editor already frozen")
        return self._g

    def add_node(self, node: HostNode) -> NodeKey:
        g = self.graph
        _check_node_label(node.label)
        k = g._next_node
        g._next_node += 1
        g._nodes[k] = node
        g._out[k] = ()
        g._in[k] = ()
        return k

    def add_edge(self, src: NodeKey, tgt: NodeKey, label: HostLabel = EMPTY) -> EdgeKey:
        g = self.graph
        _check_edge_label(label)
        if src not in g._nodes or tgt not in g._nodes:
            raise GraphError(f"cannot add edge {src}->{tgt}: missing endpoint")
        k = (src, tgt, g._next_edge)
        g._next_edge += 1
        g._edges[k] = label
        g._out[src] = g._out[src] + (k,)
        g._in[tgt] = g._in[tgt] + (k,)
        return k

    def delete_edge(self, k: EdgeKey) -> None:
        g = self.graph
        if k not in g._edges:
            raise GraphError(f"no edge with key {k}")
        del g._edges[k]
        s, t, _ = k
        g._out[s] = tuple(e for e in g._out[s] if e != k)
        g._in[t] = tuple(e for e in g._in[t] if e != k)

    def delete_node(self, k: NodeKey) -> None:
        g = self.graph
        if k not in g._nodes:
            raise GraphError(f"no node with key {k}")
        if g._out[k] or g._in[k]:
            raise GraphError(f"node {k} still has incident edges")
        del g._nodes[k]
        del g._out[k]
        del g._in[k]

    def relabel_node(self, k: NodeKey, label: HostLabel, root: bool | None = None) -> None:
        g = self.graph
        old = g._nodes.get(k)
        if old is None:
            raise GraphError(f"no node with key {k}")
        _check_node_label(label)
        g._nodes[k] = HostNode(label, old.root if root is None else root)

    def relabel_edge(self, k: EdgeKey, label: HostLabel) -> None:
        g = self.graph
        if k not in g._edges:
            raise GraphError(f"no edge with key {k}")
        _check_edge_label(label)
        g._edges[k] = label

    def freeze(self) -> HostGraph:
        g = self.graph
        self._g = None
        return g


def empty_graph() -> HostGraph:
    return HostGraph()
