"""Host graph families used by the benchmark corpus."""

from __future__ import annotations

from .graph import EMPTY, GraphEditor, HostGraph, HostLabel, HostNode, Mark


def _require_positive(**sizes: int) -> None:
    for name, value in sizes.items():
        if value < 1:
            raise ValueError(f"{name} must be at least 1, got {value}")


def linear(n: int) -> HostGraph:
    """A chain of ``n`` unlabelled nodes joined by ``n - 1`` unlabelled edges."""
    _require_positive(n=n)
    ed = GraphEditor(HostGraph())
    keys = [ed.add_node(HostNode()) for _ in range(n)]
    for a, b in zip(keys, keys[1:]):
        ed.add_edge(a, b, EMPTY)
    return ed.freeze()


def cyclic(n: int) -> HostGraph:
    """``linear(n)`` plus an edge from the last node back to the first."""
    _require_positive(n=n)
    ed = GraphEditor(linear(n))
    keys = ed.graph.nodes()
    ed.add_edge(keys[-1], keys[0], EMPTY)
    return ed.freeze()


def grid(x: int, y: int, grey_corner: bool = True) -> HostGraph:
    """``x`` nodes wide and ``y`` tall; edges run rightwards (cost 1) and downwards (cost 2).

    Nodes are keyed row by row.  The top-left node is grey unless
    ``grey_corner`` is false.
    """
    _require_positive(x=x, y=y)
    ed = GraphEditor(HostGraph())
    keys = {}
    for row in range(y):
        for col in range(x):
            mark = Mark.GREY if grey_corner and row == col == 0 else Mark.NONE
            keys[row, col] = ed.add_node(HostNode(HostLabel((), mark)))
    for row in range(y):
        for col in range(x):
            if col + 1 < x:
                ed.add_edge(keys[row, col], keys[row, col + 1], HostLabel((1,)))
            if row + 1 < y:
                ed.add_edge(keys[row, col], keys[row + 1, col], HostLabel((2,)))
    return ed.freeze()


def gen(n: int) -> HostGraph:
    """A single node labelled ``n``: the Sierpinski program's input."""
    if n < 0:
        raise ValueError(f"generation must be non-negative, got {n}")
    return HostGraph.build([HostLabel((n,))])
