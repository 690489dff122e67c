import random

import networkx as nx
import pytest

from gp2.evaluator import Active, Mode, eval_program, run
from gp2.generators import gen, grid
from gp2.graph import EMPTY, HostGraph, HostLabel, HostNode, Mark
from gp2.isomorphism import isomorphic

from oracles import dijkstra_distances, sierpinski


def random_digraph(rng, n, p, label=lambda rng: EMPTY, node=lambda i: HostNode()):
    edges = [(s, t, label(rng)) for s in range(n) for t in range(n) if s != t and rng.random() < p]
    return HostGraph.build([node(i) for i in range(n)], edges)


def only(out):
    assert out.total == 1 and out.failures == 0 and out.unfinished == 0
    return out.classes[0].representative


@pytest.mark.parametrize("seed", range(25))
def test_transitive_closure_on_random_graphs(corpus, seed):
    rng = random.Random(seed)
    g = random_digraph(rng, rng.randint(2, 7), 0.3)
    h = only(eval_program(corpus("transitive_closure"), g, 10000, Mode.SINGLE_RESULT))
    reach = nx.transitive_closure(nx.DiGraph([(s, t) for s, t, _ in g.edges()]), reflexive=False)
    expected = {(s, t) for s, t in reach.edges() if s != t}
    assert {(s, t) for s, t, _ in h.edges()} - {(s, s) for s in h.nodes()} == expected
    assert h.edge_count == g.edge_count + len(expected - {(s, t) for s, t, _ in g.edges()})


@pytest.mark.parametrize("seed", range(25))
def test_shortest_distances_on_random_graphs(corpus, seed):
    rng = random.Random(seed)
    n = rng.randint(2, 7)
    g = random_digraph(
        rng,
        n,
        0.35,
        label=lambda r: HostLabel((r.randint(0, 9),)),
        node=lambda i: HostNode(HostLabel(("s",) if i == 0 else (i,), Mark.GREY if i == 0 else Mark.NONE)),
    )
    h = only(eval_program(corpus("shortest_distances"), g, 100000, Mode.SINGLE_RESULT))
    dist = dijkstra_distances(g, 1)
    for k in g.nodes():
        before, after = g.node(k).label, h.node(k).label
        if k in dist:
            assert after == HostLabel(before.values + (dist[k],), Mark.GREY)
        else:
            assert after == before


def test_shortest_distances_all_results_agree(corpus):
    # reduce! fires here: the first-found path to node 3 is the expensive one
    g = HostGraph.build(
        [HostLabel((), Mark.GREY), EMPTY, EMPTY],
        [(0, 2, HostLabel((9,))), (0, 1, HostLabel((1,))), (1, 2, HostLabel((1,)))],
    )
    out = eval_program(corpus("shortest_distances"), g, 10000)
    assert len(out.classes) == 1 and out.failures == 0
    rep = out.classes[0].representative
    assert [rep.node(k).label.values for k in rep.nodes()] == [(0,), (1,), (2,)]
    assert out.apps[1] > out.apps[0]


@pytest.mark.parametrize("seed", range(25))
def test_vertex_colouring_on_random_graphs(corpus, seed):
    rng = random.Random(seed)
    g = random_digraph(rng, rng.randint(1, 6), 0.4)
    g, _ = g.add_edge(1, 1, EMPTY)  # loops never force a recolouring
    h = only(eval_program(corpus("vertex_colouring"), g, 10000, Mode.SINGLE_RESULT))
    colour = {k: h.node(k).label.values[-1] for k in h.nodes()}
    assert all(h.node(k).label.mark is Mark.GREY and colour[k] >= 1 for k in h.nodes())
    assert all(colour[s] != colour[t] for s, t, _ in h.edges() if s != t)


@pytest.mark.parametrize("n", range(5))
def test_sierpinski_small_generations(corpus, n):
    out = eval_program(corpus("sierpinski"), gen(n), 10000, Mode.SINGLE_RESULT)
    assert isomorphic(only(out), sierpinski(n))


def test_sierpinski_rejects_other_input(corpus):
    out = eval_program(corpus("sierpinski"), HostGraph.build([HostLabel(("x",))]), 100)
    assert out.failures == 1 and out.classes == []


def test_acyclicity_preserves_acyclic_input(corpus):
    g = grid(3, 2, grey_corner=False)
    first = next(run(corpus("acyclicity"), g, 10000))
    assert isinstance(first, Active) and first.graph == g


def test_acyclicity_detects_a_loop(corpus):
    g = HostGraph.build([EMPTY, EMPTY], [(0, 1, EMPTY), (1, 1, EMPTY)])
    out = eval_program(corpus("acyclicity"), g, 10000)
    assert out.classes == [] and out.failures == 1
