import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from orientkit.graph import (Graph, disjoint_union, format_graph,
                             generic_bounds, join, parse_graph)
from orientkit.orientation import (CompensationSpec, Orientation,
                                   format_orientation, is_compensated_proper,
                                   is_proper, max_indegree, parse_orientation)


def transitive(g, order):
    pos = {v: i for i, v in enumerate(order)}
    heads = [v if pos[v] > pos[u] else u for u, v in g.edges]
    return Orientation.from_heads(g, heads)


def test_graph_invariants():
    g = Graph(4, [(0, 1), (1, 2), (2, 3), (0, 3)])
    assert g.n == 4 and g.m == 4
    assert sum(g.degrees()) == 2 * g.m
    assert g.adj[1] == [0, 2]
    with pytest.raises(ValueError):
        Graph(3, [(0, 0)])
    with pytest.raises(ValueError):
        Graph(3, [(0, 1), (1, 0)])
    with pytest.raises(ValueError):
        Graph(2, [(0, 5)])


def test_is_proper_examples():
    edge = Graph(2, [(0, 1)])
    assert is_proper(Orientation.from_heads(edge, [1]))
    tri = Graph.complete(3)
    cyclic = Orientation.from_arcs(tri, [(0, 1), (1, 2), (2, 0)])
    assert cyclic.indegree == (1, 1, 1)
    assert not is_proper(cyclic)
    k4 = Graph.complete(4)
    t = transitive(k4, [0, 1, 2, 3])
    assert t.indegree == (0, 1, 2, 3)
    assert is_proper(t)


def test_max_indegree_examples():
    k4 = Graph.complete(4)
    assert max_indegree(transitive(k4, [0, 1, 2, 3])) == 3
    star = Graph.star(3)
    inward = Orientation.from_heads(star, [0, 0, 0])
    assert max_indegree(inward) == 3
    assert max_indegree(Orientation(Graph.empty(3), [])) == 0


def test_compensated_examples():
    k3 = Graph.complete(3)
    t = transitive(k3, [0, 1, 2])
    assert is_compensated_proper(t, CompensationSpec(u=2, c=2, d=2))
    # recoloring the source with a neighbor's indegree breaks properness
    assert not is_compensated_proper(t, CompensationSpec(u=0, c=1, d=0))
    k4 = Graph.complete(4)
    t4 = transitive(k4, [0, 1, 2, 3])
    assert is_compensated_proper(t4, CompensationSpec(u=2, c=5, d=2))
    # wrong required indegree fails regardless of color
    assert not is_compensated_proper(t4, CompensationSpec(u=2, c=5, d=1))


def test_union_and_join():
    u = disjoint_union(Graph.complete(2), Graph.complete(2))
    assert u.n == 4 and u.m == 2
    j = join(Graph.complete(1), Graph.complete(3))
    assert j == Graph.complete(4)
    j2 = join(Graph.complete(3), Graph.complete(2))
    assert j2 == Graph.complete(5)


def test_generic_bounds():
    assert generic_bounds(Graph.complete(5), 5) == (4, 4)
    assert generic_bounds(Graph.star(4), 2) == (1, 4)
    assert generic_bounds(Graph.cycle_graph(4), 2) == (1, 2)


def test_graph_text_roundtrip():
    g = Graph(5, [(0, 1), (1, 4), (2, 3)])
    assert parse_graph(format_graph(g)) == g
    text = "# comment\n5   3\n0 1\n\n1 4  # arc\n2 3\n"
    assert parse_graph(text) == g


def test_orientation_text_roundtrip():
    g = Graph(3, [(0, 1), (1, 2)])
    d = Orientation.from_arcs(g, [(1, 0), (1, 2)])
    back = parse_orientation(format_orientation(d), g)
    assert back == d
    with pytest.raises(ValueError):
        parse_orientation("2 1\n0 1\n", g)


def test_indegree_cache_matches_recompute():
    rng = random.Random(7)
    for _ in range(30):
        n = rng.randint(1, 9)
        edges = [(u, v) for u in range(n) for v in range(u + 1, n)
                 if rng.random() < 0.5]
        g = Graph(n, edges)
        heads = [e[rng.randint(0, 1)] for e in g.edges]
        d = Orientation.from_heads(g, heads)
        assert list(d.indegree) == d.recompute_indegree()


@settings(max_examples=60, deadline=None)
@given(st.data())
def test_handshake_and_relabel_invariance(data):
    n = data.draw(st.integers(min_value=1, max_value=8))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = data.draw(st.sets(st.sampled_from(pairs))) if pairs else set()
    g = Graph(n, sorted(chosen))
    heads = [e[data.draw(st.integers(0, 1))] for e in g.edges]
    d = Orientation.from_heads(g, heads)
    assert sum(d.indegree) == g.m
    perm = data.draw(st.permutations(list(range(n))))
    g2 = g.relabeled(list(perm))
    arcs2 = [(perm[t], perm[h]) for t, h in d.arcs()]
    d2 = Orientation.from_arcs(g2, arcs2)
    assert is_proper(d) == is_proper(d2)
    assert max_indegree(d) == max_indegree(d2)


def test_reversal_indegree_formula_and_nonproperty():
    rng = random.Random(3)
    for _ in range(25):
        n = rng.randint(2, 8)
        edges = [(u, v) for u in range(n) for v in range(u + 1, n)
                 if rng.random() < 0.5]
        g = Graph(n, edges)
        heads = [e[rng.randint(0, 1)] for e in g.edges]
        d = Orientation.from_heads(g, heads)
        r = d.reversed()
        assert all(r.indegree[v] == g.degree(v) - d.indegree[v]
                   for v in range(n))
    # properness is not preserved by reversal: a path witness
    p4 = Graph.path_graph(4)
    d = Orientation.from_arcs(p4, [(0, 1), (2, 1), (3, 2)])
    assert is_proper(d)
    assert not is_proper(d.reversed())
