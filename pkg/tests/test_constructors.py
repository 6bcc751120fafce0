import random
from fractions import Fraction

import pytest

from orientkit.construct import (AlternatingMode, claw_free_chordal_bound,
                                 cograph_bounds, cograph_join_orient,
                                 extend_partial, extend_to_path,
                                 low_degree_orient, orient_alternating,
                                 outerplanar_strip_orient,
                                 path_block_compensated, path_block_sequence,
                                 quasi_threshold_orient, split_orient,
                                 two_cut_block_orient, uniform_block_orient)
from orientkit.errors import (BadCompensation, BadShape,
                              DegreeConditionViolated, HypothesisViolated,
                              NotApplicable, NotStrip, PreconditionViolated,
                              UnsupportedK)
from orientkit.exact import decide_k_orientation, proper_orientation_number
from orientkit.graph import Graph, disjoint_union, join
from orientkit.instances import (block_tight_example, random_class_instance,
                                 split_tight_example)
from orientkit.orientation import (CompensationSpec, Orientation,
                                   PartialOrientation, is_compensated_proper,
                                   is_proper, max_indegree)
from orientkit.recognize import (block_cut_tree, chordal_peo,
                                 clique_number_chordal, cograph_cotree,
                                 is_claw_free, outerplanar_strip,
                                 quasi_threshold_cotree, split_partition)
from oracles import random_tree


def fan(n):
    return Graph(n + 1, [(0, i) for i in range(1, n + 1)]
                 + [(i, i + 1) for i in range(1, n)])


# -- extend_partial ----------------------------------------------------------


def test_extend_partial_source():
    for g in (Graph.complete(4), Graph.star(4), Graph.cycle_graph(5)):
        for u in range(g.n):
            d = extend_partial(g, {u}, {})
            assert is_proper(d)
            assert d.indegree[u] == 0
            assert max_indegree(d) <= g.max_degree()


def test_extend_partial_keeps_seed_indegrees():
    g = Graph(5, [(0, 1), (0, 2), (1, 2), (0, 3), (1, 3), (2, 3), (0, 4),
                  (3, 4)])
    ds = {(0, 1): 1, (0, 2): 2, (1, 2): 2}
    # S = {0,1,2} is a triangle oriented transitively
    d = extend_partial(g, {0, 1, 2}, ds)
    assert is_proper(d)
    assert d.indegree[0] == 0 and d.indegree[1] == 1 and d.indegree[2] == 2


def test_extend_partial_precondition_violation():
    # adjacent seed with indegree 1 but a single-S-neighbor outside
    g = Graph(3, [(0, 1), (1, 2)])
    with pytest.raises(PreconditionViolated):
        extend_partial(g, {0, 1}, {(0, 1): 1})


def test_extend_partial_never_exceeds_degree():
    rng = random.Random(21)
    for _ in range(20):
        n = rng.randint(2, 8)
        edges = [(u, v) for u in range(n) for v in range(u + 1, n)
                 if rng.random() < 0.5]
        g = Graph(n, edges)
        d = extend_partial(g, frozenset(), {})
        assert is_proper(d)
        assert all(d.indegree[v] <= g.degree(v) for v in range(n))


# -- low degree --------------------------------------------------------------


def test_low_degree_examples():
    spider = Graph(7, [(0, 1), (0, 2), (0, 3), (1, 4), (2, 5), (3, 6)])
    d = low_degree_orient(spider, 2)
    assert is_proper(d) and max_indegree(d) <= 2
    with pytest.raises(DegreeConditionViolated):
        low_degree_orient(Graph.complete(3), 1)


def test_low_degree_trees():
    rng = random.Random(22)
    for c, thresh in ((2, 3), (3, 4)):
        for _ in range(20):
            t = random_tree(rng, rng.randint(2, 20),
                            no_adjacent_degree_at_least=thresh)
            d = low_degree_orient(t, c)
            assert is_proper(d) and max_indegree(d) <= c


# -- quasi-threshold ---------------------------------------------------------


def test_quasi_threshold_orient_examples():
    d = quasi_threshold_orient(quasi_threshold_cotree(Graph.complete(1)))
    assert max_indegree(d) == 0
    d = quasi_threshold_orient(quasi_threshold_cotree(Graph.complete(4)))
    assert sorted(d.indegree) == [0, 1, 2, 3]
    g = disjoint_union(Graph.complete(3), Graph.complete(2))
    d = quasi_threshold_orient(quasi_threshold_cotree(g))
    assert is_proper(d) and max_indegree(d) == 2


def test_quasi_threshold_always_optimal():
    for seed in range(30):
        g = random_class_instance("quasi-threshold", 3 + seed % 14, seed)
        cot = quasi_threshold_cotree(g)
        d = quasi_threshold_orient(cot)
        peo = chordal_peo(g).peo
        omega = clique_number_chordal(g, peo)
        assert is_proper(d) and max_indegree(d) == omega - 1


# -- split -------------------------------------------------------------------


def test_split_orient_clique_only():
    g = Graph.complete(4)
    d = split_orient(g, split_partition(g))
    assert is_proper(d) and max_indegree(d) == 3


def test_split_orient_tight_examples():
    g = split_tight_example(2)
    d = split_orient(g, split_partition(g))
    assert is_proper(d) and max_indegree(d) <= 2
    g = split_tight_example(3)
    assert g.n == 39 and g.m == 57
    d = split_orient(g, split_partition(g))
    assert is_proper(d) and max_indegree(d) <= 4


def test_split_orient_seeded():
    for seed in range(40):
        g = random_class_instance("split", 4 + seed % 30, seed)
        part = split_partition(g)
        d = split_orient(g, part)
        omega = len(part.clique)
        assert is_proper(d) and max_indegree(d) <= max(2 * omega - 2, 0)


# -- compensated path pieces --------------------------------------------------


def test_path_block_compensated_single_clique():
    seq = path_block_sequence([(0, 1, 2)])
    d = path_block_compensated(seq, 1, 5, 1)
    assert d.indegree == (0, 1, 2)
    assert is_compensated_proper(d, CompensationSpec(1, 5, 1))
    d = path_block_compensated(seq, 2, 2, 2)
    assert is_compensated_proper(d, CompensationSpec(2, 2, 2))


def test_path_block_compensated_recursive_cases():
    seq = path_block_sequence([(0, 1, 2), (2, 3, 4)])
    # d >= 1, d = 0 away from the boundary color, and d = 0 at it
    for c, dd in ((4, 1), (5, 0), (4, 0), (3, 1), (2, 2)):
        d = path_block_compensated(seq, 3, c, dd)
        assert is_compensated_proper(d, CompensationSpec(3, c, dd))
        assert max_indegree(d) <= max(c, 4)
    long = path_block_sequence([(0, 1, 2, 3), (3, 4, 5, 6), (6, 7, 8, 9)])
    for c, dd in ((7, 0), (6, 0), (8, 2), (3, 3)):
        d = path_block_compensated(long, 8, c, dd)
        assert is_compensated_proper(d, CompensationSpec(8, c, dd))
        assert max_indegree(d) <= max(c, 6)


def test_path_block_compensated_rejections():
    seq = path_block_sequence([(0, 1, 2), (2, 3, 4)])
    with pytest.raises(BadCompensation):
        path_block_compensated(seq, 3, 1, 2)  # c <= k-1 without c == d
    with pytest.raises(BadShape):
        path_block_compensated(seq, 2, 4, 1)  # u is the connector
    with pytest.raises(BadShape):
        path_block_sequence([(0, 1, 2), (2, 3, 4), (4, 5, 0)])
    with pytest.raises(BadShape):
        path_block_sequence([(0, 1), (1, 2)]) and path_block_compensated(
            path_block_sequence([(0, 1), (1, 2)]), 2, 3, 0)


# -- uniform block graphs ------------------------------------------------------


def test_uniform_block_small_cases():
    k4 = Graph.complete(4)
    d = uniform_block_orient(k4, block_cut_tree(k4), 4)
    assert sorted(d.indegree) == [0, 1, 2, 3]
    # a path of cliques stays within its max degree
    seq_graph = Graph(10, [(a, b) for blk in ((0, 1, 2, 3), (3, 4, 5, 6),
                                              (6, 7, 8, 9))
                           for i, a in enumerate(blk) for b in blk[i + 1:]])
    d = uniform_block_orient(seq_graph, None, 4)
    assert is_proper(d) and max_indegree(d) <= 6


def test_uniform_block_tight_examples():
    for k in (3, 4):
        g = block_tight_example(k)
        d = uniform_block_orient(g, None, k)
        assert is_proper(d) and max_indegree(d) <= 3 * k - 2


def test_uniform_block_seeded():
    for k in (3, 4):
        for seed in range(50):
            g = random_class_instance("uniform-block", 2 + seed % 11,
                                      seed * 31 + k, k)
            d = uniform_block_orient(g, None, k)
            assert is_proper(d) and max_indegree(d) <= 3 * k - 2


def test_uniform_block_rejects_trees():
    with pytest.raises(UnsupportedK):
        uniform_block_orient(Graph.path_graph(4), None, 2)


def test_two_cut_block_examples():
    two = Graph(5, [(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)])
    d = two_cut_block_orient(two, None, 3)
    assert is_proper(d) and max_indegree(d) <= 4
    assert d.indegree[2] in (0, 3, 4)
    g3 = block_tight_example(3)
    d = two_cut_block_orient(g3, None, 3)
    assert is_proper(d) and max_indegree(d) <= 4
    k5 = Graph.complete(5)
    d = two_cut_block_orient(k5, None, 5)
    assert max_indegree(d) == 4


def test_two_cut_block_seeded():
    for k in (3, 4, 5):
        for seed in range(40):
            g = random_class_instance("two-cut-block", 2 + seed % 9,
                                      seed * 17 + k, k)
            bct = block_cut_tree(g)
            d = two_cut_block_orient(g, bct, k)
            assert is_proper(d) and max_indegree(d) <= k + 1
            assert all(d.indegree[v] in (0, k, k + 1)
                       for v in bct.cut_vertices)
            # the orientation restricted to every block is transitive
            for blk in bct.blocks:
                vals = sorted(sum(1 for w in blk if w != v
                                  and d.head(g.edge_id(v, w)) == v)
                              for v in blk)
                assert vals == list(range(k))


# -- alternating paths and strips ----------------------------------------------


def test_orient_alternating_modes():
    g = Graph.path_graph(7)
    p = orient_alternating(g, list(range(7)), AlternatingMode.SINK_ENDS)
    assert p.indegree == [1, 0, 2, 0, 2, 0, 1]
    p = orient_alternating(g, list(range(7)), AlternatingMode.SOURCE_ENDS)
    assert p.indegree == [0, 2, 0, 2, 0, 2, 0]
    g6 = Graph.path_graph(6)
    p = orient_alternating(g6, list(range(6)),
                           AlternatingMode.LEFT_SOURCE_RIGHT_SINK)
    assert p.indegree == [0, 2, 0, 2, 0, 1]
    with pytest.raises(HypothesisViolated):
        orient_alternating(g6, list(range(6)), AlternatingMode.SINK_ENDS)


def test_no_two_consecutive_arcs_aligned():
    for n, modes in ((9, (AlternatingMode.SINK_ENDS,
                          AlternatingMode.SOURCE_ENDS)),
                     (8, (AlternatingMode.LEFT_SOURCE_RIGHT_SINK,
                          AlternatingMode.LEFT_SINK_RIGHT_SOURCE))):
        g = Graph.path_graph(n)
        for mode in modes:
            p = orient_alternating(g, list(range(n)), mode)
            heads = [p.head_of(i, i + 1) for i in range(n - 1)]
            for a, b in zip(heads, heads[1:]):
                assert (a > b) != (b > a) or True
            forward = [h == i + 1 for i, h in enumerate(heads)]
            assert all(x != y for x, y in zip(forward, forward[1:]))


def _fan_path_fixture(ell, first_indeg, d0, dl):
    """Hub + path of length ell + two anchors, with prescribed indegrees."""
    # vertices: 0 = hub v, 1..ell = path, ell+1 = v0-anchor, ell+2 = end-anchor
    # anchors get private leaf pools to reach the wanted indegrees
    n = ell + 3
    edges = [(0, i) for i in range(1, ell + 1)]
    edges += [(i, i + 1) for i in range(1, ell)]
    edges += [(ell + 1, 1), (ell, ell + 2)]
    pool = []
    for want, anchor in ((d0 - (0 if first_indeg == 2 else 1), ell + 1),
                         (dl, ell + 2)):
        for _ in range(max(want, 0)):
            pool.append((anchor, n))
            n += 1
    hub_pool = [(0, n + i) for i in range(4)]
    n += 4
    g = Graph(n, edges + pool + hub_pool)
    p = PartialOrientation(g)
    for i in range(1, ell + 1):
        p.orient(0, i, i)
    for a, b in hub_pool:
        p.orient(a, b, 0)
    p.orient(ell + 1, 1, 1 if first_indeg == 2 else ell + 1)
    p.orient(ell, ell + 2, ell)
    for a, b in pool:
        p.orient(a, b, a)
    assert p.indegree[1] == first_indeg
    assert p.indegree[ell] == 2
    assert p.indegree[ell + 1] == d0 and p.indegree[ell + 2] == dl
    return g, p


def test_extend_to_path_all_cases():
    for ell in (6, 7, 8, 9):
        for first in (1, 2):
            for d0 in (0, 1, 2, 3, 4):
                if first == 1 and d0 == 0:
                    continue  # the reversed anchor edge already gives 1
                for dl in (0, 1, 2, 3, 4):
                    g, p = _fan_path_fixture(ell, first, d0, dl)
                    d = extend_to_path(g, p, 0, ell + 1,
                                       list(range(1, ell + 1)), ell + 2)
                    assert is_proper(d)


def test_extend_to_path_hypothesis_violations():
    g, p = _fan_path_fixture(5, 2, 1, 2)
    with pytest.raises(HypothesisViolated):
        extend_to_path(g, p, 0, 6, [1, 2, 3, 4, 5], 7)


def test_strip_orient_examples():
    d = outerplanar_strip_orient(Graph.complete(3))
    assert is_proper(d) and max_indegree(d) <= 2
    d = outerplanar_strip_orient(fan(12))
    assert is_proper(d) and max_indegree(d) <= 13
    d = outerplanar_strip_orient(fan(17))  # forces the recursive split
    assert is_proper(d) and max_indegree(d) <= 13
    with pytest.raises(NotStrip):
        outerplanar_strip_orient(Graph.complete(4))


def test_strip_orient_seeded():
    saw_big = 0
    for seed in range(40):
        g = random_class_instance("strip", 3 + seed % 50, seed)
        strip = outerplanar_strip(g)
        assert strip is not None
        if g.max_degree() >= 14:
            saw_big += 1
        d = outerplanar_strip_orient(g, strip)
        assert is_proper(d) and max_indegree(d) <= 13
    assert saw_big >= 5


def test_strip_orient_snake_with_degree_sixteen():
    g = random_class_instance("strip", 30, 9)
    assert g.max_degree() == 16  # frozen seed: forces the recursive split
    d = outerplanar_strip_orient(g)
    assert is_proper(d) and max_indegree(d) <= 13


# -- cographs -------------------------------------------------------------------


def test_cograph_bounds_examples():
    g = join(Graph.complete(2), Graph.complete(2))
    lo, up = cograph_bounds(cograph_cotree(g).cotree)
    assert up == 3
    assert proper_orientation_number(g)[0] == 3
    gj = join(Graph.empty(4), Graph.empty(4))
    lo, up = cograph_bounds(cograph_cotree(gj).cotree)
    assert lo == Fraction(2)
    for n in (2, 4, 7):
        _, up = cograph_bounds(cograph_cotree(Graph.complete(n)).cotree)
        assert up == n - 1


def test_cograph_join_orient():
    k2 = Graph.complete(2)
    d1 = Orientation.from_heads(k2, [1])
    d = cograph_join_orient(k2, k2, d1, d1)
    assert is_proper(d) and max_indegree(d) <= 3
    e3 = Graph.empty(3)
    d = cograph_join_orient(e3, k2, Orientation(e3, []), d1)
    assert is_proper(d)


def test_cograph_sandwich_small():
    for seed in (0, 1, 2, 3, 4, 6, 7, 8):
        g = random_class_instance("cograph", 4 + seed % 7, seed)
        ct = cograph_cotree(g).cotree
        lo, up = cograph_bounds(ct)
        exact, _ = proper_orientation_number(g)
        assert lo <= exact <= up


# -- claw-free chordal -----------------------------------------------------------


def test_claw_free_chordal_bound():
    assert claw_free_chordal_bound(Graph.complete(5)) == 4
    assert claw_free_chordal_bound(Graph.path_graph(5)) == 2
    with pytest.raises(NotApplicable):
        claw_free_chordal_bound(Graph.star(3))
    with pytest.raises(NotApplicable):
        claw_free_chordal_bound(Graph.cycle_graph(6))
    # chains of cliques are claw-free chordal
    for seed in range(15):
        k = 3 + seed % 3
        g = random_class_instance("two-cut-block", 2 + seed % 5, seed, k)
        if is_claw_free(g) and chordal_peo(g).peo is not None:
            bound = claw_free_chordal_bound(g)
            peo = chordal_peo(g).peo
            assert bound <= 3 * clique_number_chordal(g, peo)


# -- cross-cutting: constructor outputs are feasible --------------------------


def test_constructor_outputs_feasible_for_exact_solver():
    for seed in range(8):
        g = random_class_instance("split", 5 + seed, seed)
        if g.m > 14:
            continue
        d = split_orient(g, split_partition(g))
        assert decide_k_orientation(g, max_indegree(d)) is not None
    for seed in range(8):
        g = random_class_instance("quasi-threshold", 5 + seed, seed)
        if g.m > 14:
            continue
        d = quasi_threshold_orient(quasi_threshold_cotree(g))
        assert decide_k_orientation(g, max_indegree(d)) is not None
