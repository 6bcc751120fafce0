"""Polynomial-time constructors of proper orientations, one per graph class.

Each public function returns an Orientation that the verifier accepts and
whose maximum indegree meets the class bound:

    quasi-threshold         omega - 1          (optimal)
    split                   2*omega - 2
    k-uniform block          3k - 2
    two-cut k-uniform block  k + 1             (cut indegrees in {0, k, k+1})
    degree condition         c
    outerplane strip         13
    cograph join             min over the two cross directions

The block-graph machinery works by repeatedly detaching hanging path
pieces or crossroad structures around a deepest reducible cut vertex,
orienting the rest recursively, and re-attaching each piece with a
compensated orientation: the piece carries a prescribed indegree at the
attachment vertex and is proper when that vertex wears a prescribed color
equal to the vertex's eventual global indegree.  Local extensions are
found by a small deterministic assignment search over clique positions,
colors, and per-piece indegree splits; the verifier re-checks every
output.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .errors import (BadCompensation, BadShape, BudgetExceeded,
                     ConstructionError, DegreeConditionViolated,
                     HypothesisViolated, NotApplicable, NotSplit, NotStrip,
                     NotUniformBlock, PreconditionViolated, UnsupportedK)
from .exact import SearchConfig, decide_k_orientation
from .graph import Graph, join
from .orientation import (CompensationSpec, Orientation, PartialOrientation,
                          is_compensated_proper, is_proper, max_indegree)
from .recognize import (BlockCutTree, CotreeJoin, CotreeLeaf, CotreeUnion,
                        SplitPartition, block_cut_tree, chordal_peo,
                        clique_number_chordal, cotree_vertices,
                        evaluate_cotree, is_claw_free, is_k_uniform,
                        outerplanar_strip)


# -- greedy extension of a partial orientation ----------------------------


def extend_partial(g: Graph, s, ds) -> Orientation:
    """Extend a proper orientation of G[S] to a proper max-degree orientation.

    ds maps each edge inside S (any endpoint order) to its head vertex and
    must cover exactly the edges of G[S].  Vertices of S keep their ds
    indegrees; every other vertex ends at most at its degree.  Requires,
    for every v outside S with a neighbor u in S, |N(v) & S| > indeg_ds(u).

    The completion repeatedly picks the vertex outside S maximizing
    current indegree + unoriented incident edges (ties to the smallest id)
    and orients all its remaining edges inward.
    """
    sset = frozenset(s)
    heads = {}
    for (a, b), h in ds.items():
        e = (a, b) if a < b else (b, a)
        if not g.has_edge(*e):
            raise PreconditionViolated(f"ds contains non-edge {e}")
        if e in heads:
            raise PreconditionViolated(f"ds orients edge {e} twice")
        if h not in e:
            raise PreconditionViolated(f"{h} is not an endpoint of {e}")
        heads[e] = h
    inside = {(u, v) for (u, v) in g.edges if u in sset and v in sset}
    if set(heads) != inside:
        raise PreconditionViolated("ds must cover exactly the edges inside S")

    p = PartialOrientation(g)
    for (u, v), h in sorted(heads.items()):
        p.orient(u, v, h)
    for u, v in inside:
        if p.indegree[u] == p.indegree[v]:
            raise PreconditionViolated(
                f"ds is not proper on G[S]: {u} and {v} both have "
                f"indegree {p.indegree[u]}")
    for v in range(g.n):
        if v in sset:
            continue
        ns = [u for u in g.adj[v] if u in sset]
        for u in ns:
            if len(ns) <= p.indegree[u]:
                raise PreconditionViolated(
                    f"vertex {v} has only {len(ns)} neighbors in S but "
                    f"{u} has indegree {p.indegree[u]}")
    for v in sorted(sset):
        for w in g.adj[v]:
            if w not in sset:
                p.orient(v, w, w)

    pending = [0] * g.n
    for (u, v) in g.edges:
        if u not in sset and v not in sset:
            pending[u] += 1
            pending[v] += 1
    live = [v for v in range(g.n) if pending[v]]
    while live:
        pick = max(live, key=lambda v: (p.indegree[v] + pending[v], -v))
        for w in g.adj[pick]:
            if w not in sset and not p.is_oriented(pick, w):
                p.orient(pick, w, pick)
                pending[w] -= 1
        pending[pick] = 0
        live = [v for v in live if pending[v]]
    d = p.to_orientation()
    assert is_proper(d)
    return d


def low_degree_orient(g: Graph, c: int) -> Orientation:
    """Proper c-orientation when no two adjacent vertices have degree > c."""
    if c < 1:
        raise ValueError("the degree threshold c must be positive")
    s = {v for v in range(g.n) if g.degree(v) >= c + 1}
    for u, v in g.edges:
        if u in s and v in s:
            raise DegreeConditionViolated((u, v))
    d = extend_partial(g, s, {})
    assert max_indegree(d) <= c
    return d


# -- quasi-threshold graphs -----------------------------------------------


def quasi_threshold_orient(cotree) -> Orientation:
    """Optimal (omega-1)-orientation from a quasi-threshold cotree."""
    verts = cotree_vertices(cotree)
    n = max(verts) + 1 if verts else 0
    g = evaluate_cotree(cotree, n)
    p = PartialOrientation(g)

    def walk(node):
        if isinstance(node, CotreeLeaf):
            return
        if isinstance(node, CotreeUnion):
            for ch in node.children:
                walk(ch)
            return
        assert isinstance(node, CotreeJoin)
        head, rest = node.children
        assert isinstance(head, CotreeLeaf), "join must add a single vertex"
        walk(rest)
        v = head.vertex
        for u in sorted(cotree_vertices(rest)):
            p.orient(v, u, u)

    walk(cotree)
    d = p.to_orientation()
    assert is_proper(d)
    return d


# -- split graphs ----------------------------------------------------------


def split_orient(g: Graph, part: SplitPartition) -> Orientation:
    """Proper (2*omega - 2)-orientation of a split graph."""
    kv = sorted(part.clique)
    iv = frozenset(part.independent)
    if not g.is_clique(kv) or any(g.has_edge(u, v)
                                  for u in iv for v in g.adj[u] if v in iv):
        raise NotSplit("partition is not a split partition")
    omega = len(kv)
    bound = max(2 * omega - 2, 0)
    p = PartialOrientation(g)
    heavy = [v for v in kv if g.degree(v) >= bound]
    h = len(heavy)
    light = [v for v in kv if v not in set(heavy)]
    picked = {}
    for v in heavy:
        inb = [w for w in g.adj[v] if w in iv]
        assert len(inb) >= omega - 1
        picked[v] = inb[:omega - 1]
    for v in heavy:
        for u in light:
            p.orient(u, v, v)
    for i, v in enumerate(heavy):
        if i == 0:
            continue
        for w in picked[v]:
            p.orient(v, w, v)
        for j in range(i):
            p.orient(heavy[j], v, v)
    if h == omega and h > 0:
        for u, v in g.edges:
            if not p.is_oriented(u, v):
                p.orient(u, v, v if v in iv else u)
    else:
        if h > 0:
            for w in picked[heavy[0]]:
                p.orient(w, heavy[0], heavy[0])
        heavyset = set(heavy)
        pend = [0] * g.n
        for u, v in g.edges:
            if not p.is_oriented(u, v):
                pend[u] += 1
                pend[v] += 1
        candidates = [v for v in range(g.n) if v not in heavyset]
        rank = {}
        alive = set(candidates)
        for r in range(len(candidates), 0, -1):
            pick = max(alive, key=lambda v: (pend[v], -v))
            rank[pick] = r
            alive.discard(pick)
            for w in g.adj[pick]:
                if not p.is_oriented(pick, w) and w in alive:
                    pend[w] -= 1
        for u, v in g.edges:
            if p.is_oriented(u, v):
                continue
            if u in heavyset:
                p.orient(u, v, v)
            elif v in heavyset:
                p.orient(u, v, u)
            else:
                p.orient(u, v, v if rank[v] > rank[u] else u)
    d = p.to_orientation()
    assert is_proper(d) and max_indegree(d) <= bound
    return d


# -- compensated orientations of path-of-cliques pieces --------------------


@dataclass(frozen=True)
class PathBlockSequence:
    """Cliques C_1..C_q, consecutive ones sharing exactly one connector."""

    cliques: tuple
    connectors: tuple

    @property
    def k(self):
        return len(self.cliques[0])


def path_block_sequence(cliques) -> PathBlockSequence:
    cliques = tuple(tuple(sorted(c)) for c in cliques)
    if not cliques:
        raise BadShape("empty clique sequence")
    k = len(cliques[0])
    if any(len(c) != k for c in cliques):
        raise BadShape("cliques must all have the same size")
    if any(len(set(c)) != k for c in cliques):
        raise BadShape("cliques must not repeat vertices")
    connectors = []
    for a, b in zip(cliques, cliques[1:]):
        inter = set(a) & set(b)
        if len(inter) != 1:
            raise BadShape("consecutive cliques must share exactly one vertex")
        connectors.append(inter.pop())
    for i in range(len(cliques)):
        for j in range(i + 2, len(cliques)):
            if set(cliques[i]) & set(cliques[j]):
                raise BadShape("non-consecutive cliques must be disjoint")
    if any(a == b for a, b in zip(connectors, connectors[1:])):
        raise BadShape("consecutive connectors must be distinct")
    return PathBlockSequence(cliques, tuple(connectors))


def _transitive(p: PartialOrientation, clique_in_order):
    """Orient a clique transitively: earlier vertices point at later ones."""
    for i in range(len(clique_in_order)):
        for j in range(i + 1, len(clique_in_order)):
            p.orient(clique_in_order[i], clique_in_order[j],
                     clique_in_order[j])


def _clique_order(verts, placed):
    """Total order on a clique respecting placed positions (vertex -> pos)."""
    k = len(verts)
    order = [None] * k
    for v, pos in placed.items():
        assert order[pos] is None
        order[pos] = v
    rest = sorted(v for v in verts if v not in placed)
    it = iter(rest)
    for i in range(k):
        if order[i] is None:
            order[i] = next(it)
    return order


def _end_feasible(q, k, c, d):
    """Can a q-clique path with an end-attached target realize (color c, indeg d)?"""
    if d < 0 or d > k - 1 or c < 0:
        return False
    if c >= k or c == d:
        return True
    return q >= 2 and d == 0 and c == k - 1


def _mid_choices(k, q_left, q_right, c, d):
    """Position/color choices for a target sitting in a middle clique."""
    if d < 0 or d > k - 1:
        return
    positions = [x for x in range(k) if x != d]
    for alpha in positions:
        for beta in positions:
            if beta == alpha:
                continue
            noncut = set(positions) - {alpha, beta}
            if c in noncut:
                continue
            for cx in range(alpha, alpha + k):
                if not _end_feasible(q_left, k, cx, cx - alpha):
                    continue
                if cx == d or cx == c or cx in noncut:
                    continue
                for cy in range(beta, beta + k):
                    if not _end_feasible(q_right, k, cy, cy - beta):
                        continue
                    if cy in (d, c, cx) or cy in noncut:
                        continue
                    yield alpha, beta, cx, cy
                    return  # deterministic: first admissible choice


@dataclass
class PieceShape:
    """Structure of a path-of-cliques piece around its attachment vertex."""

    graph: Graph
    old_ids: list
    blocks: list        # local vertex tuples in path order
    target: int         # local id of the attachment vertex
    target_index: int   # position of the target's block on the path

    @property
    def k(self):
        return len(self.blocks[0])

    def q(self):
        return len(self.blocks)

    def is_end(self):
        return self.target_index in (0, len(self.blocks) - 1)

    def side_sizes(self):
        return self.target_index, len(self.blocks) - 1 - self.target_index


def _piece_shape(g: Graph, verts, target) -> PieceShape:
    sub, old = g.induced(verts)
    pos = {v: i for i, v in enumerate(old)}
    bct = block_cut_tree(sub)
    blocks = list(bct.blocks)
    if len(blocks) == 1:
        ordered = blocks
    else:
        incidence = {i: set() for i in range(len(blocks))}
        for v, bids in bct.blocks_of.items():
            for a in bids:
                for b in bids:
                    if a != b:
                        incidence[a].add(b)
        if any(len(s) > 2 for s in incidence.values()):
            raise BadShape("piece is not a path of cliques")
        ends = sorted(i for i, s in incidence.items() if len(s) == 1)
        assert len(ends) == 2
        ordered, seen = [ends[0]], {ends[0]}
        while len(ordered) < len(blocks):
            nxt = [x for x in incidence[ordered[-1]] if x not in seen]
            assert nxt
            ordered.append(nxt[0])
            seen.add(nxt[0])
        ordered = [blocks[i] for i in ordered]
    t = pos[target]
    holding = [i for i, blk in enumerate(ordered) if t in blk]
    if len(holding) != 1:
        raise BadShape("attachment vertex must be a non-cut vertex")
    return PieceShape(sub, old, ordered, t, holding[0])


def _piece_feasible(shape: PieceShape, c, d):
    k = shape.k
    if shape.is_end():
        return _end_feasible(shape.q(), k, c, d)
    ql, qr = shape.side_sizes()
    return next(_mid_choices(k, ql, qr, c, d), None) is not None


def _orient_compensated(shape: PieceShape, c, d) -> Orientation:
    """Orientation of the piece with indegree d at the target, proper under
    color c, max indegree <= max(c, 2k-2).  Caller checks feasibility."""
    g, k = shape.graph, shape.k
    blocks = shape.blocks
    if shape.is_end():
        if shape.target_index == 0:
            blocks = list(reversed(blocks))
        out = _orient_end(g, k, blocks, shape.target, c, d)
        assert is_compensated_proper(out, CompensationSpec(shape.target, c, d))
        assert max_indegree(out) <= max(c, 2 * k - 2)
        return out
    ql, qr = shape.side_sizes()
    choice = next(_mid_choices(k, ql, qr, c, d), None)
    if choice is None:
        raise ConstructionError(f"no compensated extension for (c={c}, d={d})")
    alpha, beta, cx, cy = choice
    bi = shape.target_index
    block = blocks[bi]
    x = (set(block) & set(blocks[bi - 1])).pop()
    y = (set(block) & set(blocks[bi + 1])).pop()
    p = PartialOrientation(g)
    _transitive(p, _clique_order(block, {shape.target: d, x: alpha, y: beta}))
    left = sorted(set().union(*blocks[:bi]))
    right = sorted(set().union(*blocks[bi + 1:]))
    for verts, tgt, cc, dd, side_blocks in (
            (left, x, cx, cx - alpha, blocks[:bi]),
            (right, y, cy, cy - beta, blocks[bi + 1:])):
        sub, old = g.induced(verts)
        pos = {v: i for i, v in enumerate(old)}
        loc_blocks = [tuple(sorted(pos[v] for v in blk)) for blk in side_blocks]
        if loc_blocks and pos[tgt] not in loc_blocks[-1]:
            loc_blocks = list(reversed(loc_blocks))
        d_side = _orient_end(sub, k, loc_blocks, pos[tgt], cc, dd)
        for e, (lu, lv) in enumerate(sub.edges):
            p.orient(old[lu], old[lv], old[d_side.head(e)])
    out = p.to_orientation()
    assert is_compensated_proper(out, CompensationSpec(shape.target, c, d))
    assert max_indegree(out) <= max(c, 2 * k - 2)
    return out


def _orient_end(g: Graph, k, blocks, target, c, d) -> Orientation:
    """blocks in path order with the target in the last clique."""
    q = len(blocks)
    assert _end_feasible(q, k, c, d), (q, k, c, d)
    last = blocks[-1]
    if q == 1:
        p = PartialOrientation(g)
        _transitive(p, _clique_order(last, {target: d}))
        return p.to_orientation()
    connector = (set(last) & set(blocks[-2])).pop()
    inner = sorted(v for blk in blocks[:-1] for v in blk)
    sub, old = g.induced(inner)
    pos = {v: i for i, v in enumerate(old)}
    loc_blocks = [tuple(sorted(pos[v] for v in blk)) for blk in blocks[:-1]]
    p = PartialOrientation(g)
    if d >= 1:
        d_inner = extend_partial(sub, {pos[connector]}, {})
        _transitive(p, _clique_order(last, {connector: 0, target: d}))
    else:
        c_sub = 2 * k - 2 if c != 2 * k - 2 else 2 * k - 3
        d_inner = _orient_end(sub, k, loc_blocks, pos[connector], c_sub, k - 1)
        conn_pos = k - 1 if c != 2 * k - 2 else k - 2
        _transitive(p, _clique_order(last, {target: 0, connector: conn_pos}))
    for e, (lu, lv) in enumerate(sub.edges):
        p.orient(old[lu], old[lv], old[d_inner.head(e)])
    return p.to_orientation()


def path_block_compensated(seq: PathBlockSequence, u, c, d) -> Orientation:
    """Compensated orientation of a k-uniform path of cliques.

    u must be a non-cut vertex of the last clique; requires either
    c > k-1 >= d or c = d = k-1.  The result has indegree d at u, maximum
    indegree at most max(c, 2k-2), and the indegree coloring with u
    recolored to c is proper.
    """
    seq = path_block_sequence(seq.cliques)
    k = seq.k
    if k < 3:
        raise BadShape("cliques must have size at least 3")
    last = seq.cliques[-1]
    if u not in last or (len(seq.cliques) > 1 and u == seq.connectors[-1]):
        raise BadShape("u must be a non-cut vertex of the last clique")
    if not ((c > k - 1 >= d >= 0) or (c == d == k - 1)):
        raise BadCompensation(f"(c, d) = ({c}, {d}) with k = {k}")
    verts = sorted({v for blk in seq.cliques for v in blk})
    if verts != list(range(len(verts))):
        raise BadShape("vertex ids must be dense 0..n-1")
    g = Graph(len(verts), {(a, b) for blk in seq.cliques
                           for a in blk for b in blk if a < b})
    result = _orient_end(g, k, list(seq.cliques), u, c, d)
    assert result.indegree[u] == d
    assert max_indegree(result) <= max(c, 2 * k - 2)
    return result


# -- k-uniform block graphs: the general 3k-2 construction -----------------


def _copy_arcs(p: PartialOrientation, sub: Graph, old_ids, d_sub: Orientation):
    for e, (lu, lv) in enumerate(sub.edges):
        p.orient(old_ids[lu], old_ids[lv], old_ids[d_sub.head(e)])


def _children_map(rooted):
    """cut vertex -> list of (child block id, subtree vertex set minus cut)."""
    out = {}
    for v, kids in rooted.cut_children_blocks.items():
        out[v] = [(bi, rooted.subtree_vertices(bi) - {v}) for bi in kids]
    return out


def _is_path_subtree(rooted, block_id):
    """Subtree rooted at this block has the shape of a path of cliques,
    attached at its parent cut vertex (possibly in a middle clique)."""
    if len(rooted.block_children_cuts[block_id]) > 2:
        return False
    stack = [(block_id, True)]
    while stack:
        bi, is_root = stack.pop()
        kids = rooted.block_children_cuts[bi]
        if len(kids) > (2 if is_root else 1):
            return False
        for v in kids:
            blocks_below = rooted.cut_children_blocks[v]
            if len(blocks_below) > 1:
                return False
            stack.extend((b, False) for b in blocks_below)
    return True


def _assign_crosspoint(p: PartialOrientation, g: Graph, k, u, block_verts,
                       cut_pieces, u_pos, u_final, forbid=()):
    """Orient one clique plus the path pieces hanging from its cut vertices.

    cut_pieces: cut vertex -> list of PieceShape (its hanging pieces).
    u sits at position u_pos of the transitive clique; u_final is u's
    eventual global indegree.  Returns True and writes the arcs on
    success, False when no assignment exists.
    """
    cuts = sorted(cut_pieces)
    slots = sorted(set(range(k)) - {u_pos})
    forbid = set(forbid) | {u_final}

    def colors_for(shapes, pos):
        hi = min(pos + (k - 1) * len(shapes), 3 * k - 2)
        return range(pos, hi + 1)

    for pos_tuple in itertools.permutations(slots, len(cuts)):
        noncut = set(slots) - set(pos_tuple)
        if u_final in noncut:
            continue
        chosen = []

        def solve(i):
            if i == len(cuts):
                return True
            w = cuts[i]
            pos = pos_tuple[i]
            shapes = cut_pieces[w]
            for cw in colors_for(shapes, pos):
                if cw in forbid or cw in noncut or cw in (x[1] for x in chosen):
                    continue
                split = _feasible_split(shapes, k, cw, cw - pos)
                if split is None:
                    continue
                chosen.append((w, cw, pos, split))
                if solve(i + 1):
                    return True
                chosen.pop()
            return False

        if not solve(0):
            continue
        placed = {u: u_pos}
        for w, _, pos, _ in chosen:
            placed[w] = pos
        _transitive(p, _clique_order(block_verts, placed))
        for w, cw, _, split in chosen:
            for shape, dd in zip(cut_pieces[w], split):
                _copy_arcs(p, shape.graph, shape.old_ids,
                           _orient_compensated(shape, cw, dd))
        return True
    return False


def _feasible_split(shapes, k, c, total):
    """Indegree split of `total` over the pieces, respecting feasibility."""
    if not 0 <= total <= (k - 1) * len(shapes):
        return None
    if not shapes:
        return ()
    for d1 in range(min(k - 1, total), -1, -1):
        if not _piece_feasible(shapes[0], c, d1):
            continue
        rest = _feasible_split(shapes[1:], k, c, total - d1)
        if rest is not None:
            return (d1,) + rest
    return None


def _crosspoint_shaped(rooted, block_id):
    """All hanging structures below the block's cuts are paths of cliques."""
    return all(all(_is_path_subtree(rooted, bb)
                   for bb in rooted.cut_children_blocks[w])
               for w in rooted.block_children_cuts[block_id])


def _uniform(g: Graph, k) -> Orientation:
    if g.max_degree() <= 3 * k - 2:
        return extend_partial(g, frozenset(), {})
    bct = block_cut_tree(g)
    root = min(range(len(bct.blocks)), key=lambda i: bct.blocks[i])
    rooted = bct.rooted(root)
    kids_of = _children_map(rooted)
    path_child = {v: [_is_path_subtree(rooted, bi) for bi, _ in kids]
                  for v, kids in kids_of.items()}
    path_connector = {v: all(flags) for v, flags in path_child.items()}

    def depth_key(v):
        return (-rooted.cut_depth[v], v)

    def qualifies(v):
        return all(flag or _crosspoint_shaped(rooted, bi)
                   for (bi, _), flag in zip(kids_of[v], path_child[v]))

    # reduction priority: deepest path connectors with >= 3 hanging paths
    # (so later crossroad reductions meet only small connectors), then
    # deepest crossroad cut vertices, then any other reducible cut; local
    # extension failures fall through to the next candidate, whose removal
    # induces a different remainder orientation
    rule_a = sorted((v for v in kids_of
                     if path_connector[v] and len(kids_of[v]) >= 3),
                    key=depth_key)
    rule_b = sorted((v for v in kids_of
                     if not path_connector[v] and qualifies(v)),
                    key=depth_key)
    seen = set(rule_a) | set(rule_b)
    rest = sorted((v for v in kids_of if v not in seen and qualifies(v)),
                  key=depth_key)
    failure = None
    for u in rule_a + rule_b + rest:
        try:
            return _reduce_at_cut(g, k, rooted, kids_of, path_child, u)
        except ConstructionError as exc:
            failure = exc
    raise ConstructionError(f"no reducible cut vertex admits an extension "
                            f"({failure})")


def _core_orientation(g: Graph, k, removed):
    """Recursively orient g minus the removed vertex set, into a partial."""
    keep = sorted(set(range(g.n)) - removed)
    core, old = g.induced(keep)
    d_core = _uniform(core, k)
    p = PartialOrientation(g)
    _copy_arcs(p, core, old, d_core)
    return p


def _parent_block_values(p: PartialOrientation, rooted, u):
    bi = rooted.cut_parent_block[u]
    return {p.indegree[w] for w in rooted.bct.blocks[bi] if w != u}


def _crosspoint_pieces(g, rooted, kids_of, block_id):
    """Hanging path pieces per child cut vertex of a crossroad block."""
    out = {}
    for w in rooted.block_children_cuts[block_id]:
        out[w] = [_piece_shape(g, verts | {w}, w) for _, verts in kids_of[w]]
    return out


def _reduce_at_cut(g, k, rooted, kids_of, path_child, u):
    """Detach every hanging structure at u, orient the rest, re-attach.

    u's final indegree becomes a + (gains from the re-attached blocks) for
    the first admissible value not colliding with its parent clique; the
    gains are split across the children by a feasibility-guided search.
    """
    kids = kids_of[u]
    flags = path_child[u]
    removed = set().union(*(verts for _, verts in kids))
    p = _core_orientation(g, k, removed)
    a = p.indegree[u]
    assert a <= k - 1  # only the parent clique survives around u
    if a == 0:
        if all(flags):
            # hanging paths only: make u a source of each piece
            for _, verts in kids:
                shape = _piece_shape(g, verts | {u}, u)
                pos = {v: i for i, v in enumerate(shape.old_ids)}
                d_piece = extend_partial(shape.graph, {pos[u]}, {})
                _copy_arcs(p, shape.graph, shape.old_ids, d_piece)
            return p.to_orientation()
        if len(kids) <= 3:
            # the whole hanging star has max degree <= 3k-3
            star_verts = sorted(removed | {u})
            sub, old = g.induced(star_verts)
            pos = {v: i for i, v in enumerate(old)}
            d_star = extend_partial(sub, {pos[u]}, {})
            _copy_arcs(p, sub, old, d_star)
            return p.to_orientation()
    forbidden = _parent_block_values(p, rooted, u)
    cap = min(a + len(kids) * (k - 1), 3 * k - 2)
    for f in range(a, cap + 1):
        if f in forbidden:
            continue
        if _try_cluster_promotion(p, g, k, rooted, kids_of, path_child,
                                  u, f, f - a):
            return p.to_orientation()
    raise ConstructionError(f"no admissible extension at cut vertex {u}")


def _try_cluster_promotion(p, g, k, rooted, kids_of, path_child, u, c, total):
    """Give u indegree gains b_i summing to `total` across all child blocks."""
    kids = kids_of[u]
    flags = path_child[u]
    if not 0 <= total <= (k - 1) * len(kids):
        return False
    shapes = []
    for (bi, verts), is_path in zip(kids, flags):
        shapes.append(_piece_shape(g, verts | {u}, u) if is_path else bi)

    def assignments(i, remaining):
        if i == len(kids):
            if remaining == 0:
                yield []
            return
        tail = (k - 1) * (len(kids) - i - 1)
        for b in range(min(k - 1, remaining), -1, -1):
            if remaining - b > tail:
                continue
            if flags[i] and not _piece_feasible(shapes[i], c, b):
                continue
            for rest in assignments(i + 1, remaining - b):
                yield [b] + rest

    for attempt, assignment in enumerate(assignments(0, total)):
        if attempt >= 500:
            break
        trial = p.copy()
        ok = True
        for (bi, verts), is_path, shape, b in zip(kids, flags, shapes,
                                                  assignment):
            if is_path:
                _copy_arcs(trial, shape.graph, shape.old_ids,
                           _orient_compensated(shape, c, b))
            elif not _extend_crosspoint_at(trial, g, k, rooted, kids_of, u,
                                           bi, u_pos=b, u_final=c):
                ok = False
                break
        if ok:
            p.heads[:] = trial.heads
            p.indegree[:] = trial.indegree
            p.unoriented = trial.unoriented
            return True
    return False


def _extend_crosspoint_at(p, g, k, rooted, kids_of, u, block_id, u_pos,
                          u_final):
    block_verts = rooted.bct.blocks[block_id]
    cut_pieces = _crosspoint_pieces(g, rooted, kids_of, block_id)
    return _assign_crosspoint(p, g, k, u, block_verts, cut_pieces,
                              u_pos, u_final)


def uniform_block_orient(g: Graph, bct: BlockCutTree = None,
                         k: int = None) -> Orientation:
    """Proper (3k-2)-orientation of a connected k-uniform block graph."""
    if bct is None:
        bct = block_cut_tree(g)
    if k is None:
        k = len(bct.blocks[0]) if bct.blocks else 0
    if k < 3:
        raise UnsupportedK("block size must be at least 3 "
                           "(use low_degree_orient or the exact solver for trees)")
    if not g.is_connected():
        raise NotUniformBlock("graph must be connected")
    if not is_k_uniform(bct, k):
        raise NotUniformBlock(f"not every block is a {k}-clique")
    d = _uniform(g, k)
    assert is_proper(d) and max_indegree(d) <= 3 * k - 2
    return d


# -- two cut vertices per block: the k+1 construction ----------------------


def two_cut_block_orient(g: Graph, bct: BlockCutTree = None,
                         k: int = None) -> Orientation:
    """Proper (k+1)-orientation when every block has at most 2 cut vertices.

    Cut vertices end with indegree 0, k, or k+1; the orientation restricted
    to every clique is transitive.
    """
    if bct is None:
        bct = block_cut_tree(g)
    if k is None:
        k = len(bct.blocks[0]) if bct.blocks else 0
    if k < 3:
        raise UnsupportedK("block size must be at least 3")
    if not g.is_connected():
        raise NotUniformBlock("graph must be connected")
    if not is_k_uniform(bct, k):
        raise NotUniformBlock(f"not every block is a {k}-clique")
    cuts = bct.cut_vertices
    if any(sum(1 for v in blk if v in cuts) > 2 for blk in bct.blocks):
        raise NotUniformBlock("a block has more than two cut vertices")
    p = PartialOrientation(g)
    if not cuts:
        _transitive(p, sorted(bct.blocks[0]))
        return p.to_orientation()
    leaf = min(bi for bi, blk in enumerate(bct.blocks)
               if sum(1 for v in blk if v in cuts) == 1)
    rooted = bct.rooted(leaf)
    r = next(v for v in bct.blocks[leaf] if v in cuts)
    pos_in = {}

    def orient_block(bi, placed):
        order = _clique_order(bct.blocks[bi], placed)
        _transitive(p, order)
        for i, v in enumerate(order):
            pos_in[(bi, v)] = i

    orient_block(leaf, {r: 0})
    queue = [leaf]
    while queue:
        bi = queue.pop(0)
        for x in rooted.block_children_cuts[bi]:
            t = pos_in[(bi, x)]
            children = rooted.cut_children_blocks[x]
            for idx, cb in enumerate(children):
                other = [v for v in bct.blocks[cb]
                         if v in cuts and v != x]
                x2 = other[0] if other else None
                if t == 0:
                    placed = {x: 0}
                    if x2 is not None:
                        placed[x2] = 1
                elif idx == 0:
                    placed = {x: k - 1}
                    if x2 is not None:
                        placed[x2] = 0
                else:
                    placed = {x: 0}
                    if x2 is not None:
                        placed[x2] = 2 if t == 1 else 1
                orient_block(cb, placed)
                queue.append(cb)
    d = p.to_orientation()
    assert is_proper(d) and max_indegree(d) <= k + 1
    assert all(d.indegree[v] in (0, k, k + 1) for v in cuts)
    return d


# -- alternating paths and the outerplanar strip bound ---------------------


class AlternatingMode(Enum):
    SINK_ENDS = "sink-ends"
    SOURCE_ENDS = "source-ends"
    LEFT_SOURCE_RIGHT_SINK = "left-source-right-sink"
    LEFT_SINK_RIGHT_SOURCE = "left-sink-right-source"


def orient_alternating(g: Graph, path, mode: AlternatingMode) -> PartialOrientation:
    """Orient the edges of a path with no two consecutive arcs aligned."""
    n = len(path)
    odd_modes = (AlternatingMode.SINK_ENDS, AlternatingMode.SOURCE_ENDS)
    if mode in odd_modes and n % 2 == 0:
        raise HypothesisViolated("sink/source-ends modes need an odd path")
    if mode not in odd_modes and n % 2 == 1:
        raise HypothesisViolated("left/right modes need an even path")
    p = PartialOrientation(g)
    _write_alternating(p, path, mode)
    return p


def _write_alternating(p: PartialOrientation, path, mode: AlternatingMode):
    toward_left = mode in (AlternatingMode.SINK_ENDS,
                           AlternatingMode.LEFT_SINK_RIGHT_SOURCE)
    for j in range(len(path) - 1):
        a, b = path[j], path[j + 1]
        head = (a if toward_left else b) if j % 2 == 0 else (b if toward_left else a)
        p.orient(a, b, head)


def extend_to_path(g: Graph, p: PartialOrientation, v, v0, path, vend) -> Orientation:
    """Complete a partial orientation over the edges of a fan path.

    Hypotheses: the path has length >= 6; each path vertex's neighborhood
    is {previous, v, next}; all spokes already point at the path; the first
    path vertex has indegree 1 or 2 so far, the last exactly 2, and the hub
    v at least 4.  The remaining path edges are chosen by a parity and
    endpoint case analysis over the neighbors' indegrees.
    """
    ell = len(path)
    if ell < 6:
        raise HypothesisViolated(f"path length {ell} < 6")
    for i, w in enumerate(path):
        prev = v0 if i == 0 else path[i - 1]
        nxt = vend if i == ell - 1 else path[i + 1]
        if sorted(g.adj[w]) != sorted({prev, v, nxt}):
            raise HypothesisViolated(f"vertex {w} has extra neighbors")
        if p.head_of(v, w) != w:
            raise HypothesisViolated(f"spoke to {w} must point at the path")
    for i in range(ell - 1):
        if p.is_oriented(path[i], path[i + 1]):
            raise HypothesisViolated("path edges must be unoriented")
    if p.unoriented != ell - 1:
        raise HypothesisViolated("only the path edges may remain unoriented")
    d1 = p.indegree[path[0]]
    if d1 not in (1, 2):
        raise HypothesisViolated(f"first path vertex has indegree {d1}")
    if p.indegree[path[-1]] != 2:
        raise HypothesisViolated("last path vertex must have indegree 2")
    if p.indegree[v] < 4:
        raise HypothesisViolated("hub must have indegree at least 4")

    d0 = p.indegree[v0]
    dl = p.indegree[vend]
    even = ell % 2 == 0
    M = AlternatingMode

    def alt(mode, sub):
        _write_alternating(p, sub, mode)

    if d1 == 2:
        if even:
            if d0 != 2 and dl != 3:
                alt(M.LEFT_SOURCE_RIGHT_SINK, path)
            elif d0 != 3 and dl != 2:
                alt(M.LEFT_SINK_RIGHT_SOURCE, path)
            elif d0 == 2 and dl == 2:
                p.orient(path[0], path[1], path[0])
                alt(M.SINK_ENDS, path[1:])
            else:
                assert d0 == 3 and dl == 3
                p.orient(path[0], path[1], path[1])
                p.orient(path[1], path[2], path[1])
                p.orient(path[-3], path[-2], path[-2])
                p.orient(path[-2], path[-1], path[-2])
                alt(M.LEFT_SOURCE_RIGHT_SINK, path[2:-2])
        else:
            if d0 != 3 and dl != 3:
                alt(M.SINK_ENDS, path)
            elif d0 != 2 and dl != 2:
                alt(M.SOURCE_ENDS, path)
            elif d0 == 2:
                assert dl == 3
                p.orient(path[0], path[1], path[0])
                alt(M.LEFT_SINK_RIGHT_SOURCE, path[1:])
            else:
                assert d0 == 3 and dl == 2
                p.orient(path[-2], path[-1], path[-1])
                alt(M.LEFT_SOURCE_RIGHT_SINK, path[:-1])
    else:
        if even:
            if d0 != 1 and dl != 3:
                alt(M.LEFT_SOURCE_RIGHT_SINK, path)
            elif d0 != 2 and dl != 2:
                alt(M.LEFT_SINK_RIGHT_SOURCE, path)
            elif d0 == 1 and dl == 2:
                p.orient(path[-2], path[-1], path[-1])
                alt(M.SINK_ENDS, path[:-1])
            else:
                assert d0 == 2 and dl == 3
                p.orient(path[-3], path[-2], path[-2])
                p.orient(path[-2], path[-1], path[-2])
                alt(M.LEFT_SOURCE_RIGHT_SINK, path[:-2])
        else:
            if d0 != 2 and dl != 3:
                alt(M.SINK_ENDS, path)
            elif d0 != 1 and dl != 2:
                alt(M.SOURCE_ENDS, path)
            elif d0 == 2 and dl == 2:
                p.orient(path[-2], path[-1], path[-1])
                alt(M.LEFT_SOURCE_RIGHT_SINK, path[:-1])
            else:
                assert d0 == 1 and dl == 3
                p.orient(path[-3], path[-2], path[-2])
                p.orient(path[-2], path[-1], path[-2])
                alt(M.SINK_ENDS, path[:-2])
    d = p.to_orientation()
    assert is_proper(d)
    return d


def _fan_order(g: Graph, v):
    """Neighbors of v ordered along the induced path they form."""
    nb = g.adj[v]
    nbset = set(nb)
    deg_in = {w: sum(1 for x in g.adj[w] if x in nbset) for w in nb}
    ends = sorted(w for w in nb if deg_in[w] == 1)
    assert len(ends) == 2, "neighborhood of a strip vertex must be a path"
    order = [ends[0]]
    seen = {ends[0]}
    while len(order) < len(nb):
        cur = order[-1]
        nxt = [x for x in g.adj[cur] if x in nbset and x not in seen]
        assert len(nxt) >= 1
        order.append(nxt[0])
        seen.add(nxt[0])
    return order


def _strip_orient(g: Graph) -> Orientation:
    delta = g.max_degree()
    if delta <= 13:
        if g.m:
            try:
                d = decide_k_orientation(g, delta,
                                         SearchConfig(node_budget=20000))
                if d is not None:
                    return d
            except BudgetExceeded:
                pass
        return extend_partial(g, frozenset(), {})
    v = min(w for w in range(g.n) if g.degree(w) == delta)
    fan = _fan_order(g, v)
    interior = fan[2:-2]
    keep = set(range(g.n)) - {v} - set(interior)
    sub, old = g.induced(sorted(keep))
    comps = sub.connected_components()
    assert len(comps) == 2
    p = PartialOrientation(g)
    for comp in comps:
        part, part_old = sub.induced(comp)
        mapped = [old[part_old[i]] for i in range(part.n)]
        d_part = _strip_orient(part)
        for e, (lu, lv) in enumerate(part.edges):
            p.orient(mapped[lu], mapped[lv], mapped[d_part.head(e)])
    for w in (fan[0], fan[1], fan[-2], fan[-1]):
        p.orient(w, v, v)
    p.orient(fan[1], fan[2], fan[2])
    p.orient(fan[-2], fan[-3], fan[-3])
    s_vals = {p.indegree[fan[0]], p.indegree[fan[1]],
              p.indegree[fan[-2]], p.indegree[fan[-1]]}
    t = next(t for t in range(5) if 4 + t not in s_vals)
    for j, w in enumerate(interior):
        p.orient(w, v, v if j < t else w)
    for j in range(t):
        w = fan[2 + j]
        prev_final = p.indegree[fan[1 + j]]
        nxt = fan[3 + j]
        if p.indegree[w] == prev_final:
            p.orient(w, nxt, w)
        else:
            p.orient(w, nxt, nxt)
    return extend_to_path(g, p, v, fan[1 + t], fan[2 + t:-2], fan[-2])


def outerplanar_strip_orient(g: Graph, strip=None) -> Orientation:
    """Proper 13-orientation of a maximal outerplane graph with path dual."""
    computed = outerplanar_strip(g)
    if computed is None:
        raise NotStrip("graph is not a triangle strip")
    if strip is not None and set(strip.triangles) != set(computed.triangles):
        raise NotStrip("supplied strip does not match the graph")
    d = _strip_orient(g)
    assert is_proper(d) and max_indegree(d) <= 13
    return d


# -- cographs ---------------------------------------------------------------


def _cotree_stats(node):
    """(vertex count, edge count) of the graph a cotree denotes."""
    if isinstance(node, CotreeLeaf):
        return 1, 0
    stats = [_cotree_stats(ch) for ch in node.children]
    n = sum(s[0] for s in stats)
    m = sum(s[1] for s in stats)
    if isinstance(node, CotreeJoin):
        for i in range(len(stats)):
            for j in range(i + 1, len(stats)):
                m += stats[i][0] * stats[j][0]
    return n, m


def cograph_bounds(cotree):
    """(lower, upper) sandwich on the orientation number of a cograph.

    The lower bound is exact at unions and uses the edge-density argument
    at joins; the upper bound folds the one-sided cross orientation over
    the join children.  Lower is an exact rational, upper an integer.
    """
    if isinstance(cotree, CotreeLeaf):
        return Fraction(0), 0
    if isinstance(cotree, CotreeUnion):
        if not cotree.children:
            return Fraction(0), 0
        subs = [cograph_bounds(ch) for ch in cotree.children]
        return max(s[0] for s in subs), max(s[1] for s in subs)
    assert isinstance(cotree, CotreeJoin)
    stats = [_cotree_stats(ch) for ch in cotree.children]
    subs = [cograph_bounds(ch) for ch in cotree.children]
    total_n = sum(s[0] for s in stats)
    total_m = _cotree_stats(cotree)[1]
    lower = Fraction(0)
    for i, (ni, mi) in enumerate(stats):
        rest_n = total_n - ni
        rest_m = total_m - mi - ni * rest_n
        ad_i = Fraction(mi, ni)
        ad_rest = Fraction(rest_m, rest_n)
        lower = max(lower, min(ad_i + Fraction(rest_n, 2),
                               ad_rest + Fraction(ni, 2)))
    upper, seen_n = subs[0][1], stats[0][0]
    for (ni, _), (_, upper_ch) in zip(stats[1:], subs[1:]):
        upper = min(upper + ni, upper_ch + seen_n)
        seen_n += ni
    return lower, upper


def cograph_join_orient(g1: Graph, g2: Graph, d1: Orientation,
                        d2: Orientation) -> Orientation:
    """Proper orientation of the join, sending all cross edges one way."""
    if d1.graph != g1 or d2.graph != g2:
        raise PreconditionViolated("orientations must match the given graphs")
    jg = join(g1, g2)
    into_second = (max(max_indegree(d1), max_indegree(d2) + g1.n)
                   <= max(max_indegree(d2), max_indegree(d1) + g2.n))
    heads = []
    for u, v in jg.edges:
        if v < g1.n:
            heads.append(d1.head(g1.edge_id(u, v)))
        elif u >= g1.n:
            heads.append(d2.head(g2.edge_id(u - g1.n, v - g1.n)) + g1.n)
        else:
            heads.append(v if into_second else u)
    d = Orientation.from_heads(jg, heads)
    assert is_proper(d)
    return d


# -- claw-free chordal graphs -----------------------------------------------


def claw_free_chordal_bound(g: Graph) -> int:
    """Max degree, certified <= 3*omega via a 3-clique neighborhood cover."""
    check = chordal_peo(g)
    if check.peo is None:
        raise NotApplicable("graph is not chordal")
    if not is_claw_free(g):
        raise NotApplicable("graph has an induced claw")
    omega = clique_number_chordal(g, check.peo) if g.n else 0
    adjset = [set(a) for a in g.adj]
    for v in range(g.n):
        nb = g.adj[v]
        if g.is_clique(nb) or len(nb) <= 3:
            continue
        pair = next((u, w) for i, u in enumerate(nb) for w in nb[i + 1:]
                    if w not in adjset[u])
        u, w = pair
        part_u = {x for x in nb if x in adjset[u] and x not in adjset[w]}
        part_w = {x for x in nb if x in adjset[w] and x not in adjset[u]}
        rest = set(nb) - {u, w} - part_u - part_w
        cover = [part_u | {u}, part_w | {w}, rest]
        assert all(g.is_clique(sorted(c)) for c in cover if c)
        assert len(nb) <= 3 * omega
    assert g.max_degree() <= 3 * omega or g.n == 0
    return g.max_degree()
