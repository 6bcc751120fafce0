"""Exact decision, optimization, and enumeration of proper k-orientations.

The search branches on edges in a static order (edges with the most
constrained, i.e. highest-degree, endpoints first).  After each assignment
an endpoint is pruned when its indegree interval [current, current+pending]
admits no value distinct from all fully-decided neighbors, or its current
indegree already exceeds k.  Optional symmetry breaking forces, within each
class of mutually non-adjacent vertices with identical neighborhoods, a
non-increasing indegree order by vertex id.

Everything is deterministic: no randomization, fixed tie-breaks, and the
optimizer climbs k upward from the clique lower bound, so No answers at
cheap small k are settled first.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import BudgetExceeded, NotChordal
from .graph import Graph
from .orientation import Orientation, is_proper, max_indegree


@dataclass
class SearchConfig:
    node_budget: int | None = None
    edge_order: str = "most-constrained"
    symmetry_breaking: bool = True


def _edge_order(g: Graph, heuristic):
    ids = list(range(g.m))
    if heuristic == "input":
        return ids
    if heuristic != "most-constrained":
        raise ValueError(f"unknown edge order heuristic: {heuristic}")
    deg = g.degrees()

    def key(e):
        u, v = g.edges[e]
        a, b = deg[u], deg[v]
        hi, lo = (a, b) if a >= b else (b, a)
        return (-hi, -lo, u, v)

    ids.sort(key=key)
    return ids


def _stable_twin_pairs(g: Graph):
    """Consecutive pairs inside each class of false twins (N(u) == N(v))."""
    classes = {}
    for v in range(g.n):
        classes.setdefault(tuple(g.adj[v]), []).append(v)
    pairs = []
    for members in classes.values():
        for a, b in zip(members, members[1:]):
            pairs.append((a, b))
    return pairs


def _search(g: Graph, k, budget, symmetry_breaking, edge_order="most-constrained"):
    """Yield every proper k-orientation of g as a heads list (edge-id indexed).

    budget is a one-element list holding the remaining node allowance, or
    None for unlimited; it is decremented across yields and raises
    BudgetExceeded at zero.  With symmetry_breaking the yielded set is a
    complete system of representatives for the decision problem only.
    """
    n, m = g.n, g.m
    if k < 0:
        return
    if m == 0:
        yield []
        return
    order = _edge_order(g, edge_order)
    eu = [g.edges[e][0] for e in order]
    ev = [g.edges[e][1] for e in order]
    adj = g.adj
    indeg = [0] * n
    rem = g.degrees()
    heads = [-1] * m  # indexed by canonical edge id
    # global pigeonhole: final indegrees sum to m, each capped at
    # min(indeg + pending, k); maintained incrementally
    capacity = sum(min(d, k) for d in rem)
    if capacity < m:
        return

    pairs = _stable_twin_pairs(g) if symmetry_breaking else []
    pairs_at = [[] for _ in range(n)]
    for i, (a, b) in enumerate(pairs):
        pairs_at[a].append(i)
        pairs_at[b].append(i)

    mark = [0] * (k + 2)
    stamp = 0

    def vertex_ok(x):
        nonlocal stamp
        lo = indeg[x]
        if lo > k:
            return False
        hi = lo + rem[x]
        if hi > k:
            hi = k
        span = hi - lo + 1
        stamp += 1
        hit = 0
        for y in adj[x]:
            if rem[y] == 0:
                d = indeg[y]
                if lo <= d <= hi and mark[d] != stamp:
                    mark[d] = stamp
                    hit += 1
                    if hit == span:
                        return False
        return True

    def pair_ok(i):
        a, b = pairs[i]
        return indeg[a] + rem[a] >= indeg[b]

    def state_ok(u, v):
        if not (vertex_ok(u) and vertex_ok(v)):
            return False
        for x in (u, v):
            for i in pairs_at[x]:
                if not pair_ok(i):
                    return False
            if rem[x] == 0:
                for y in adj[x]:
                    if rem[y] and not vertex_ok(y):
                        return False
        return True

    def cap(x):
        s = indeg[x] + rem[x]
        return s if s < k else k

    # tried[pos]: how many head choices were attempted at this depth
    tried = [0] * m
    pos = 0
    while True:
        if pos == m:
            yield list(heads)
            pos -= 1
            # fall through to undo/advance at the last depth
            u, v = eu[pos], ev[pos]
            h = heads[order[pos]]
            capacity -= cap(u) + cap(v)
            indeg[h] -= 1
            rem[u] += 1
            rem[v] += 1
            capacity += cap(u) + cap(v)
            heads[order[pos]] = -1
            continue
        advanced = False
        while tried[pos] < 2:
            head = ev[pos] if tried[pos] == 0 else eu[pos]
            tried[pos] += 1
            if budget is not None:
                budget[0] -= 1
                if budget[0] < 0:
                    raise BudgetExceeded(_spent(budget))
            u, v = eu[pos], ev[pos]
            heads[order[pos]] = head
            capacity -= cap(u) + cap(v)
            indeg[head] += 1
            rem[u] -= 1
            rem[v] -= 1
            capacity += cap(u) + cap(v)
            if capacity >= m and state_ok(u, v):
                pos += 1
                advanced = True
                break
            capacity -= cap(u) + cap(v)
            indeg[head] -= 1
            rem[u] += 1
            rem[v] += 1
            capacity += cap(u) + cap(v)
            heads[order[pos]] = -1
        if advanced:
            if pos < m:
                tried[pos] = 0
            continue
        # both choices exhausted here: backtrack
        pos -= 1
        if pos < 0:
            return
        u, v = eu[pos], ev[pos]
        h = heads[order[pos]]
        capacity -= cap(u) + cap(v)
        indeg[h] -= 1
        rem[u] += 1
        rem[v] += 1
        capacity += cap(u) + cap(v)
        heads[order[pos]] = -1


def _spent(budget):
    # budget[0] went negative exactly once; report the configured allowance
    return budget[1]


def _budget_box(cfg):
    if cfg.node_budget is None:
        return None
    return [cfg.node_budget, cfg.node_budget]


def decide_k_orientation(g: Graph, k: int, cfg: SearchConfig | None = None,
                         _budget=None):
    """A verified proper k-orientation of g, or None if none exists.

    Answers No outright below the clique floor (any clique of size w needs
    indegrees 0..w-1); otherwise searches.  Raises BudgetExceeded when
    cfg.node_budget runs out before an answer.
    """
    if k < 0:
        raise ValueError("k must be non-negative")
    cfg = cfg or SearchConfig()
    if k < clique_number(g) - 1:
        return None
    budget = _budget if _budget is not None else _budget_box(cfg)
    for heads in _search(g, k, budget, cfg.symmetry_breaking, cfg.edge_order):
        d = Orientation.from_heads(g, heads)
        assert is_proper(d) and max_indegree(d) <= k
        return d
    return None


def proper_orientation_number(g: Graph, cfg: SearchConfig | None = None):
    """Exact minimum k admitting a proper k-orientation, with a witness.

    Climbs k from omega-1 (omega computed exactly) up to the max degree;
    the first Yes is optimal.  The node budget, when set, is shared across
    the whole climb.
    """
    cfg = cfg or SearchConfig()
    budget = _budget_box(cfg)
    lo = max(clique_number(g) - 1, 0)
    hi = g.max_degree()
    for k in range(lo, hi + 1):
        witness = decide_k_orientation(g, k, cfg, _budget=budget)
        if witness is not None:
            return k, witness
    raise AssertionError("a proper max-degree orientation always exists")


def enumerate_proper_k_orientations(g: Graph, k: int, node_budget=None):
    """Every proper k-orientation exactly once, in deterministic order.

    Symmetry breaking is disabled so the stream is exhaustive; guard large
    inputs with node_budget (BudgetExceeded aborts the stream).
    """
    budget = [node_budget, node_budget] if node_budget is not None else None
    for heads in _search(g, k, budget, symmetry_breaking=False):
        yield Orientation.from_heads(g, heads)


def disjoint_union_rule(values):
    """Orientation number of a disjoint union: the max over components."""
    vals = list(values)
    if not vals:
        raise ValueError("need at least one component value")
    return max(vals)


def fpt_chordal(g: Graph, k: int, cfg: SearchConfig | None = None):
    """Decision for chordal g: immediate No when omega >= k+2, else search.

    Returns a witness Orientation or None, like decide_k_orientation.
    Raises NotChordal for non-chordal input.
    """
    from .recognize import chordal_peo, clique_number_chordal

    check = chordal_peo(g)
    if check.peo is None:
        raise NotChordal(f"input has chordless cycle {check.chordless_cycle}")
    omega = clique_number_chordal(g, check.peo)
    if omega >= k + 2:
        return None
    return decide_k_orientation(g, k, cfg)


# -- exact clique number (plumbing for the optimizer's lower bound) -----


def clique_number(g: Graph) -> int:
    """Exact max clique size via branch and bound with a coloring bound."""
    n = g.n
    if n == 0:
        return 0
    if g.m == 0:
        return 1
    bits = [0] * n
    for u, v in g.edges:
        bits[u] |= 1 << v
        bits[v] |= 1 << u
    order = sorted(range(n), key=lambda v: (len(g.adj[v]), v))
    best = 1

    def color_bound(cand):
        # greedy coloring of the candidate set; class count bounds the clique
        classes = []
        rest = cand
        while rest:
            v = rest & -rest
            rest ^= v
            placed = False
            for i, cls in enumerate(classes):
                vid = v.bit_length() - 1
                if not (cls & bits[vid]):
                    classes[i] |= v
                    placed = True
                    break
            if not placed:
                classes.append(v)
        return len(classes)

    def expand(size, cand):
        nonlocal best
        if not cand:
            best = max(best, size)
            return
        if size + bin(cand).count("1") <= best:
            return
        if size + color_bound(cand) <= best:
            return
        for v in order:
            bit = 1 << v
            if not (cand & bit):
                continue
            cand &= ~bit
            expand(size + 1, (cand | bit) & bits[v] & ~bit)
            if size + bin(cand).count("1") <= best:
                return

    expand(0, (1 << n) - 1)
    return best
