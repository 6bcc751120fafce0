"""Recognition and decomposition of the graph classes the constructors need.

Each recognizer either produces the decomposition its constructor consumes
(perfect elimination ordering, split partition, cotree, block-cut tree,
triangle strip) or a failure value, with a witness where one is cheap to
extract.  All functions are pure and deterministic.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import NamedTuple, Optional

from .errors import InvalidPEO
from .graph import Graph


# -- chordality via Lex-BFS ---------------------------------------------


def lex_bfs(g: Graph):
    """Lexicographic BFS visit order (ties broken by smallest vertex id)."""
    n = g.n
    if n == 0:
        return []
    cls_of = [0] * n
    classes = {0: set(range(n))}
    seq = [0]
    next_id = 1
    visited = [False] * n
    order = []
    while seq:
        cid = seq[0]
        bucket = classes[cid]
        v = min(bucket)
        bucket.discard(v)
        if not bucket:
            del classes[cid]
            seq.pop(0)
        visited[v] = True
        order.append(v)
        moved = {}
        for w in g.adj[v]:
            if not visited[w]:
                moved.setdefault(cls_of[w], []).append(w)
        for bcid, members in moved.items():
            src = classes.get(bcid)
            if src is None or len(members) == len(src):
                continue  # whole class is adjacent: its position is unchanged
            nid = next_id
            next_id += 1
            classes[nid] = set(members)
            for w in members:
                src.discard(w)
                cls_of[w] = nid
            seq.insert(seq.index(bcid), nid)
    return order


def _verify_peo(g: Graph, peo):
    """None if peo is perfect elimination; else a violating (v, p, w)."""
    pos = [0] * g.n
    for i, v in enumerate(peo):
        pos[v] = i
    adjset = [set(a) for a in g.adj]
    for v in peo:
        later = [w for w in g.adj[v] if pos[w] > pos[v]]
        if not later:
            continue
        p = min(later, key=lambda w: pos[w])
        for w in later:
            if w != p and w not in adjset[p]:
                return v, p, w
    return None


def find_chordless_cycle(g: Graph):
    """Some chordless cycle of length >= 4, or None if chordal."""
    adjset = [set(a) for a in g.adj]
    for v in range(g.n):
        nb = g.adj[v]
        for i in range(len(nb)):
            for j in range(i + 1, len(nb)):
                x, y = nb[i], nb[j]
                if y in adjset[x]:
                    continue
                # shortest x-y path avoiding N[v] (except the ends themselves)
                allowed = [True] * g.n
                for w in nb:
                    allowed[w] = False
                allowed[v] = False
                allowed[x] = allowed[y] = True
                parent = {x: -1}
                queue = deque([x])
                found = False
                while queue and not found:
                    a = queue.popleft()
                    for b in g.adj[a]:
                        if not allowed[b] or b in parent:
                            continue
                        parent[b] = a
                        if b == y:
                            found = True
                            break
                        queue.append(b)
                if found:
                    path = [y]
                    while path[-1] != x:
                        path.append(parent[path[-1]])
                    path.append(v)  # cycle: v, x, ..., y
                    return list(reversed(path))
    return None


class ChordalCheck(NamedTuple):
    peo: Optional[list]
    chordless_cycle: Optional[list]


def chordal_peo(g: Graph) -> ChordalCheck:
    """A perfect elimination ordering, or a chordless cycle witness."""
    order = lex_bfs(g)
    peo = list(reversed(order))
    if _verify_peo(g, peo) is None:
        return ChordalCheck(peo, None)
    cycle = find_chordless_cycle(g)
    assert cycle is not None, "PEO verification failed but no chordless cycle found"
    return ChordalCheck(None, cycle)


def clique_number_chordal(g: Graph, peo) -> int:
    """Exact clique number from a perfect elimination ordering."""
    if sorted(peo) != list(range(g.n)):
        raise InvalidPEO("ordering is not a permutation of the vertices")
    if _verify_peo(g, peo) is not None:
        raise InvalidPEO("ordering is not a perfect elimination ordering")
    if g.n == 0:
        return 0
    pos = [0] * g.n
    for i, v in enumerate(peo):
        pos[v] = i
    best = 1
    for v in range(g.n):
        later = sum(1 for w in g.adj[v] if pos[w] > pos[v])
        best = max(best, later + 1)
    return best


# -- split graphs --------------------------------------------------------


@dataclass(frozen=True)
class SplitPartition:
    clique: frozenset
    independent: frozenset


def split_partition(g: Graph) -> Optional[SplitPartition]:
    """Degree-sequence split test; K is a maximum (hence maximal) clique."""
    n = g.n
    if n == 0:
        return SplitPartition(frozenset(), frozenset())
    order = sorted(range(n), key=lambda v: (-g.degree(v), v))
    degs = [g.degree(v) for v in order]
    m_star = max(i + 1 for i in range(n) if degs[i] >= i)
    lhs = sum(degs[:m_star])
    rhs = m_star * (m_star - 1) + sum(degs[m_star:])
    if lhs != rhs:
        return None
    clique = order[:m_star]
    rest = order[m_star:]
    assert g.is_clique(clique)
    assert all(not g.has_edge(u, v) for i, u in enumerate(rest)
               for v in rest[i + 1:])
    kset = frozenset(clique)
    # maximality: an independent vertex adjacent to all of K would extend
    # the maximum clique, which the degree equality rules out
    for v in rest:
        assert not kset or not kset <= set(g.adj[v]), \
            f"vertex {v} adjacent to all of K"
    return SplitPartition(kset, frozenset(rest))


# -- cotrees (quasi-threshold and cograph decompositions) ----------------


@dataclass(frozen=True)
class CotreeLeaf:
    vertex: int


@dataclass(frozen=True)
class CotreeUnion:
    children: tuple


@dataclass(frozen=True)
class CotreeJoin:
    children: tuple


def cotree_vertices(node) -> frozenset:
    if isinstance(node, CotreeLeaf):
        return frozenset((node.vertex,))
    out = frozenset()
    for ch in node.children:
        out |= cotree_vertices(ch)
    return out


def evaluate_cotree(node, n=None) -> Graph:
    """Rebuild the graph a cotree denotes; leaves name the vertex ids."""
    verts = cotree_vertices(node)
    if n is None:
        n = max(verts) + 1 if verts else 0
    edges = []

    def walk(nd):
        if isinstance(nd, CotreeLeaf):
            return [nd.vertex]
        sets = [walk(ch) for ch in nd.children]
        if isinstance(nd, CotreeJoin):
            for i in range(len(sets)):
                for j in range(i + 1, len(sets)):
                    edges.extend((a, b) for a in sets[i] for b in sets[j])
        return [v for s in sets for v in s]

    walk(node)
    return Graph(n, edges)


def quasi_threshold_cotree(g: Graph):
    """Cotree with union nodes and single-vertex joins, or None."""

    def build(verts):
        if len(verts) == 1:
            return CotreeLeaf(verts[0])
        sub, old = g.induced(verts)
        comps = sub.connected_components()
        if len(comps) > 1:
            children = []
            for comp in comps:
                ch = build([old[v] for v in comp])
                if ch is None:
                    return None
                children.append(ch)
            return CotreeUnion(tuple(children))
        universal = [old[v] for v in range(sub.n) if sub.degree(v) == sub.n - 1]
        if not universal:
            return None
        v = min(universal)
        rest = build([w for w in verts if w != v])
        if rest is None:
            return None
        return CotreeJoin((CotreeLeaf(v), rest))

    if g.n == 0:
        return CotreeUnion(())
    return build(list(range(g.n)))


class CographCheck(NamedTuple):
    cotree: Optional[object]
    p4: Optional[tuple]


def find_induced_p4(g: Graph):
    """Vertices (a, b, c, d) of an induced path, or None."""
    adjset = [set(x) for x in g.adj]
    for b, c in g.edges:
        for b_, c_ in ((b, c), (c, b)):
            for a in g.adj[b_]:
                if a == c_ or a in adjset[c_]:
                    continue
                for d in g.adj[c_]:
                    if d == b_ or d == a or d in adjset[b_] or d in adjset[a]:
                        continue
                    return (a, b_, c_, d)
    return None


def cograph_cotree(g: Graph) -> CographCheck:
    """Union/join cotree for a cograph, or an induced-P4 witness."""

    def build(verts):
        if len(verts) == 1:
            return CotreeLeaf(verts[0])
        sub, old = g.induced(verts)
        comps = sub.connected_components()
        if len(comps) > 1:
            children = []
            for comp in comps:
                ch = build([old[v] for v in comp])
                if ch is None:
                    return None
                children.append(ch)
            return CotreeUnion(tuple(children))
        co = sub.complement()
        cocomps = co.connected_components()
        if len(cocomps) > 1:
            children = []
            for comp in cocomps:
                ch = build([old[v] for v in comp])
                if ch is None:
                    return None
                children.append(ch)
            return CotreeJoin(tuple(children))
        return None

    if g.n == 0:
        return CographCheck(CotreeUnion(()), None)
    tree = build(list(range(g.n)))
    if tree is not None:
        return CographCheck(tree, None)
    p4 = find_induced_p4(g)
    assert p4 is not None
    return CographCheck(None, p4)


def is_claw_free(g: Graph) -> bool:
    """No vertex has three pairwise non-adjacent neighbors."""
    adjset = [set(x) for x in g.adj]
    for v in range(g.n):
        nb = g.adj[v]
        for i in range(len(nb)):
            for j in range(i + 1, len(nb)):
                if nb[j] in adjset[nb[i]]:
                    continue
                for l in range(j + 1, len(nb)):
                    w = nb[l]
                    if w not in adjset[nb[i]] and w not in adjset[nb[j]]:
                        return False
    return True


def twin_partition(g: Graph, s):
    """Partition an independent set into classes of equal neighborhoods."""
    s = sorted(s)
    sset = set(s)
    for v in s:
        assert not any(w in sset for w in g.adj[v]), "set is not independent"
    classes = {}
    for v in s:
        classes.setdefault(tuple(g.adj[v]), []).append(v)
    return [tuple(members) for _, members in sorted(classes.items())]


# -- block-cut trees -----------------------------------------------------


@dataclass
class BlockCutTree:
    graph: Graph
    blocks: list           # sorted vertex tuples
    cut_vertices: frozenset
    blocks_of: dict = field(default_factory=dict)  # vertex -> [block ids]

    def __post_init__(self):
        if not self.blocks_of:
            for bi, blk in enumerate(self.blocks):
                for v in blk:
                    self.blocks_of.setdefault(v, []).append(bi)

    def is_path(self) -> bool:
        """True when the block-cutpoint tree is a path."""
        deg = {}
        for v in self.cut_vertices:
            deg[("c", v)] = len(self.blocks_of[v])
        for bi, blk in enumerate(self.blocks):
            deg[("b", bi)] = sum(1 for v in blk if v in self.cut_vertices)
        return all(d <= 2 for d in deg.values())

    def rooted(self, root_block: int) -> "RootedBlockCutTree":
        return RootedBlockCutTree(self, root_block)


class RootedBlockCutTree:
    """Parent/children view of the block-cut tree, with ordered children."""

    def __init__(self, bct: BlockCutTree, root_block: int):
        self.bct = bct
        self.root_block = root_block
        self.block_parent_cut = {}   # block id -> cut vertex (absent for root)
        self.cut_parent_block = {}   # cut vertex -> block id
        self.block_children_cuts = {bi: [] for bi in range(len(bct.blocks))}
        self.cut_children_blocks = {v: [] for v in bct.cut_vertices}
        self.block_depth = {root_block: 0}
        self.cut_depth = {}
        queue = deque([("b", root_block)])
        seen_b = {root_block}
        seen_c = set()
        while queue:
            kind, x = queue.popleft()
            if kind == "b":
                cuts = sorted(v for v in bct.blocks[x] if v in bct.cut_vertices
                              and v != self.block_parent_cut.get(x))
                for v in cuts:
                    if v in seen_c:
                        continue
                    seen_c.add(v)
                    self.block_children_cuts[x].append(v)
                    self.cut_parent_block[v] = x
                    self.cut_depth[v] = self.block_depth[x] + 1
                    queue.append(("c", v))
            else:
                kids = sorted((bi for bi in bct.blocks_of[x] if bi not in seen_b),
                              key=lambda bi: bct.blocks[bi])
                for bi in kids:
                    seen_b.add(bi)
                    self.cut_children_blocks[x].append(bi)
                    self.block_parent_cut[bi] = x
                    self.block_depth[bi] = self.cut_depth[x] + 1
                    queue.append(("b", bi))

    def subtree_vertices(self, block_index: int) -> set:
        """All graph vertices in blocks of the subtree rooted at this block."""
        bct = self.bct
        out = set()
        stack = [block_index]
        while stack:
            bi = stack.pop()
            out.update(bct.blocks[bi])
            for v in self.block_children_cuts[bi]:
                stack.extend(self.cut_children_blocks[v])
        return out


def block_cut_tree(g: Graph) -> BlockCutTree:
    """Biconnected decomposition; isolated vertices form singleton blocks."""
    n = g.n
    disc = [-1] * n
    low = [0] * n
    parent = [-1] * n
    blocks = []
    is_cut = [False] * n
    timer = 0
    for root in range(n):
        if disc[root] >= 0:
            continue
        if g.degree(root) == 0:
            blocks.append((root,))
            continue
        disc[root] = low[root] = timer
        timer += 1
        estack = []
        work = [(root, iter(g.adj[root]))]
        root_children = 0
        while work:
            v, it = work[-1]
            pushed = False
            for w in it:
                if disc[w] < 0:
                    estack.append((v, w))
                    parent[w] = v
                    disc[w] = low[w] = timer
                    timer += 1
                    work.append((w, iter(g.adj[w])))
                    pushed = True
                    break
                if w != parent[v] and disc[w] < disc[v]:
                    estack.append((v, w))
                    low[v] = min(low[v], disc[w])
            if pushed:
                continue
            work.pop()
            if not work:
                continue
            u = work[-1][0]
            low[u] = min(low[u], low[v])
            if low[v] >= disc[u]:
                if u == root:
                    root_children += 1
                    if root_children > 1:
                        is_cut[u] = True
                else:
                    is_cut[u] = True
                verts = set()
                while True:
                    a, b = estack.pop()
                    verts.add(a)
                    verts.add(b)
                    if (a, b) == (u, v):
                        break
                blocks.append(tuple(sorted(verts)))
        assert not estack
    blocks.sort()
    cuts = frozenset(v for v in range(n) if is_cut[v])
    return BlockCutTree(g, blocks, cuts)


def is_k_uniform(bct: BlockCutTree, k: int) -> bool:
    """Every block is a clique of size exactly k."""
    g = bct.graph
    return all(len(blk) == k and g.is_clique(blk) for blk in bct.blocks)


def max_cut_vertices_per_block(bct: BlockCutTree) -> int:
    return max((sum(1 for v in blk if v in bct.cut_vertices)
                for blk in bct.blocks), default=0)


# -- maximal outerplane triangle strips -----------------------------------


@dataclass(frozen=True)
class StripDecomposition:
    triangles: tuple   # ordered along the dual path
    outer_cycle: tuple


def outerplanar_strip(g: Graph) -> Optional[StripDecomposition]:
    """Triangle strip of a maximal outerplane graph whose weak dual is a path.

    Returns the inner faces ordered along the dual path plus the outer
    (Hamiltonian) cycle order, or None when the graph is not of this shape.
    """
    n = g.n
    if n < 3 or g.m != 2 * n - 3 or not g.is_connected():
        return None
    adjset = [set(a) for a in g.adj]
    # every subgraph triangle of a maximal outerplane graph is an inner face
    tri_of_edge = {}
    triangles = set()
    for u, v in g.edges:
        common = adjset[u] & adjset[v]
        if not 1 <= len(common) <= 2:
            return None
        tri_of_edge[(u, v)] = [tuple(sorted((u, v, w))) for w in sorted(common)]
        triangles.update(tri_of_edge[(u, v)])
    if len(triangles) != n - 2:
        return None
    # edges on exactly one triangle must form a Hamiltonian cycle
    outer = [e for e, ts in tri_of_edge.items() if len(ts) == 1]
    if len(outer) != n:
        return None
    ring = {v: [] for v in range(n)}
    for u, v in outer:
        ring[u].append(v)
        ring[v].append(u)
    if any(len(nb) != 2 for nb in ring.values()):
        return None
    cycle = [0, min(ring[0])]
    while len(cycle) < n:
        prev, cur = cycle[-2], cycle[-1]
        nxt = ring[cur][0] if ring[cur][0] != prev else ring[cur][1]
        cycle.append(nxt)
    if len(set(cycle)) != n or cycle[0] not in ring[cycle[-1]]:
        return None
    # weak dual: triangles sharing a chord; must be a path
    tris = sorted(triangles)
    tix = {t: i for i, t in enumerate(tris)}
    dual = {i: set() for i in range(len(tris))}
    for e, ts in tri_of_edge.items():
        if len(ts) == 2:
            a, b = tix[ts[0]], tix[ts[1]]
            dual[a].add(b)
            dual[b].add(a)
    if any(len(nb) > 2 for nb in dual.values()):
        return None
    ends = [i for i, nb in dual.items() if len(nb) <= 1]
    if len(tris) == 1:
        order = [0]
    else:
        if len(ends) != 2:
            return None
        start = min(ends)
        order = [start]
        seen = {start}
        while len(order) < len(tris):
            cur = order[-1]
            nxt = [x for x in dual[cur] if x not in seen]
            if not nxt:
                return None
            order.append(nxt[0])
            seen.add(nxt[0])
    # ear peeling validates outerplanarity itself
    if not _peels_to_edge(g):
        return None
    return StripDecomposition(tuple(tris[i] for i in order), tuple(cycle))


def _peels_to_edge(g: Graph) -> bool:
    adj = [set(a) for a in g.adj]
    alive = set(range(g.n))
    while len(alive) > 2:
        ear = None
        for v in sorted(alive):
            if len(adj[v]) == 2:
                a, b = sorted(adj[v])
                if b in adj[a]:
                    ear = v
                    break
        if ear is None:
            return False
        for w in adj[ear]:
            adj[w].discard(ear)
        adj[ear].clear()
        alive.discard(ear)
    rest = sorted(alive)
    return len(rest) == 2 and rest[1] in adj[rest[0]]
