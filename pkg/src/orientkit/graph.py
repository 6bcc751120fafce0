"""Undirected simple graphs over dense integer vertex ids.

Vertices are 0..n-1.  Edges are stored canonically as (min, max) pairs in a
sorted list, and each vertex keeps a sorted neighbor list.  Instances are
immutable after construction and safe to share across threads.

Text format: first line "n m", then m lines "u v" (0-based endpoints).
Blank lines and '#' comments are ignored; token spacing is free-form.
"""

from __future__ import annotations

from collections import deque
from fractions import Fraction


class Graph:
    __slots__ = ("n", "m", "adj", "edges", "_eix")

    def __init__(self, n, edges=()):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        adj = [[] for _ in range(n)]
        canon = []
        seen = set()
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            e = (u, v) if u < v else (v, u)
            if e in seen:
                raise ValueError(f"duplicate edge {e}")
            seen.add(e)
            canon.append(e)
        canon.sort()
        for u, v in canon:
            adj[u].append(v)
            adj[v].append(u)
        for lst in adj:
            lst.sort()
        self.n = n
        self.m = len(canon)
        self.adj = adj
        self.edges = canon
        self._eix = {e: i for i, e in enumerate(canon)}

    # -- basic queries ------------------------------------------------

    def degree(self, v):
        return len(self.adj[v])

    def degrees(self):
        return [len(a) for a in self.adj]

    def max_degree(self):
        return max((len(a) for a in self.adj), default=0)

    def has_edge(self, u, v):
        return ((u, v) if u < v else (v, u)) in self._eix

    def edge_id(self, u, v):
        return self._eix[(u, v) if u < v else (v, u)]

    def edges_per_vertex(self):
        """|E| / |V| as an exact rational (0 for the empty-vertex graph)."""
        if self.n == 0:
            return Fraction(0)
        return Fraction(self.m, self.n)

    def is_clique(self, vertices):
        vs = list(vertices)
        return all(self.has_edge(vs[i], vs[j])
                   for i in range(len(vs)) for j in range(i + 1, len(vs)))

    # -- traversal ----------------------------------------------------

    def connected_components(self):
        seen = [False] * self.n
        comps = []
        for s in range(self.n):
            if seen[s]:
                continue
            comp = [s]
            seen[s] = True
            queue = deque([s])
            while queue:
                x = queue.popleft()
                for y in self.adj[x]:
                    if not seen[y]:
                        seen[y] = True
                        comp.append(y)
                        queue.append(y)
            comps.append(sorted(comp))
        return comps

    def is_connected(self):
        return self.n <= 1 or len(self.connected_components()) == 1

    def bfs_distances(self, source):
        dist = [-1] * self.n
        dist[source] = 0
        queue = deque([source])
        while queue:
            x = queue.popleft()
            for y in self.adj[x]:
                if dist[y] < 0:
                    dist[y] = dist[x] + 1
                    queue.append(y)
        return dist

    def diameter(self):
        """Max eccentricity; raises on disconnected or empty graphs."""
        if self.n == 0:
            raise ValueError("diameter of the empty graph is undefined")
        best = 0
        for s in range(self.n):
            dist = self.bfs_distances(s)
            worst = max(dist)
            if min(dist) < 0:
                raise ValueError("graph is disconnected")
            best = max(best, worst)
        return best

    # -- derived graphs -----------------------------------------------

    def induced(self, vertices):
        """Induced subgraph plus the list mapping new ids to old ids."""
        old = sorted(set(vertices))
        pos = {v: i for i, v in enumerate(old)}
        es = [(pos[u], pos[v]) for (u, v) in self.edges if u in pos and v in pos]
        return Graph(len(old), es), old

    def relabeled(self, perm):
        """Copy under the permutation perm (old id -> new id)."""
        if sorted(perm) != list(range(self.n)):
            raise ValueError("perm must be a permutation of 0..n-1")
        return Graph(self.n, [(perm[u], perm[v]) for u, v in self.edges])

    def complement(self):
        es = [(u, v) for u in range(self.n) for v in range(u + 1, self.n)
              if not self.has_edge(u, v)]
        return Graph(self.n, es)

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"

    # -- stock constructions -------------------------------------------

    @staticmethod
    def empty(n):
        return Graph(n)

    @staticmethod
    def complete(n):
        return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])

    @staticmethod
    def path_graph(n):
        return Graph(n, [(i, i + 1) for i in range(n - 1)])

    @staticmethod
    def cycle_graph(n):
        if n < 3:
            raise ValueError("cycle needs at least 3 vertices")
        return Graph(n, [(i, (i + 1) % n) for i in range(n)])

    @staticmethod
    def star(leaves):
        return Graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    """Vertex-disjoint copy; g2's ids are shifted by g1.n."""
    es = list(g1.edges) + [(u + g1.n, v + g1.n) for u, v in g2.edges]
    return Graph(g1.n + g2.n, es)


def join(g1: Graph, g2: Graph) -> Graph:
    """Disjoint union plus every cross edge."""
    es = list(g1.edges) + [(u + g1.n, v + g1.n) for u, v in g2.edges]
    es += [(u, v + g1.n) for u in range(g1.n) for v in range(g2.n)]
    return Graph(g1.n + g2.n, es)


def generic_bounds(g: Graph, omega: int):
    """(omega - 1, max degree): the universal sandwich for the orientation number."""
    return omega - 1, g.max_degree()


# -- text I/O ----------------------------------------------------------


def _tokens(text):
    for line in text.splitlines():
        body = line.split("#", 1)[0].strip()
        if body:
            yield from body.split()


def parse_graph(text) -> Graph:
    toks = list(_tokens(text))
    if len(toks) < 2:
        raise ValueError("graph text needs a header 'n m'")
    n, m = int(toks[0]), int(toks[1])
    nums = toks[2:]
    if len(nums) != 2 * m:
        raise ValueError(f"expected {2 * m} endpoint tokens, got {len(nums)}")
    edges = [(int(nums[2 * i]), int(nums[2 * i + 1])) for i in range(m)]
    return Graph(n, edges)


def format_graph(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines += [f"{u} {v}" for u, v in g.edges]
    return "\n".join(lines) + "\n"


def read_graph(path) -> Graph:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_graph(fh.read())


def write_graph(g: Graph, path):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_graph(g))
