"""Edge orientations: full, partial, and the properness verifier.

An orientation is proper when adjacent vertices receive distinct indegrees.
A compensated check replaces one vertex's indegree with an override color
before testing properness; it is the interface used by the block-graph
constructors to stitch locally-built pieces together.

Text format: first line "n m", then m lines "u v" meaning the arc u -> v.
Comments start with '#'.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import PreconditionViolated
from .graph import Graph, _tokens


class Orientation:
    """Immutable direction assignment for every edge of a graph."""

    __slots__ = ("graph", "toward_max", "indegree")

    def __init__(self, graph: Graph, toward_max):
        if len(toward_max) != graph.m:
            raise ValueError("need one direction bit per edge")
        self.graph = graph
        self.toward_max = tuple(bool(b) for b in toward_max)
        indeg = [0] * graph.n
        for (u, v), b in zip(graph.edges, self.toward_max):
            indeg[v if b else u] += 1
        self.indegree = tuple(indeg)

    @classmethod
    def from_heads(cls, graph: Graph, heads):
        """heads: per-edge head vertex, indexed like graph.edges."""
        bits = []
        for (u, v), h in zip(graph.edges, heads):
            if h == v:
                bits.append(True)
            elif h == u:
                bits.append(False)
            else:
                raise ValueError(f"head {h} is not an endpoint of ({u},{v})")
        return cls(graph, bits)

    @classmethod
    def from_arcs(cls, graph: Graph, arcs):
        """arcs: iterable of (tail, head); must cover every edge exactly once."""
        heads = [None] * graph.m
        for t, h in arcs:
            e = graph.edge_id(t, h)
            if heads[e] is not None:
                raise ValueError(f"edge ({t},{h}) oriented twice")
            heads[e] = h
        if any(h is None for h in heads):
            raise ValueError("arcs do not cover every edge")
        return cls.from_heads(graph, heads)

    def head(self, e):
        u, v = self.graph.edges[e]
        return v if self.toward_max[e] else u

    def tail(self, e):
        u, v = self.graph.edges[e]
        return u if self.toward_max[e] else v

    def arcs(self):
        for e in range(self.graph.m):
            yield self.tail(e), self.head(e)

    def recompute_indegree(self):
        """Audit path: indegrees rebuilt from scratch, bypassing the cache."""
        indeg = [0] * self.graph.n
        for e in range(self.graph.m):
            indeg[self.head(e)] += 1
        return indeg

    def reversed(self):
        return Orientation(self.graph, [not b for b in self.toward_max])

    def __eq__(self, other):
        if not isinstance(other, Orientation):
            return NotImplemented
        return self.graph == other.graph and self.toward_max == other.toward_max


class PartialOrientation:
    """Mutable, single-owner orientation builder; -1 marks an unoriented edge."""

    __slots__ = ("graph", "heads", "indegree", "unoriented")

    def __init__(self, graph: Graph):
        self.graph = graph
        self.heads = [-1] * graph.m
        self.indegree = [0] * graph.n
        self.unoriented = graph.m

    def copy(self):
        p = PartialOrientation(self.graph)
        p.heads = list(self.heads)
        p.indegree = list(self.indegree)
        p.unoriented = self.unoriented
        return p

    def is_oriented(self, u, v):
        return self.heads[self.graph.edge_id(u, v)] >= 0

    def head_of(self, u, v):
        return self.heads[self.graph.edge_id(u, v)]

    def orient(self, u, v, head):
        if head not in (u, v):
            raise ValueError(f"head {head} not an endpoint of ({u},{v})")
        e = self.graph.edge_id(u, v)
        if self.heads[e] >= 0:
            raise ValueError(f"edge ({u},{v}) already oriented")
        self.heads[e] = head
        self.indegree[head] += 1
        self.unoriented -= 1

    def unorient(self, u, v):
        e = self.graph.edge_id(u, v)
        h = self.heads[e]
        if h < 0:
            raise ValueError(f"edge ({u},{v}) is not oriented")
        self.heads[e] = -1
        self.indegree[h] -= 1
        self.unoriented += 1

    def is_complete(self):
        return self.unoriented == 0

    def to_orientation(self) -> Orientation:
        if self.unoriented:
            raise ValueError(f"{self.unoriented} edges still unoriented")
        return Orientation.from_heads(self.graph, self.heads)


@dataclass(frozen=True)
class CompensationSpec:
    """Override for one vertex: required indegree d, displayed color c."""

    u: int
    c: int
    d: int

    def __post_init__(self):
        if self.c < 0 or self.d < 0:
            raise ValueError("compensation color and indegree must be non-negative")


def is_proper(d: Orientation) -> bool:
    """True iff every edge joins vertices of distinct indegrees."""
    indeg = d.indegree
    return all(indeg[u] != indeg[v] for u, v in d.graph.edges)


def max_indegree(d: Orientation) -> int:
    return max(d.indegree, default=0)


def is_compensated_proper(d: Orientation, spec: CompensationSpec) -> bool:
    """Properness of the indegree coloring with spec.u recolored to spec.c.

    Requires spec.u to actually have indegree spec.d; colors are plain
    non-negative integers, zero included.
    """
    g = d.graph
    if not (0 <= spec.u < g.n):
        raise PreconditionViolated(f"vertex {spec.u} not in graph")
    if d.indegree[spec.u] != spec.d:
        return False
    color = list(d.indegree)
    color[spec.u] = spec.c
    return all(color[u] != color[v] for u, v in g.edges)


# -- text I/O ----------------------------------------------------------


def parse_orientation(text, graph: Graph) -> Orientation:
    toks = list(_tokens(text))
    if len(toks) < 2:
        raise ValueError("orientation text needs a header 'n m'")
    n, m = int(toks[0]), int(toks[1])
    if n != graph.n or m != graph.m:
        raise ValueError(f"orientation header ({n},{m}) does not match graph "
                         f"({graph.n},{graph.m})")
    nums = toks[2:]
    if len(nums) != 2 * m:
        raise ValueError(f"expected {2 * m} endpoint tokens, got {len(nums)}")
    arcs = [(int(nums[2 * i]), int(nums[2 * i + 1])) for i in range(m)]
    return Orientation.from_arcs(graph, arcs)


def format_orientation(d: Orientation) -> str:
    lines = [f"{d.graph.n} {d.graph.m}"]
    lines += [f"{t} {h}" for t, h in d.arcs()]
    return "\n".join(lines) + "\n"


def read_orientation(path, graph: Graph) -> Orientation:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_orientation(fh.read(), graph)


def write_orientation(d: Orientation, path):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_orientation(d))
