"""Walkthrough: forcing gadgets and the vertex-cover reduction.

The ladder gadget pins a clique's indegrees; the head gadget turns that
into a forbidden indegree at any host vertex; the reduction assembles
these around a split-graph encoding of vertex cover.
Run with:  python3 demos/04_hardness_gadgets.py
"""

from orientkit import (Graph, build_vc_certificate, chordal_peo,
                       double_clique_gadget, enumerate_proper_k_orientations,
                       head_gadget, is_proper, ladder_gadget, max_indegree,
                       reduce_vertex_cover)

print("== ladder gadget: pinned spine indegrees ==")
g, meta = ladder_gadget(2)
values = set()
for d in enumerate_proper_k_orientations(g, 2):
    values.add(tuple(d.indegree[v] for v in meta.spine))
print(f"spine indegrees over all proper 2-orientations: {values}")

print()
print("== head gadget: forbidding one indegree at a host ==")
fg, fmeta = head_gadget(2, 2)
host = fg.n
hg = Graph(fg.n + 1, list(fg.edges) + [(fmeta.head, host)])
host_values = set()
for d in enumerate_proper_k_orientations(hg, 2):
    host_values.add(d.indegree[host])
print(f"host indegrees with a pendant head forcing 2: {host_values} "
      "(2 never appears)")

print()
print("== double-clique gadget: a forced source ==")
z, zmeta = double_clique_gadget(3)
shared = {d.indegree[zmeta.shared]
          for d in enumerate_proper_k_orientations(z, 2)}
print(f"shared vertex indegrees at the tight bound: {shared}")

print()
print("== the reduction, end to end ==")
k4 = Graph.complete(4)
red = reduce_vertex_cover(k4, 3)
print(f"K_4 with cover budget 3 becomes {red.graph.n} vertices, "
      f"{red.graph.m} edges, bound k' = {red.k_prime}")
print("output is chordal:", chordal_peo(red.graph).peo is not None)
cert = build_vc_certificate(red, {0, 1, 2})
print("certificate from the cover {0,1,2}: proper =", is_proper(cert),
      "| max indegree =", max_indegree(cert), "<=", red.k_prime)
