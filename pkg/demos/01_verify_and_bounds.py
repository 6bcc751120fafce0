"""Walkthrough: the data model, the properness verifier, and generic bounds.

A proper orientation gives every edge a direction so that adjacent
vertices end up with distinct indegrees.  Run with:  python3 demos/01_verify_and_bounds.py
"""

from orientkit import (CompensationSpec, Graph, Orientation, generic_bounds,
                       is_compensated_proper, is_proper, max_indegree)

print("== a triangle, oriented two ways ==")
tri = Graph.complete(3)
cyclic = Orientation.from_arcs(tri, [(0, 1), (1, 2), (2, 0)])
print("cyclic indegrees:", cyclic.indegree, "-> proper?", is_proper(cyclic))

transitive = Orientation.from_arcs(tri, [(0, 1), (0, 2), (1, 2)])
print("transitive indegrees:", transitive.indegree,
      "-> proper?", is_proper(transitive),
      "max indegree:", max_indegree(transitive))

print()
print("== the universal sandwich ==")
for name, g, omega in [("K_5", Graph.complete(5), 5),
                       ("star with 4 leaves", Graph.star(4), 2),
                       ("C_4", Graph.cycle_graph(4), 2)]:
    lo, hi = generic_bounds(g, omega)
    print(f"{name}: every proper orientation number lies in [{lo}, {hi}]")

print()
print("== compensated properness ==")
print("A compensated check colors one vertex with an override value; the")
print("block-graph constructors use it to stitch pieces whose attachment")
print("vertex will gain more arcs elsewhere.")
k4 = Graph.complete(4)
t = Orientation.from_arcs(k4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
spec = CompensationSpec(u=2, c=5, d=2)
print("transitive K_4, vertex 2 wearing color 5:",
      is_compensated_proper(t, spec))
spec_bad = CompensationSpec(u=0, c=1, d=0)
print("source wearing a neighbor's indegree:",
      is_compensated_proper(t, spec_bad))
