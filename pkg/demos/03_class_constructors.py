"""Walkthrough: polynomial constructors, one per recognized class.

Every constructor returns a verified proper orientation meeting its class
bound.  Run with:  python3 demos/03_class_constructors.py
"""

from orientkit import (Graph, chordal_peo, clique_number_chordal,
                       low_degree_orient, max_indegree, outerplanar_strip,
                       outerplanar_strip_orient, proper_orientation_number,
                       quasi_threshold_cotree, quasi_threshold_orient,
                       random_class_instance, split_orient, split_partition,
                       split_tight_example, two_cut_block_orient,
                       uniform_block_orient, block_cut_tree)

print("== quasi-threshold graphs: optimal in linear time ==")
g = random_class_instance("quasi-threshold", 14, seed=7)
cot = quasi_threshold_cotree(g)
d = quasi_threshold_orient(cot)
omega = clique_number_chordal(g, chordal_peo(g).peo)
print(f"n={g.n}: constructor reaches {max_indegree(d)} = omega - 1 = {omega - 1}")

print()
print("== split graphs: within twice the clique number ==")
g = split_tight_example(3)
part = split_partition(g)
d = split_orient(g, part)
print(f"tight example (omega=3, n={g.n}): constructor reaches "
      f"{max_indegree(d)} <= 2*omega - 2 = 4")

print()
print("== uniform block graphs ==")
g = random_class_instance("uniform-block", 9, seed=3, k=4)
d = uniform_block_orient(g)
print(f"4-uniform, {g.n} vertices: constructor reaches {max_indegree(d)} <= 10")

g = random_class_instance("two-cut-block", 8, seed=5, k=3)
bct = block_cut_tree(g)
d = two_cut_block_orient(g, bct, 3)
cuts = sorted(d.indegree[v] for v in bct.cut_vertices)
print(f"two cuts per block, k=3: reaches {max_indegree(d)} <= 4; "
      f"cut indegrees {cuts} (always 0, k, or k+1)")

print()
print("== sparse-degree graphs ==")
spider = Graph(7, [(0, 1), (0, 2), (0, 3), (1, 4), (2, 5), (3, 6)])
d = low_degree_orient(spider, 2)
print(f"spider tree, no adjacent branch vertices: proper 2-orientation "
      f"({d.indegree})")

print()
print("== outerplane triangle strips ==")
g = random_class_instance("strip", 40, seed=11)
strip = outerplanar_strip(g)
d = outerplanar_strip_orient(g, strip)
print(f"{len(strip.triangles)} triangles, max degree {g.max_degree()}: "
      f"constructor reaches {max_indegree(d)} <= 13")

print()
print("== a constructor value is always solver-feasible ==")
g = random_class_instance("split", 10, seed=2)
d = split_orient(g, split_partition(g))
value, _ = proper_orientation_number(g)
print(f"constructor {max_indegree(d)} vs exact optimum {value}")
