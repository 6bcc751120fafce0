"""Walkthrough: parameter-preserving kernels for split and cobipartite inputs.

Run with:  python3 demos/05_kernels.py
"""

from orientkit import (Graph, cobipartite_kernel, decide_k_orientation, join,
                       split_kernel, split_tight_example)

print("== split kernel: twin-class truncation ==")
# one clique vertex with many identical pendant neighbors
edges = [(0, 1)] + [(0, v) for v in range(2, 14)]
g = Graph(14, edges)
kern, k = split_kernel(g, 2)
print(f"{g.n} vertices shrink to {kern.n}; answers agree at k={k}:",
      (decide_k_orientation(g, k) is None) ==
      (decide_k_orientation(kern, k) is None))

print()
print("== split kernel: the trivial No instance ==")
g = split_tight_example(4)
kern, k = split_kernel(g, 2)
print(f"omega=4 with budget 2 collapses to K_{kern.n}; "
      f"feasible? {decide_k_orientation(kern, k) is not None}")

print()
print("== cobipartite kernel ==")
g = Graph.complete(8)
kern, k = cobipartite_kernel(g, 3)
print(f"K_8 at k=3 -> K_{kern.n} (trivial No)")
g = join(Graph.complete(2), Graph.complete(3))
kern, k = cobipartite_kernel(g, 4)
print(f"small instance (n={g.n}) is already linear: unchanged = {kern == g}, "
      f"n <= 2(k+1) = {2 * (k + 1)}")
