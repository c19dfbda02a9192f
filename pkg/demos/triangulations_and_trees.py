#!/usr/bin/env python3
"""Triangulations, quiddity sequences and dual binary trees are one thing.

Round-trips a pentagon through all three encodings, prints the dual tree
both as a bracket string and as GraphViz DOT, and counts triangulations
against the Catalan numbers.
"""

from quiddity import polygons
from quiddity.similarity import catalan

q = (1, 2, 2, 1, 3)
print(f"quiddity sequence {q}")

t = polygons.from_quiddity(q)
print(f"triangulation of the {t.n}-gon: diagonals {t.diagonals}")
print(f"triangles: {polygons.triangles(t)}")
print(f"back to counts: {polygons.to_quiddity(t)}")
print()

tree = polygons.to_dual_tree(t)
print(f"dual tree rooted at side a = {tree.root_side}: {polygons.bracket(tree)}")
print(f"internal nodes (triangles): {polygons.internal_count(tree)}, "
      f"leaves (other sides): {polygons.leaf_count(tree)}")
print(f"depth-first run counts read the sequence back: {polygons.tree_quiddity(tree)}")
print()

print("rerooting at another side rotates the readout:")
for u in range(5):
    side = (u, (u + 1) % 5)
    readout = polygons.tree_quiddity(polygons.to_dual_tree(t, root_side=side))
    print(f"  root {side}: {readout}")
print()

print("GraphViz output (paste into `dot -Tpng`):")
print(polygons.tree_to_dot(tree))
print(polygons.triangulation_to_dot(t))
print()

print("exhaustive enumeration counts are Catalan numbers C_(n-2):")
for n in range(3, 11):
    count = sum(1 for _ in polygons.enumerate_triangulations(n))
    print(f"  n={n:2d}: {count:5d} triangulations (C_{n - 2} = {catalan(n - 2)})")
