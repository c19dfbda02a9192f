#!/usr/bin/env python3
"""Positive SL2-tilings: factors, fractures, and regeneration from a seed.

Uses the closed-form tiling

    alpha(i,j) = |i| + |j| + 2            if i*j < 0
    alpha(i,j) = |i*j| + |i| + |j| + 2    otherwise

which is fractured exactly at row 0 and column 0: away from the fractures
every row and column runs in arithmetic progression.
"""

from quiddity import tiling

window = tiling.formula_window(-2, 2, -2, 2)
print("5x5 window of the closed-form tiling (rows i = -2..2):")
print(window.render())
print()
print(f"every adjacent 2x2 minor is 1: {window.unimodular_everywhere()}")
print()

factors = tiling.extract_factors(window)
print(f"column factors k_j:  {factors.k}")
print(f"row factors    l_i:  {factors.l}")
cols, rows = tiling.fractures(factors)
print(f"fractures (factor != 2): columns {cols}, rows {rows}")
print()

print("between fractures the rows are arithmetic progressions:")
for i in (-1, 1):
    row = [window.value(i, j) for j in range(-2, 3)]
    print(f"  row {i:+d}: {row[:3]} | {row[2:]}")
print()

print("the factor vectors plus one unimodular 2x2 seed rebuild the window:")
seed = ((2, 3), (3, 5))
regenerated = tiling.generate_tiling(seed, factors.k, factors.l, -2, 2, -2, 2)
print(f"  seed {seed} -> identical window: {regenerated == window}")
print()

print("one more row below needs l_2 = 2 and continues the progressions:")
extended = tiling.generate_tiling(seed, factors.k, {**factors.l, 2: 2}, -2, 3, -2, 2)
print(extended.render())
print()
print("(note the genuine continuation (7,6,5,9,13); copying the row (5,4,3,5,7)")
print(" there would break unimodularity: 7*7 - 10*5 = -1)")
print()

print("an all-2 factor choice gives pure arithmetic progressions:")
flat = tiling.generate_tiling(
    ((1, 1), (1, 2)), {j: 2 for j in range(-2, 3)}, {i: 2 for i in range(-2, 3)}, -2, 2, -2, 2
)
print(flat.render())
