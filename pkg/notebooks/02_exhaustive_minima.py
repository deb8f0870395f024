"""
Smallest covering numbers over all k-connected graphs
=====================================================

Enumerate every k-connected graph of a given order up to isomorphism and
tabulate the minimum of cc (and of dc) against the values min{n, 3k} and
min{n, 3k + 2} attained by the join constructions.
"""

import time

import numpy as np

from longcycle.enumeration import UniverseSpec, enumerate_graphs
from longcycle.families import mixed_join
from longcycle.invariants import cc, dc

rows = []
for k, orders in ((2, range(4, 9)), (3, range(5, 9))):
    for n in orders:
        t0 = time.perf_counter()
        values = np.array([cc(g) for g in enumerate_graphs(UniverseSpec(n, min_connectivity=k))])
        rows.append((k, n, len(values), values.min(), min(n, 3 * k),
                     time.perf_counter() - t0))

print("cc over k-connected graphs")
print(" k  n  graphs  min cc  min{n,3k}  seconds")
for k, n, size, lo, bound, secs in rows:
    print(f"{k:2d} {n:2d} {size:7d} {lo:7d} {bound:10d} {secs:8.2f}")

print("\ndc over connected graphs")
for n in range(4, 9):
    values = np.array([dc(g) for g in enumerate_graphs(UniverseSpec(n, connected=True))])
    hist = np.bincount(values, minlength=n + 1)
    print(f"n={n}: min dc = {values.min()} (bound {min(n, 5)}), histogram {hist[1:].tolist()}")

# the extremal constructions reach the bounds for every order
for k in (2, 3):
    print(f"k={k}:", [cc(mixed_join(k, k, n - 3 * k)) for n in range(3 * k + 1, 3 * k + 7)])
