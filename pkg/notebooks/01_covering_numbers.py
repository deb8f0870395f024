"""
Detours, cummerbunds and their covering numbers
===============================================

A detour is a longest path and a cummerbund is a longest cycle.  dc(G) counts
the vertices lying on some detour, cc(G) those lying on some cummerbund.
This script walks through the invariants on a few small graphs.
"""

import numpy as np

from longcycle.families import (cycle, mixed_join, path, remark1_family, remark3_family,
                                theta)
from longcycle.formats import graph6_encode
from longcycle.graph import from_edge_list
from longcycle.invariants import (count_cummerbunds, cummerbund_cover_set, detour_cover_set,
                                  longest_cycle, profile)

# the Petersen graph: circumference 9, yet every vertex lies on a 9-cycle
petersen = from_edge_list(10, [(i, (i + 1) % 5) for i in range(5)]
                          + [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
                          + [(i, i + 5) for i in range(5)])
print("Petersen:", graph6_encode(petersen), profile(petersen))
print("  one cummerbund:", longest_cycle(petersen).vertices)
print("  number of cummerbunds:", count_cummerbunds(petersen))

# k K_1 joined with q K_2 + m K_1: the cycles must alternate through the k hubs,
# so only 3k vertices can ever be covered
g = mixed_join(2, 2, 4)
print("\n2K_1 v (2K_2 + 4K_1):", profile(g))
print("  cummerbund cover set:", sorted(cummerbund_cover_set(g)))

# the two sharpness families just below the minimum-degree thresholds
for n in (9, 12, 15):
    p = profile(remark1_family(n))
    print(f"remark1_family({n}): cc={p.cc} of {n}, covered={p.cummerbund_covered}")
for n in (6, 9, 12):
    p = profile(remark3_family(n))
    print(f"remark3_family({n}): dc={p.dc} of {n}, covered={p.detour_covered}")

# a table of profiles as a numpy array, one row per graph
graphs = {"C8": cycle(8), "P6": path(6), "theta(4,4,3,3)": theta([4, 4, 3, 3]),
          "theta(3,3,2,2)": theta([3, 3, 2, 2]), "Petersen": petersen}
fields = ["order", "kappa", "circumference", "detour_order", "dc", "cc"]
table = np.array([[getattr(profile(h), f) for f in fields] for h in graphs.values()])
print("\n" + " ".join(f"{f:>13}" for f in ["graph"] + fields))
for name, row in zip(graphs, table):
    print(f"{name:>13} " + " ".join(f"{v:>13}" for v in row))

# detour cover sets can be strictly larger than any single detour
star = from_edge_list(4, [(0, 1), (0, 2), (0, 3)])
print("\nstar K_{1,3}: detour order", profile(star).detour_order,
      "but dc =", len(detour_cover_set(star)))
