"""
The bipartite equality class at order nine
==========================================

Every 2-connected bipartite graph of order at least nine has cc >= 8.  The
graphs attaining 8 are an 8-cycle with one of seven chord sets, and the
remaining vertices attach to an antipodal pair of the cycle.  Here we sweep
all 2-connected bipartite graphs of order 9 and compare the equality class
with the constructed family.
"""

from collections import Counter

from longcycle.canon import canonical_form
from longcycle.enumeration import UniverseSpec, enumerate_graphs
from longcycle.families import CHORDS, bipartite_family
from longcycle.formats import graph6_encode
from longcycle.invariants import cc

universe = list(enumerate_graphs(UniverseSpec(9, min_connectivity=2, bipartite=True)))
values = Counter(cc(g) for g in universe)
print(f"{len(universe)} graphs; cc distribution: {dict(sorted(values.items()))}")

equality = {canonical_form(g).canon: g for g in universe if cc(g) == 8}
family = {canonical_form(bipartite_family(i, 9)).canon: i for i in CHORDS}
print("equality class size:", len(equality))
print("family members found in the class:", sorted(family[c] for c in equality if c in family))

for i in CHORDS:
    g = bipartite_family(i, 9)
    chords = ", ".join(f"v{a}v{b}" for a, b in CHORDS[i]) or "none"
    print(f"G_{i},9  chords: {chords:28s} graph6 {graph6_encode(g)}")

# the attachment pair {v4, v8} gives the same graphs for one-chord families
for i in (2, 5):
    same = (canonical_form(bipartite_family(i, 10)).canon
            == canonical_form(bipartite_family(i, 10, attach=(4, 8))).canon)
    print(f"G_{i},10 with attachments at v4, v8 isomorphic to the v1, v5 version: {same}")
