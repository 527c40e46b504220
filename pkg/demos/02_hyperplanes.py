"""
Hyperplanes and their sums
==========================

1023 hyperplanes, indexed by 10-bit coordinates, named by quadruples,
sorted into eight types.
"""

from collections import Counter

from nearhex.geometry import QuadLabel, classify_gq_subset
from nearhex.veldkamp import (
    HTYPE_NAMES, Hyperplane, Quadruple, SetPartition, enumerate_hyperplanes,
    partition_sum,
)

# partitions of {1..6} add like this
e1, e2, e3 = (SetPartition(frozenset({i})) for i in (1, 2, 3))
print(e1, "+", e2, "=", partition_sum(e1, e2))
print(partition_sum(e1, e2), "+", e3, "=", partition_sum(partition_sum(e1, e2), e3))

hs = enumerate_hyperplanes()
print("\n%d hyperplanes" % len(hs))
types = Counter(h.type for h in hs)
for t in HTYPE_NAMES:
    print(" ", t, types[t])

# a quadruple picks the three layer partitions {A+B|C+D}, {A+C|B+D}, {A+D|B+C}
q = Quadruple.from_sets({1, 2}, {3}, {4, 5}, {6})
h = Hyperplane.from_quadruple(q)
print("\nquadruple", q, "-> coords", h.coords, "type", h.type)
for k in range(3):
    print("  layer", k, classify_gq_subset(h.layer(k)))

# the Veldkamp sum is xor in coordinates
a, b = Hyperplane(3), Hyperplane(700)
c = a + b
print("\n%d + %d = %d, types %s %s %s" % (a.coords, b.coords, c.coords,
                                          a.type, b.type, c.type))
print("core size", bin(a.points & b.points).count("1"))

deep = [h for h in hs if any(classify_gq_subset(h.layer(k)) is QuadLabel.FULL
                             for k in range(3))]
print("hyperplanes with a deep layer:", len(deep))
