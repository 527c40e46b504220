"""
The doily and the near hexagon
==============================

GQ(2,2) in the duad model, then three copies of it glued along the
type-one lines.
"""

from collections import Counter

from nearhex.geometry import (
    DUADS, GQ_GRIDS, GQ_LINES, GQ_OVOIDS, GQ_PERPS, NH_LINES, QuadLabel,
    bits, classify_gq_subset, mask_of, nh_distances, popcount, triad_centers,
)

# points are duads of {1..6}; a line is three pairwise disjoint duads
print("GQ(2,2):", len(DUADS), "points,", len(GQ_LINES), "lines")
print("a line:", [DUADS[i] for i in bits(GQ_LINES[0])])

# its 31 hyperplanes come in three shapes
print("perps", len(GQ_PERPS), "grids", len(GQ_GRIDS), "ovoids", len(GQ_OVOIDS))
print("an ovoid:", [DUADS[i] for i in bits(GQ_OVOIDS[0])])

# triads: stars have one centre, triangles three
idx = {d: i for i, d in enumerate(DUADS)}
star = mask_of(idx[d] for d in [(1, 2), (1, 3), (1, 4)])
tri = mask_of(idx[d] for d in [(1, 2), (1, 3), (2, 3)])
for name, t in (("star", star), ("triangle", tri)):
    c = triad_centers(t)
    print(name, classify_gq_subset(t), "centres", [DUADS[i] for i in bits(c)])

# the near hexagon L3 x GQ(2,2)
d = nh_distances()
print("\nL3 x GQ(2,2): 45 points,", len(NH_LINES), "lines, diameter", d.max())
print("distances from point 0:", dict(sorted(Counter(d[0].tolist()).items())))

# one layer's worth of some familiar subsets
labels = Counter(classify_gq_subset(s) for s in range(1 << 15)
                 if popcount(s) == 5)
print("5-subsets of a layer:", {str(k): v for k, v in labels.items()
                                if k is not QuadLabel.OTHER})
