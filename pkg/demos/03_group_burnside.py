"""
S6 x S3 and Burnside's lemma
============================

Fixed Veldkamp lines per conjugacy class, split by how the three
hyperplanes are moved.
"""

from nearhex.classify import burnside_count, fix_table
from nearhex.group import ORDER, build_group, conjugacy_class_reps

print("|G| =", len(build_group()), "classes:", len(conjugacy_class_reps()))

total = 0
print("\n%-22s %7s %5s %5s %5s" % ("class", "Fix1", "Fix2", "Fix3", "size"))
for f in fix_table(threads=0):
    total += f.product
    print("%-22s %7d %5d %5d %5d" % (f.conj_class.name, f.fix1, f.fix2,
                                     f.fix3, f.conj_class.size))
print("\nsum of |class| x |Fix| =", total, "=", ORDER, "x", total // ORDER)

for action in ("gq_hyperplanes", "gq_lines", "nh_hyperplanes", "nh_lines"):
    print("%-15s %d orbits" % (action, burnside_count(action)))
