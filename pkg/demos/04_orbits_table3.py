"""
Orbits of Veldkamp lines
========================

Enumerate the orbits directly, describe each by its core, and look at the
profiles that need a finer geometric test to tell orbits apart.
"""

from nearhex.classify import (
    core_of_line, discriminate, enumerate_orbits, profile_collisions,
)
from nearhex.geometry import DUADS, bits

orbits = enumerate_orbits()
print(len(orbits), "orbits,", sum(o.size for o in orbits), "lines")

print("\nlargest cores:")
for rec in orbits[:5]:
    p = rec.profile
    print("  row %3d  size %4d  pt %2d  ln %2d  %s  %s" % (
        rec.table3_row, rec.size, p.pt, p.ln, p.composition_str(),
        " ".join(map(str, p.layer_labels))))

print("\nsmallest cores:")
for rec in orbits[-3:]:
    p = rec.profile
    print("  row %3d  size %4d  pt %2d  %s" % (rec.table3_row, rec.size,
                                             p.pt, p.composition_str()))

print("\nprofiles shared by several orbits:")
for group in sorted(profile_collisions(orbits), key=lambda g: g[0].orbit_id):
    notes = sorted({int(r.discriminator_note) for r in group})
    parts = []
    for rec in group:
        core = core_of_line(rec.representative)
        rows = "/".join(str(discriminate(core, n)) for n in notes)
        parts.append("row %d (size %d) -> %s" % (rec.table3_row, rec.size, rows))
    print("  footnote %s: %s" % ("+".join(map(str, notes)), "; ".join(parts)))

# the core of one line, layer by layer
rec = orbits[-1]
core = core_of_line(rec.representative)
print("\ncore of", rec.representative, ":",
      [(p // 15, DUADS[p % 15]) for p in bits(core)])
