"""
Fixed points of central subgroups
=================================

A point is fixed by a subgroup iff its barycentric coordinates are
constant on the vertex orbits, so the fixed locus is the hull of the
orbit barycenters.
"""

from alcovekit import center_elements, build_root_system, fixed_locus, fixed_locus_su_n
from alcovekit.rational import pretty_vector

# Z/2 inside Z(SU(4)) fixes a segment.
locus = fixed_locus_su_n(4, 2)
print("SU(4), Z/2: orbits", locus.orbits)
for v in locus.generators:
    print("  endpoint", pretty_vector(v))

# For SU(p), p prime, the whole center fixes only the barycenter.
for p in [3, 5, 7]:
    locus = fixed_locus_su_n(p, p)
    print(f"SU({p}): fixed locus of dimension {locus.dimension} at {pretty_vector(locus.generators[0])}")

# The same construction works for any type.
rs = build_root_system("E6")
locus = fixed_locus(center_elements(rs))
print("E6, full center: orbits", locus.orbits, "dimension", locus.dimension)
