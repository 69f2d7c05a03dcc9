"""
Root data for a simple type
===========================

Everything downstream is derived from the simple roots in Bourbaki
coordinates: marks, coroots, fundamental coweights, the dual Coxeter
number and the order of the center.
"""

from alcovekit import build_root_system, lattice, lattice_index
from alcovekit.rational import pretty_vector

for name in ["A4", "C3", "D5", "E6", "E7", "G2"]:
    rs = build_root_system(name)
    print(f"{rs.type}: marks {list(rs.marks)}, h^vee = {rs.dual_coxeter}, "
          f"|Z| = {rs.center_order}, special roots {list(rs.special_root_indices)}")

# The coweight lattice contains the coroot lattice with index |Z(G)|.
rs = build_root_system("E6")
print("[P^vee : Q^vee] for E6 =", lattice_index(lattice(rs, "Q^vee"), lattice(rs, "P^vee")))

# Fundamental coweights are the dual basis to the simple roots.
for i, c in enumerate(rs.fundamental_coweights, 1):
    print(f"lambda_{i}^vee = {pretty_vector(c)}")
