"""
The fundamental alcove
======================

Vertices come from the closed form ``v_j = lambda_j^vee / m_j``.  A
brute-force vertex enumeration of the defining half-spaces serves as an
independent check.
"""

from alcovekit import build_alcove, vertex_enumeration_oracle
from alcovekit.rational import pretty_vector

for name in ["E6", "E7"]:
    alc = build_alcove(name)
    rs = alc.rs
    print(f"Alcove data for {rs.type}")
    for j in range(1, rs.rank + 1):
        print(f"  alpha_{j} = {pretty_vector(rs.root(j))}  ->  v_{j} = {pretty_vector(alc.vertices[j])}")
    print(f"  highest root = {pretty_vector(rs.highest_root)}  ->  v_0 = 0")

    oracle = vertex_enumeration_oracle(alc.facets, rs.simple_roots)
    print("  oracle agrees:", oracle.status == "bounded" and oracle.vertices == set(alc.vertices))
    print()
