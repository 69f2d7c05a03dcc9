"""
The center acting on the alcove
===============================

``exp(lambda_i^vee)`` acts by ``xi -> w_i xi + lambda_i^vee``.  The Weyl
element ``w_i`` permutes the extended simple roots, which is the same
permutation as the one induced on the vertices.
"""

from alcovekit import (CenterElement, build_root_system, cycle_notation, dynkin_automorphism,
                       evaluate_word, order, vertex_permutation, weyl_element_for_center)
from alcovekit.reference import WEYL_WORDS

for name, i in [("A5", 1), ("D5", 4), ("E6", 1), ("E7", 7)]:
    rs = build_root_system(name)
    z = CenterElement(rs, i)
    print(f"{rs.type}, exp(lambda_{i}^vee): order {order(z)}, "
          f"vertices {cycle_notation(vertex_permutation(z))}, "
          f"Dynkin nodes {cycle_notation(dynkin_automorphism(z))}")

# The tabulated reflection words give the same matrices as the computation.
for (name, i), word in sorted(WEYL_WORDS.items()):
    rs = build_root_system(name)
    same = evaluate_word(rs, word) == weyl_element_for_center(CenterElement(rs, i))
    print(f"{name} w_{i}: {len(word)} reflections, matches computed element: {same}")
