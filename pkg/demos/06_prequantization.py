"""
Prequantization of PU(p) moduli spaces
======================================

A level ``k`` works iff ``p`` divides ``k`` (in positive genus) and every
boundary class satisfies ``k xi`` in the coweight lattice.  The number of
components is ``|Z|`` divided by the subgroup the stabilizers generate.
"""

from alcovekit import ModuliQuery, build_alcove, su_n_barycenter, theorem_obs_check

p = 5
vertex = build_alcove(f"A{p - 1}").vertices[2]

for genus, classes in [(2, []), (0, [su_n_barycenter(p)]), (1, [vertex]),
                       (1, [vertex, su_n_barycenter(p)])]:
    report = theorem_obs_check(ModuliQuery.from_points(p, genus, classes))
    print(f"genus {genus}, marked classes {len(classes)}: k_min = {report.k_min}, "
          f"components = {report.components}, |Gamma| = {report.gamma_order}")

# The admitting levels are exactly the multiples of k_min.
q = ModuliQuery.from_points(3, 1, [su_n_barycenter(3)])
print("levels 1..12 for PU(3), genus 1, barycenter class:",
      [k for k in range(1, 13) if theorem_obs_check(q.with_level(k)).prequantizable])
print("note:", theorem_obs_check(q).caveat)
