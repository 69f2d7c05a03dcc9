"""Exact computations with the center action on Weyl alcoves.

Root-system data in Bourbaki coordinates, the fundamental alcove and its
vertices, folding of points by the affine Weyl group, the action of Z(G)
on the alcove, and the arithmetic prequantization criteria for moduli
spaces of flat PU(p)-bundles.  All arithmetic is exact (``Fraction``).
"""

from .affine_weyl import (AffineWeylElement, WeylElement, evaluate_word, fold_point,
                          fold_to_alcove, reflect)
from .alcove import (Alcove, AlcovePoint, build_alcove, contains, from_barycentric,
                     su_n_barycenter, to_barycentric, vertex_enumeration_oracle)
from .center import (CenterElement, act_on_point, center_elements, compose, cycle_notation,
                     dynkin_automorphism, fixed_locus, fixed_locus_su_n, order, stabilizer,
                     su_n_subgroup, vertex_permutation, weyl_element_for_center)
from .lie_data import (RootSystem, SimpleType, build_root_system, flat_map, lattice,
                       lattice_contains, lattice_index)
from .prequant import (ModuliQuery, PrequantReport, ScopeError, class_min_level,
                       component_count, double_min_level, gamma_order, minimal_level,
                       theorem_obs_check)

__version__ = "0.1.0"
