"""
Folding points into the alcove
==============================

Any point of the root subspace is moved into the alcove by repeatedly
reflecting in the first violated wall.  The witness is an affine Weyl
element ``g`` with ``g(xi)`` equal to the folded point.
"""

from fractions import Fraction as F

from alcovekit import build_alcove, fold_to_alcove
from alcovekit.rational import pretty_vector, vec

alc = build_alcove("A2")
xi = vec([F(7, 3), F(-1, 2), F(-11, 6)])
point, g = fold_to_alcove(alc, xi)

print("input        ", pretty_vector(xi))
print("folded       ", pretty_vector(point.cartesian))
print("barycentric  ", pretty_vector(point.barycentric))
print("witness word ", list(g.word), "(0 is the affine wall)")
print("translation  ", pretty_vector(g.translation))
print("g(xi) == folded:", g(xi) == point.cartesian)

# Folding again changes nothing.
again, h = fold_to_alcove(alc, point.cartesian)
print("idempotent:", again == point and h.word == ())
