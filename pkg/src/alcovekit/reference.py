"""Published alcove data for E6 and E7 in Bourbaki coordinates.

Used as golden values by ``alcovekit verify`` and the test-suite, and to
label computed Weyl elements with a known reflection word.
"""

from __future__ import annotations

from .rational import Vector, parse_vector


def _v(s: str) -> Vector:
    return parse_vector(s)


# vertex v_j opposite the wall of alpha_j, keyed by j
E6_VERTICES: dict[int, Vector] = {
    1: _v("0,0,0,0,0,-2/3,-2/3,2/3"),
    2: _v("1/4,1/4,1/4,1/4,1/4,-1/4,-1/4,1/4"),
    3: _v("-1/4,1/4,1/4,1/4,1/4,-5/12,-5/12,5/12"),
    4: _v("0,0,1/3,1/3,1/3,-1/3,-1/3,1/3"),
    5: _v("0,0,0,1/2,1/2,-1/3,-1/3,1/3"),
    6: _v("0,0,0,0,1,-1/3,-1/3,1/3"),
    0: _v("0,0,0,0,0,0,0,0"),
}

E6_ROOTS: dict[int, Vector] = {
    1: _v("1/2,-1/2,-1/2,-1/2,-1/2,-1/2,-1/2,1/2"),
    2: _v("1,1,0,0,0,0,0,0"),
    3: _v("-1,1,0,0,0,0,0,0"),
    4: _v("0,-1,1,0,0,0,0,0"),
    5: _v("0,0,-1,1,0,0,0,0"),
    6: _v("0,0,0,-1,1,0,0,0"),
}
E6_HIGHEST_ROOT = _v("1/2,1/2,1/2,1/2,1/2,-1/2,-1/2,1/2")

E7_VERTICES: dict[int, Vector] = {
    1: _v("0,0,0,0,0,0,-1/2,1/2"),
    2: _v("1/4,1/4,1/4,1/4,1/4,1/4,-1/2,1/2"),
    3: _v("-1/6,1/6,1/6,1/6,1/6,1/6,-1/2,1/2"),
    4: _v("0,0,1/4,1/4,1/4,1/4,-1/2,1/2"),
    5: _v("0,0,0,1/3,1/3,1/3,-1/2,1/2"),
    6: _v("0,0,0,0,1/2,1/2,-1/2,1/2"),
    7: _v("0,0,0,0,0,1,-1/2,1/2"),
    0: _v("0,0,0,0,0,0,0,0"),
}

E7_ROOTS: dict[int, Vector] = {
    1: _v("1/2,-1/2,-1/2,-1/2,-1/2,-1/2,-1/2,1/2"),
    2: _v("1,1,0,0,0,0,0,0"),
    3: _v("-1,1,0,0,0,0,0,0"),
    4: _v("0,-1,1,0,0,0,0,0"),
    5: _v("0,0,-1,1,0,0,0,0"),
    6: _v("0,0,0,-1,1,0,0,0"),
    7: _v("0,0,0,0,-1,1,0,0"),
}
E7_HIGHEST_ROOT = _v("0,0,0,0,0,0,-1,1")

E6_COWEIGHTS: dict[int, Vector] = {
    1: _v("0,0,0,0,0,-2/3,-2/3,2/3"),
    6: _v("0,0,0,0,1,-1/3,-1/3,1/3"),
}
E7_COWEIGHTS: dict[int, Vector] = {
    7: _v("0,0,0,0,0,1,-1/2,1/2"),
}

# Weyl elements w_i with w_i(alpha_0) = alpha_i, as reflection words
WEYL_WORDS: dict[tuple[str, int], tuple[int, ...]] = {
    ("E6", 1): (1, 3, 4, 2, 5, 4, 3, 1, 6, 5, 4, 2, 3, 4, 5, 6),
    ("E6", 6): (6, 5, 4, 2, 3, 1, 4, 3, 5, 4, 2, 6, 5, 4, 3, 1),
    ("E7", 7): (7, 6, 5, 4, 2, 3, 1, 4, 3, 5, 4, 2, 6, 5, 4, 3, 1,
                7, 6, 5, 4, 2, 3, 4, 5, 6, 7),
}
