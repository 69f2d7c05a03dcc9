"""Action of the center Z(G) on the fundamental alcove.

The action of ``z = exp(lambda_i^vee)`` is computed by folding
``xi + lambda_i^vee`` back into the alcove.  The Weyl element ``w_i`` and
the extended-Dynkin permutation are then read off the folded map, which
gives an independent path to cross-check against vertex permutations.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from . import rational as rq
from .affine_weyl import AffineWeylElement, WeylElement, fold_point, fold_to_alcove, identity_element
from .alcove import AlcovePoint, build_alcove, to_barycentric
from .lie_data import RootSystem, build_root_system
from .rational import Vector
from .reference import WEYL_WORDS

__all__ = [
    "CenterElement", "FixedLocus", "center_elements", "generator",
    "act_on_point", "center_affine_map", "weyl_element_for_center",
    "vertex_permutation", "dynkin_automorphism", "compose", "power", "order",
    "subgroup_generated", "stabilizer", "fixed_locus", "fixed_locus_su_n",
    "cycle_notation", "known_word", "su_n_subgroup",
]

Permutation = tuple[int, ...]


@dataclass(frozen=True)
class CenterElement:
    """``exp(lambda_i^vee)``; ``index == 0`` is the identity."""
    rs: RootSystem
    index: int

    def __post_init__(self):
        if self.index != 0 and self.index not in self.rs.special_root_indices:
            raise ValueError(
                f"{self.index} is not a special root of {self.rs.type}; central elements "
                f"are indexed by 0 and {list(self.rs.special_root_indices)}")

    @property
    def coweight(self) -> Vector:
        return self.rs.coweight(self.index)

    def __str__(self) -> str:
        return "1" if self.index == 0 else f"exp(lambda_{self.index}^vee)"


def center_elements(rs: RootSystem) -> tuple[CenterElement, ...]:
    return tuple(CenterElement(rs, i) for i in (0,) + rs.special_root_indices)


def _point(rs: RootSystem, xi) -> Vector:
    return xi.cartesian if isinstance(xi, AlcovePoint) else rq.vec(xi)


def act_on_point(z: CenterElement, xi: AlcovePoint | Vector) -> AlcovePoint:
    """``z . xi``: the alcove representative of ``xi + lambda_i^vee``."""
    alc = build_alcove(z.rs)
    x = to_barycentric(alc, _point(z.rs, xi)).cartesian
    if z.index == 0:
        return to_barycentric(alc, x)
    return fold_point(alc, rq.add(x, z.coweight))


@lru_cache(maxsize=None)
def center_affine_map(z: CenterElement) -> AffineWeylElement:
    """The affine map ``xi -> w_i xi + lambda_i^vee`` realizing ``z`` on the alcove.

    Folding an interior point pins down the unique affine Weyl element taking
    the translated alcove back to the alcove.
    """
    rs = z.rs
    if z.index == 0:
        return AffineWeylElement(identity_element(rs), rq.zero(rs.ambient_dim), ())
    alc = build_alcove(rs)
    _, g = fold_to_alcove(alc, rq.add(alc.barycenter(), z.coweight))
    shift = AffineWeylElement(identity_element(rs), z.coweight, ())
    f = g * shift
    if f.translation != z.coweight:
        raise ArithmeticError(f"center action of {z} is not w xi + lambda^vee")
    return f


def known_word(z: CenterElement) -> tuple[int, ...] | None:
    return WEYL_WORDS.get((str(z.rs.type), z.index))


@lru_cache(maxsize=None)
def weyl_element_for_center(z: CenterElement) -> WeylElement:
    """``w_i``: leaves alcove-plus-alpha_0 invariant and sends alpha_0 to alpha_i."""
    rs = z.rs
    if z.index == 0:
        return identity_element(rs)
    w = center_affine_map(z).linear
    if w(rs.root(0)) != rs.root(z.index):
        raise ArithmeticError(f"w({z}) does not send alpha_0 to alpha_{z.index}")
    _root_permutation(rs, w)
    return w


def _root_permutation(rs: RootSystem, w: WeylElement) -> Permutation:
    roots = rs.extended_roots
    index = {r: k for k, r in enumerate(roots)}
    try:
        return tuple(index[w(r)] for r in roots)
    except KeyError:
        raise ArithmeticError("Weyl element does not permute the extended simple roots") from None


@lru_cache(maxsize=None)
def vertex_permutation(z: CenterElement) -> Permutation:
    """``mapping[j] = k`` when ``z . v_j = v_k``, found by folding."""
    alc = build_alcove(z.rs)
    index = {v: k for k, v in enumerate(alc.vertices)}
    return tuple(index[act_on_point(z, v).cartesian] for v in alc.vertices)


@lru_cache(maxsize=None)
def dynkin_automorphism(z: CenterElement) -> Permutation:
    """Permutation of extended Dynkin nodes induced by ``w_i`` on alpha_0..alpha_l."""
    rs = z.rs
    perm = _root_permutation(rs, weyl_element_for_center(z))
    A = rs.extended_cartan
    n = len(perm)
    if any(A[perm[i]][perm[j]] != A[i][j] for i in range(n) for j in range(n)):
        raise ArithmeticError("node permutation does not preserve the extended Cartan matrix")
    return perm


def cycle_notation(perm: Sequence[int], fixed: bool = False) -> str:
    seen, out = set(), []
    for start in range(len(perm)):
        if start in seen:
            continue
        cyc = [start]
        seen.add(start)
        k = perm[start]
        while k != start:
            cyc.append(k)
            seen.add(k)
            k = perm[k]
        if len(cyc) > 1 or fixed:
            out.append("(" + " ".join(map(str, cyc)) + ")")
    return "".join(out) or "()"


# -- group law ------------------------------------------------------------------

def compose(z1: CenterElement, z2: CenterElement) -> CenterElement:
    """``z1 z2``, matched through where the composite alcove map sends v_0."""
    if z1.rs is not z2.rs:
        raise ValueError("central elements of different groups")
    k = vertex_permutation(z1)[vertex_permutation(z2)[0]]
    # z . v_0 = v_i identifies z = exp(lambda_i^vee)
    return CenterElement(z1.rs, k)


def power(z: CenterElement, k: int) -> CenterElement:
    out = CenterElement(z.rs, 0)
    for _ in range(k % z.rs.center_order):
        out = compose(z, out)
    return out


def order(z: CenterElement) -> int:
    k, x = 1, z
    while x.index != 0:
        x = compose(z, x)
        k += 1
    return k


def generator(rs: RootSystem) -> CenterElement:
    """An element of maximal order (a generator when the center is cyclic)."""
    return max(center_elements(rs), key=lambda z: (order(z), -z.index))


def subgroup_generated(gens: Iterable[CenterElement], rs: RootSystem | None = None
                       ) -> tuple[CenterElement, ...]:
    gens = list(gens)
    if rs is None:
        if not gens:
            raise ValueError("need a root system for the trivial subgroup")
        rs = gens[0].rs
    elems = {0: CenterElement(rs, 0)}
    frontier = list(elems.values())
    while frontier:
        new = []
        for x in frontier:
            for g in gens:
                y = compose(g, x)
                if y.index not in elems:
                    elems[y.index] = y
                    new.append(y)
        frontier = new
    return tuple(elems[k] for k in sorted(elems))


def stabilizer(xi: AlcovePoint | Vector, subgroup: Sequence[CenterElement]) -> tuple[CenterElement, ...]:
    """Elements of ``subgroup`` fixing the conjugacy class of ``exp(xi)``."""
    if not subgroup:
        return ()
    rs = subgroup[0].rs
    x = to_barycentric(build_alcove(rs), _point(rs, xi)).cartesian
    # on the alcove, z acts by the affine map found once by folding
    return tuple(z for z in subgroup if z.index == 0 or center_affine_map(z)(x) == x)


# -- fixed loci ---------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class FixedLocus:
    """Fixed points of a central subgroup: the hull of the orbit barycenters.

    A point is fixed iff its barycentric coordinates are constant on every
    orbit of the induced vertex permutation.
    """
    rs: RootSystem
    order: int
    orbits: tuple[tuple[int, ...], ...]
    generators_barycentric: tuple[tuple[Fraction, ...], ...]

    @property
    def generators(self) -> tuple[Vector, ...]:
        alc = build_alcove(self.rs)
        return tuple(rq.combination(t, alc.vertices) for t in self.generators_barycentric)

    @property
    def dimension(self) -> int:
        return len(self.orbits) - 1

    def contains(self, xi: AlcovePoint | Vector) -> bool:
        t = to_barycentric(build_alcove(self.rs), _point(self.rs, xi)).barycentric
        return all(t[i] == t[orb[0]] for orb in self.orbits for i in orb)


def _orbit_barycenters(n: int, orbits) -> tuple[tuple[Fraction, ...], ...]:
    gens = []
    for orb in orbits:
        t = [Fraction(0)] * n
        for i in orb:
            t[i] = Fraction(1, len(orb))
        gens.append(tuple(t))
    return tuple(gens)


def fixed_locus(subgroup: Sequence[CenterElement]) -> FixedLocus:
    """Generic fixed locus for any central subgroup of any type."""
    rs = subgroup[0].rs
    n = rs.rank + 1
    parent = list(range(n))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for z in subgroup:
        for j, k in enumerate(vertex_permutation(z)):
            parent[find(j)] = find(k)
    groups: dict[int, list[int]] = {}
    for j in range(n):
        groups.setdefault(find(j), []).append(j)
    orbits = tuple(sorted(tuple(g) for g in groups.values()))
    return FixedLocus(rs, len(subgroup), orbits, _orbit_barycenters(n, orbits))


def fixed_locus_su_n(n: int, nu: int) -> FixedLocus:
    """Fixed points of ``Z/nu`` in ``Z(SU(n)) = Z/n``: orbits ``{i, i+m, ...}``, ``m = n/nu``."""
    if n < 2:
        raise ValueError("n must be at least 2")
    if nu < 1 or n % nu:
        raise ValueError(f"nu = {nu} does not divide n = {n}")
    m = n // nu
    rs = build_root_system(f"A{n - 1}")
    orbits = tuple(tuple(i + j * m for j in range(nu)) for i in range(m))
    return FixedLocus(rs, nu, orbits, _orbit_barycenters(n, orbits))


def su_n_subgroup(n: int, nu: int) -> tuple[CenterElement, ...]:
    """The subgroup of order ``nu`` in ``Z(SU(n))``."""
    if nu < 1 or n % nu:
        raise ValueError(f"nu = {nu} does not divide n = {n}")
    rs = build_root_system(f"A{n - 1}")
    return subgroup_generated([power(CenterElement(rs, 1), n // nu)], rs)

