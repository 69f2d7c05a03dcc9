"""The fundamental alcove as a simplex cut out by l+1 half-spaces."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Sequence

from . import rational as rq
from .lie_data import RootSystem, build_root_system, check_root_space
from .rational import Vector

__all__ = [
    "Facet", "Alcove", "AlcovePoint", "VertexEnumeration", "build_alcove",
    "contains", "violated_facet", "to_barycentric", "from_barycentric",
    "vertex_enumeration_oracle", "su_n_barycenter",
]


@dataclass(frozen=True)
class Facet:
    """Half-space ``<normal, x> <= offset``.

    ``index`` is the node of the extended Dynkin diagram whose wall this is;
    the vertex ``v_index`` is the one vertex not on it.
    """
    normal: Vector
    offset: Fraction
    index: int

    def value(self, x: Vector) -> Fraction:
        return rq.dot(self.normal, x)

    def satisfied(self, x: Vector) -> bool:
        return self.value(x) <= self.offset

    def describe(self) -> str:
        if self.index == 0:
            return "<xi, highest root> <= 1"
        return f"<xi, alpha_{self.index}> >= 0"


@dataclass(frozen=True, eq=False)
class Alcove:
    rs: RootSystem
    facets: tuple[Facet, ...]
    vertices: tuple[Vector, ...]

    @property
    def rank(self) -> int:
        return self.rs.rank

    def barycenter(self) -> Vector:
        return rq.scale(Fraction(1, len(self.vertices)),
                        rq.combination([1] * len(self.vertices), self.vertices))


@dataclass(frozen=True)
class AlcovePoint:
    cartesian: Vector
    barycentric: tuple[Fraction, ...]


@lru_cache(maxsize=None)
def _build_alcove(rs: RootSystem) -> Alcove:
    facets = [Facet(rs.highest_root, Fraction(1), 0)]
    facets += [Facet(rq.neg(a), Fraction(0), j) for j, a in enumerate(rs.simple_roots, 1)]
    # v_j = lambda_j^vee / m_j; v_0 = 0
    verts = [rq.zero(rs.ambient_dim)]
    verts += [rq.scale(Fraction(1, m), c) for m, c in zip(rs.marks, rs.fundamental_coweights)]
    return Alcove(rs, tuple(facets), tuple(verts))


def build_alcove(rs: RootSystem | str) -> Alcove:
    if isinstance(rs, str):
        rs = build_root_system(rs)
    return _build_alcove(rs)


def violated_facet(alc: Alcove, xi: Vector) -> Facet | None:
    """First violated facet, scanning alpha_1..alpha_l and then the top wall."""
    for f in alc.facets[1:] + alc.facets[:1]:
        if not f.satisfied(xi):
            return f
    return None


def contains(alc: Alcove, xi: Vector) -> bool:
    """Closed-alcove membership."""
    check_root_space(alc.rs, xi)
    return violated_facet(alc, xi) is None


def to_barycentric(alc: Alcove, xi: Vector) -> AlcovePoint:
    check_root_space(alc.rs, xi)
    bad = violated_facet(alc, xi)
    if bad is not None:
        raise ValueError(f"{rq.pretty_vector(xi)} lies outside the alcove: violates {bad.describe()}")
    rs = alc.rs
    # <alpha_j, v_i> = delta_ij / m_j for i, j >= 1
    t = [m * rq.dot(a, xi) for m, a in zip(rs.marks, rs.simple_roots)]
    return AlcovePoint(tuple(xi), (1 - sum(t, Fraction(0)),) + tuple(t))


def from_barycentric(alc: Alcove, t: Sequence) -> AlcovePoint:
    t = rq.vec(t)
    if len(t) != len(alc.vertices):
        raise ValueError(f"expected {len(alc.vertices)} barycentric coordinates, got {len(t)}")
    if sum(t) != 1 or any(x < 0 for x in t):
        raise ValueError("barycentric coordinates must be non-negative and sum to 1")
    return AlcovePoint(rq.combination(t, alc.vertices), t)


@dataclass(frozen=True)
class VertexEnumeration:
    status: str  # "bounded", "unbounded" or "empty"
    vertices: frozenset[Vector]


def vertex_enumeration_oracle(facets: Sequence[Facet], basis: Sequence[Vector]) -> VertexEnumeration:
    """Brute-force vertices of ``{x in span(basis) : <a, x> <= b for all facets}``.

    Every ``dim``-subset of facets is solved as an equality system and the
    feasible solutions are kept.  Boundedness is decided the same way on the
    recession cone ``{d : <a, d> <= 0}``.
    """
    dim = len(basis)
    # constraints in the coordinates c of x = sum c_k basis_k
    rows = [tuple(rq.dot(f.normal, b) for b in basis) for f in facets]
    rhs = [f.offset for f in facets]

    def feasible(c, bound):
        return all(rq.dot(r, c) <= b for r, b in zip(rows, bound))

    found = set()
    for subset in combinations(range(len(facets)), dim):
        c = rq.solve_unique([rows[i] for i in subset], [rhs[i] for i in subset])
        if c is not None and feasible(c, rhs):
            found.add(rq.combination(c, basis))

    if not found:
        # an empty vertex set also covers polyhedra with lines; both are rejected
        return VertexEnumeration("empty" if not _has_point(rows, rhs, dim) else "unbounded",
                                 frozenset())
    if rq.rank(rows) < dim:
        return VertexEnumeration("unbounded", frozenset(found))
    zeros = [Fraction(0)] * len(rows)
    for subset in combinations(range(len(rows)), dim - 1):
        res = rq.solve([rows[i] for i in subset], [0] * (dim - 1))
        if res is None or len(res[1]) != 1:
            continue
        d = res[1][0]
        if feasible(d, zeros) or feasible(rq.neg(d), zeros):
            return VertexEnumeration("unbounded", frozenset(found))
    return VertexEnumeration("bounded", frozenset(found))


def _has_point(rows, rhs, dim) -> bool:
    # only reached when no vertex exists: either empty, or a polyhedron with a
    # lineality space; shift to the lineality complement and retry
    if rq.rank(rows) == dim:
        return False
    R, pivots = rq.row_reduce(rows)
    reduced = [tuple(r[p] for p in pivots) for r in rows]
    return bool(vertex_enumeration_oracle(
        [Facet(r, b, i) for i, (r, b) in enumerate(zip(reduced, rhs))],
        [rq.unit(len(pivots), k) for k in range(len(pivots))]).vertices)


def su_n_barycenter(n: int) -> Vector:
    """Barycenter of the SU(n) alcove, ``((n-1)/2n, (n-3)/2n, ..., (1-n)/2n)``."""
    if n < 2:
        raise ValueError("n must be at least 2")
    return tuple(Fraction(n - 1 - 2 * i, 2 * n) for i in range(n))
