"""Root-system data for the compact simple Lie groups in Bourbaki coordinates.

Vectors of ``t`` and ``t*`` share one ambient ``R^N``; the natural pairing
between them is the standard dot product there.  The basic inner product on
``t`` (short coroots of squared length 2) is ``inner_product_scale`` times
the dot product.

Only simple roots and the highest root are tabulated.  Marks, coroots,
fundamental (co)weights, the center order and the dual Coxeter number are
all derived from those.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache

from . import rational as rq
from .rational import Vector

__all__ = [
    "SimpleType", "RootSystem", "Lattice", "build_root_system", "lattice",
    "lattice_contains", "lattice_index", "flat_map", "in_root_space",
]

_MIN_RANK = {"A": 1, "B": 2, "C": 3, "D": 4}
_EXCEPTIONAL = {"E": (6, 7, 8), "F": (4,), "G": (2,)}


@dataclass(frozen=True)
class SimpleType:
    series: str
    rank: int

    def __post_init__(self):
        s, n = self.series, self.rank
        if s in _MIN_RANK:
            if not isinstance(n, int) or n < _MIN_RANK[s]:
                raise ValueError(
                    f"invalid simple type {s}{n}: {s}_n requires n >= {_MIN_RANK[s]}")
        elif s in _EXCEPTIONAL:
            if n not in _EXCEPTIONAL[s]:
                allowed = ", ".join(f"{s}{k}" for k in _EXCEPTIONAL[s])
                raise ValueError(f"invalid simple type {s}{n}: series {s} only has {allowed}")
        else:
            raise ValueError(f"unknown series {s!r}; expected one of A B C D E F G")

    @classmethod
    def parse(cls, text: str) -> "SimpleType":
        m = re.fullmatch(r"\s*([A-Ga-g])_?(\d+)\s*", text)
        if not m:
            raise ValueError(f"cannot parse simple type {text!r}; expected e.g. 'A3' or 'E6'")
        return cls(m.group(1).upper(), int(m.group(2)))

    def __str__(self) -> str:
        return f"{self.series}{self.rank}"

    @property
    def simply_laced(self) -> bool:
        return self.series in "ADE"


def _half(*xs) -> Vector:
    return tuple(Fraction(x, 2) for x in xs)


def _e(n: int, *terms: tuple[int, int]) -> Vector:
    """Sparse constructor: ``_e(4, (1, 1), (2, -1))`` is ``e_1 - e_2`` in R^4."""
    v = [Fraction(0)] * n
    for i, c in terms:
        v[i - 1] += c
    return tuple(v)


def _simple_roots(t: SimpleType) -> tuple[int, list[Vector], Vector]:
    s, n = t.series, t.rank
    if s == "A":
        N = n + 1
        simple = [_e(N, (i, 1), (i + 1, -1)) for i in range(1, n + 1)]
        return N, simple, _e(N, (1, 1), (N, -1))
    if s == "B":
        simple = [_e(n, (i, 1), (i + 1, -1)) for i in range(1, n)] + [_e(n, (n, 1))]
        return n, simple, _e(n, (1, 1), (2, 1))
    if s == "C":
        simple = [_e(n, (i, 1), (i + 1, -1)) for i in range(1, n)] + [_e(n, (n, 2))]
        return n, simple, _e(n, (1, 2))
    if s == "D":
        simple = [_e(n, (i, 1), (i + 1, -1)) for i in range(1, n)]
        simple.append(_e(n, (n - 1, 1), (n, 1)))
        return n, simple, _e(n, (1, 1), (2, 1))
    if s == "E":
        e8 = [_half(1, -1, -1, -1, -1, -1, -1, 1), _e(8, (1, 1), (2, 1))]
        e8 += [_e(8, (i - 1, 1), (i - 2, -1)) for i in range(3, 9)]
        highest = {
            6: _half(1, 1, 1, 1, 1, -1, -1, 1),
            7: _e(8, (7, -1), (8, 1)),
            8: _e(8, (7, 1), (8, 1)),
        }[n]
        return 8, e8[:n], highest
    if s == "F":
        simple = [_e(4, (2, 1), (3, -1)), _e(4, (3, 1), (4, -1)), _e(4, (4, 1)),
                  _half(1, -1, -1, -1)]
        return 4, simple, _e(4, (1, 1), (2, 1))
    # G2 sits in the sum-zero plane of R^3
    simple = [_e(3, (1, 1), (2, -1)), _e(3, (1, -2), (2, 1), (3, 1))]
    return 3, simple, _e(3, (1, -1), (2, -1), (3, 2))


@dataclass(frozen=True, eq=False)
class RootSystem:
    type: SimpleType
    ambient_dim: int
    simple_roots: tuple[Vector, ...]
    highest_root: Vector
    marks: tuple[int, ...]
    fundamental_coweights: tuple[Vector, ...]
    coroots: tuple[Vector, ...]
    fundamental_weights: tuple[Vector, ...]
    comarks: tuple[int, ...]
    dual_coxeter: int
    center_order: int
    special_root_indices: tuple[int, ...]
    inner_product_scale: Fraction

    @property
    def rank(self) -> int:
        return len(self.simple_roots)

    def root(self, i: int) -> Vector:
        """``alpha_i`` for ``1 <= i <= l``; ``alpha_0 = -highest_root``."""
        if i == 0:
            return rq.neg(self.highest_root)
        if not 1 <= i <= self.rank:
            raise IndexError(f"root index {i} out of range 0..{self.rank} for {self.type}")
        return self.simple_roots[i - 1]

    def coroot(self, i: int) -> Vector:
        return coroot_of(self.root(i))

    def coweight(self, i: int) -> Vector:
        """``lambda_i^vee``, 1-based; index 0 gives the zero vector."""
        if i == 0:
            return rq.zero(self.ambient_dim)
        return self.fundamental_coweights[i - 1]

    @cached_property
    def extended_roots(self) -> tuple[Vector, ...]:
        return tuple(self.root(i) for i in range(self.rank + 1))

    @cached_property
    def extended_cartan(self) -> tuple[tuple[int, ...], ...]:
        """``A[i][j] = <alpha_i, alpha_j^vee>`` over the extended nodes 0..l."""
        rts = self.extended_roots
        return tuple(tuple(int(rq.dot(a, coroot_of(b))) for b in rts) for a in rts)

    @cached_property
    def _span_gram_inverse(self):
        G = [[rq.dot(a, b) for b in self.simple_roots] for a in self.simple_roots]
        return rq.inverse(G)

    @cached_property
    def _span_normals(self) -> tuple[Vector, ...]:
        # basis of the orthogonal complement of the root span
        return tuple(rq.solve(self.simple_roots, rq.zero(len(self.simple_roots)))[1])

    def root_space_coordinates(self, v: Vector) -> Vector:
        """Coefficients of the orthogonal projection of ``v`` on the simple roots."""
        rhs = [rq.dot(a, v) for a in self.simple_roots]
        return rq.matvec(self._span_gram_inverse, tuple(rhs))

    def to_json(self) -> dict:
        return {
            "type": str(self.type),
            "simple_roots": [rq.format_vector(a) for a in self.simple_roots],
            "highest_root": rq.format_vector(self.highest_root),
            "marks": list(self.marks),
            "fundamental_coweights": [rq.format_vector(c) for c in self.fundamental_coweights],
            "dual_coxeter": self.dual_coxeter,
            "center_order": self.center_order,
        }


def coroot_of(alpha: Vector) -> Vector:
    return rq.scale(Fraction(2) / rq.dot(alpha, alpha), alpha)


def _dual_basis(basis: list[Vector]) -> list[Vector]:
    """Vectors in span(basis) with ``<basis_i, out_j> = delta_ij``."""
    G = [[rq.dot(a, b) for b in basis] for a in basis]
    Ginv = rq.inverse(G)
    return [rq.combination(Ginv[j], basis) for j in range(len(basis))]


def _coefficients(v: Vector, basis: list[Vector]) -> Vector:
    """Exact coefficients of ``v`` in ``basis`` (must lie in the span)."""
    A = [list(col) for col in zip(*basis)]
    c = rq.solve_unique(A, v)
    if c is None:
        raise ValueError("vector is not in the span of the basis")
    return c


def _as_int(q: Fraction, what: str) -> int:
    if q.denominator != 1:
        raise ArithmeticError(f"{what} = {q} is not an integer")
    return q.numerator


@lru_cache(maxsize=None)
def _build(t: SimpleType) -> RootSystem:
    N, simple, highest = _simple_roots(t)
    coroots = [coroot_of(a) for a in simple]
    coweights = _dual_basis(simple)
    weights = _dual_basis(coroots)
    marks = tuple(_as_int(m, "mark") for m in _coefficients(highest, simple))
    comarks = tuple(_as_int(m, "comark") for m in _coefficients(coroot_of(highest), coroots))
    cartan = [[rq.dot(coroots[i], simple[j]) for j in range(len(simple))]
              for i in range(len(simple))]
    # [P^vee : Q^vee] = |det Cartan|
    center = _as_int(abs(rq.determinant(cartan)), "center order")
    return RootSystem(
        type=t,
        ambient_dim=N,
        simple_roots=tuple(simple),
        highest_root=highest,
        marks=marks,
        fundamental_coweights=tuple(coweights),
        coroots=tuple(coroots),
        fundamental_weights=tuple(weights),
        comarks=comarks,
        dual_coxeter=1 + sum(comarks),
        center_order=center,
        special_root_indices=tuple(i + 1 for i, m in enumerate(marks) if m == 1),
        # highest root is long; long roots get squared length 2 in t*
        inner_product_scale=rq.dot(highest, highest) / 2,
    )


def build_root_system(t: SimpleType | str) -> RootSystem:
    """Full catalog for one simple type, e.g. ``build_root_system("E6")``."""
    if isinstance(t, str):
        t = SimpleType.parse(t)
    return _build(t)


def in_root_space(rs: RootSystem, v: Vector) -> bool:
    if len(v) != rs.ambient_dim:
        return False
    return all(rq.dot(n, v) == 0 for n in rs._span_normals)


def check_root_space(rs: RootSystem, v: Vector) -> Vector:
    """Validate that ``v`` lies in the span of the roots; never project silently."""
    if len(v) != rs.ambient_dim:
        raise ValueError(
            f"{rs.type} vectors have {rs.ambient_dim} coordinates, got {len(v)}")
    if not in_root_space(rs, v):
        raise ValueError(
            f"{rq.pretty_vector(v)} is not in the root subspace of {rs.type}"
            f"{_subspace_hint(rs)}")
    return tuple(v)


def _subspace_hint(rs: RootSystem) -> str:
    s, n = rs.type.series, rs.type.rank
    if s == "A" or s == "G":
        return " (coordinates must sum to 0)"
    if s == "E" and n == 6:
        return " (requires x6 = x7 = -x8)"
    if s == "E" and n == 7:
        return " (requires x7 = -x8)"
    return ""


@dataclass(frozen=True)
class Lattice:
    name: str
    generators: tuple[Vector, ...]


_LATTICE_NAMES = {"Q^vee": "coroots", "P^vee": "fundamental_coweights",
                  "Q": "simple_roots", "P": "fundamental_weights"}
_ALIASES = {"Q∨": "Q^vee", "P∨": "P^vee", "Qv": "Q^vee", "Pv": "P^vee",
            "coroot": "Q^vee", "coweight": "P^vee", "root": "Q", "weight": "P"}


def lattice(rs: RootSystem, name: str) -> Lattice:
    """Basis of one of the lattices ``Q^vee``, ``P^vee``, ``Q``, ``P``."""
    key = _ALIASES.get(name, name)
    if key not in _LATTICE_NAMES:
        raise ValueError(f"unknown lattice {name!r}; expected one of Q^vee, P^vee, Q, P")
    return Lattice(key, tuple(getattr(rs, _LATTICE_NAMES[key])))


def lattice_coordinates(basis: Lattice, v: Vector):
    """Coefficients of ``v`` in the lattice generators, or ``None`` off the span."""
    gens = basis.generators
    c = rq.matvec(_gram_inverse(gens), tuple(rq.dot(g, v) for g in gens))
    return c if rq.combination(c, gens) == tuple(v) else None


@lru_cache(maxsize=None)
def _gram_inverse(gens: tuple[Vector, ...]):
    return rq.inverse([[rq.dot(a, b) for b in gens] for a in gens])


def lattice_contains(basis: Lattice, v: Vector) -> bool:
    c = lattice_coordinates(basis, v)
    return c is not None and all(x.denominator == 1 for x in c)


def lattice_index(sub: Lattice, sup: Lattice) -> int:
    """Index of a full-rank sublattice ``sub`` in ``sup``."""
    rows = []
    for g in sub.generators:
        c = lattice_coordinates(sup, g)
        if c is None or any(x.denominator != 1 for x in c):
            raise ValueError(f"{sub.name} is not contained in {sup.name}")
        rows.append(c)
    return abs(_as_int(rq.determinant(rows), "index"))


def flat_map(rs: RootSystem, xi: Vector) -> Vector:
    """``xi -> <xi, ->`` under the basic inner product, as a vector of ``t*``."""
    check_root_space(rs, xi)
    return rq.scale(rs.inner_product_scale, xi)
