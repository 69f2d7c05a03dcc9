"""Reflections, Weyl words and folding of points into the fundamental alcove.

Words list reflection indices left to right and act right to left, so
``(1, 3)`` is ``s_1 s_3``.  Index 0 in a Weyl word stands for the linear
reflection in ``alpha_0 = -highest_root``; in an affine word it stands for
the affine reflection in the top wall ``<xi, highest root> = 1``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Optional, Sequence

from . import rational as rq
from .alcove import Alcove, AlcovePoint, build_alcove, to_barycentric
from .lie_data import RootSystem, check_root_space, coroot_of
from .rational import Matrix, Vector

__all__ = [
    "WeylElement", "AffineWeylElement", "reflect", "reflection_matrix",
    "evaluate_word", "identity_element", "fold_to_alcove", "fold_point",
]


@dataclass(frozen=True, eq=False)
class WeylElement:
    """Linear part of an affine Weyl element.  Equality is decided on matrices."""
    matrix: Matrix
    word: Optional[tuple[int, ...]] = None

    def __call__(self, v: Vector) -> Vector:
        return rq.matvec(self.matrix, v)

    def __mul__(self, other: "WeylElement") -> "WeylElement":
        word = None
        if self.word is not None and other.word is not None:
            word = self.word + other.word
        return WeylElement(rq.matmul(self.matrix, other.matrix), word)

    def inverse(self) -> "WeylElement":
        # reflections are orthogonal for the dot product
        word = tuple(reversed(self.word)) if self.word is not None else None
        return WeylElement(rq.transpose(self.matrix), word)

    def is_identity(self) -> bool:
        return self.matrix == rq.identity_matrix(len(self.matrix))

    def __eq__(self, other):
        if not isinstance(other, WeylElement):
            return NotImplemented
        return self.matrix == other.matrix

    def __hash__(self):
        return hash(self.matrix)


@dataclass(frozen=True, eq=False)
class AffineWeylElement:
    """``xi -> linear(xi) + translation`` with ``translation`` in the coroot lattice."""
    linear: WeylElement
    translation: Vector
    word: tuple[int, ...] = field(default=())

    def __call__(self, v: Vector) -> Vector:
        return rq.add(self.linear(v), self.translation)

    def __mul__(self, other: "AffineWeylElement") -> "AffineWeylElement":
        return AffineWeylElement(
            self.linear * other.linear,
            rq.add(self.linear(other.translation), self.translation),
            self.word + other.word,
        )

    def __eq__(self, other):
        if not isinstance(other, AffineWeylElement):
            return NotImplemented
        return self.linear == other.linear and self.translation == other.translation

    def __hash__(self):
        return hash((self.linear, self.translation))


def _check_index(rs: RootSystem, i: int) -> None:
    if not isinstance(i, int) or not 0 <= i <= rs.rank:
        raise IndexError(f"root index {i!r} out of range 0..{rs.rank} for {rs.type}")


def reflect(rs: RootSystem, i: int, xi: Vector) -> Vector:
    """``s_alpha(v) = v - (2 <alpha, v> / <alpha, alpha>) alpha`` for ``alpha = alpha_i``."""
    _check_index(rs, i)
    a = rs.root(i)
    return rq.sub(xi, rq.scale(2 * rq.dot(a, xi) / rq.dot(a, a), a))


@lru_cache(maxsize=None)
def reflection_matrix(rs: RootSystem, i: int) -> Matrix:
    _check_index(rs, i)
    n = rs.ambient_dim
    return tuple(zip(*(reflect(rs, i, rq.unit(n, k)) for k in range(n))))


def identity_element(rs: RootSystem) -> WeylElement:
    return WeylElement(rq.identity_matrix(rs.ambient_dim), ())


def evaluate_word(rs: RootSystem, word: Sequence[int]) -> WeylElement:
    """Matrix of ``s_{w[0]} s_{w[1]} ... s_{w[-1]}``; the word is kept as given."""
    word = tuple(word)
    M = rq.identity_matrix(rs.ambient_dim)
    for i in word:
        M = rq.matmul(M, reflection_matrix(rs, i))
    return WeylElement(M, word)


def _fold_steps(rs: RootSystem, x: Vector) -> tuple[Vector, list[int]]:
    top = coroot_of(rs.highest_root)
    steps: list[int] = []
    while True:
        j = next((j for j, a in enumerate(rs.simple_roots, 1) if rq.dot(a, x) < 0), None)
        if j is not None:
            x = reflect(rs, j, x)
        elif rq.dot(rs.highest_root, x) > 1:
            j = 0
            x = rq.add(reflect(rs, 0, x), top)
        else:
            return x, steps
        steps.append(j)


def fold_point(alc: Alcove | RootSystem, xi: Vector) -> AlcovePoint:
    """Like :func:`fold_to_alcove` without building the witness."""
    if isinstance(alc, RootSystem):
        alc = build_alcove(alc)
    xi = check_root_space(alc.rs, rq.vec(xi))
    return to_barycentric(alc, _fold_steps(alc.rs, xi)[0])


def fold_to_alcove(alc: Alcove | RootSystem, xi: Vector) -> tuple[AlcovePoint, AffineWeylElement]:
    """Unique alcove point in the affine-Weyl orbit of ``xi``, with a witness ``g``.

    ``g(xi)`` equals the returned point.  Walls are tried in the order
    alpha_1..alpha_l, then the top wall; each step strictly reduces the
    number of affine root hyperplanes separating the point from the alcove.
    """
    if isinstance(alc, RootSystem):
        alc = build_alcove(alc)
    rs = alc.rs
    xi = check_root_space(rs, rq.vec(xi))
    x, steps = _fold_steps(rs, xi)
    # accumulate g = r_k ... r_1 column by column: each reflection is a rank-one update
    cols = [list(c) for c in rq.identity_matrix(rs.ambient_dim)]
    t = rq.zero(rs.ambient_dim)
    top = coroot_of(rs.highest_root)
    for j in steps:
        cols = [reflect(rs, j, c) for c in cols]
        t = reflect(rs, j, t)
        if j == 0:
            t = rq.add(t, top)
    linear = WeylElement(rq.transpose(tuple(cols)), tuple(reversed(steps)))
    g = AffineWeylElement(linear, t, tuple(reversed(steps)))
    return to_barycentric(alc, x), g
