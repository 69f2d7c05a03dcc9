"""Exact rational vectors and small dense linear algebra over ``Fraction``.

Vectors are plain tuples of :class:`fractions.Fraction`; matrices are tuples
of row tuples.  Nothing here ever touches a float.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Iterable, Optional, Sequence

Vector = tuple[Fraction, ...]
Matrix = tuple[Vector, ...]


def vec(xs: Iterable) -> Vector:
    """Coerce an iterable of ints/Fractions/strings into a Vector."""
    out = []
    for x in xs:
        if isinstance(x, float):
            raise TypeError("floats are not accepted; use Fraction or 'a/b' strings")
        out.append(Fraction(x))
    return tuple(out)


def zero(n: int) -> Vector:
    return (Fraction(0),) * n


def unit(n: int, i: int) -> Vector:
    return tuple(Fraction(int(j == i)) for j in range(n))


def dot(u: Sequence[Fraction], v: Sequence[Fraction]) -> Fraction:
    if len(u) != len(v):
        raise ValueError(f"dimension mismatch: {len(u)} vs {len(v)}")
    # roots and coweights are sparse; skipping zeros is the hot path
    return sum((a * b for a, b in zip(u, v) if a and b), Fraction(0))


def add(u: Vector, v: Vector) -> Vector:
    if len(u) != len(v):
        raise ValueError(f"dimension mismatch: {len(u)} vs {len(v)}")
    return tuple(a + b for a, b in zip(u, v))


def sub(u: Vector, v: Vector) -> Vector:
    if len(u) != len(v):
        raise ValueError(f"dimension mismatch: {len(u)} vs {len(v)}")
    return tuple(a - b for a, b in zip(u, v))


def scale(c, v: Vector) -> Vector:
    c = Fraction(c)
    return tuple(c * a for a in v)


def neg(v: Vector) -> Vector:
    return tuple(-a for a in v)


def combination(coeffs: Sequence, vectors: Sequence[Vector]) -> Vector:
    """Return ``sum(c_i * v_i)``; ``vectors`` must be non-empty."""
    n = len(vectors[0])
    acc = [Fraction(0)] * n
    for c, v in zip(coeffs, vectors, strict=True):
        if c:
            for k in range(n):
                acc[k] += c * v[k]
    return tuple(acc)


def is_zero(v: Sequence[Fraction]) -> bool:
    return all(a == 0 for a in v)


def common_denominator(xs: Iterable[Fraction]) -> int:
    return lcm(1, *(Fraction(x).denominator for x in xs))


# -- matrices ---------------------------------------------------------------

def identity_matrix(n: int) -> Matrix:
    return tuple(unit(n, i) for i in range(n))


def matmul(A: Matrix, B: Matrix) -> Matrix:
    cols = list(zip(*B))
    return tuple(tuple(dot(row, col) for col in cols) for row in A)


def matvec(A: Matrix, v: Vector) -> Vector:
    return tuple(dot(row, v) for row in A)


def transpose(A: Matrix) -> Matrix:
    return tuple(zip(*A))


def row_reduce(rows: Sequence[Sequence]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form.  Returns ``(rref, pivot_columns)``."""
    M = [[Fraction(x) for x in r] for r in rows]
    if not M:
        return M, []
    ncols = len(M[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(M)) if M[i][c] != 0), None)
        if pivot is None:
            continue
        M[r], M[pivot] = M[pivot], M[r]
        p = M[r][c]
        M[r] = [x / p for x in M[r]]
        for i in range(len(M)):
            if i != r and M[i][c] != 0:
                f = M[i][c]
                M[i] = [a - f * b for a, b in zip(M[i], M[r])]
        pivots.append(c)
        r += 1
        if r == len(M):
            break
    return M, pivots


def rank(rows: Sequence[Sequence]) -> int:
    return len(row_reduce(rows)[1])


def solve(A: Sequence[Sequence], b: Sequence) -> Optional[tuple[Vector, list[Vector]]]:
    """Solve ``A x = b`` exactly.

    Returns ``(particular, nullspace_basis)`` or ``None`` when the system is
    inconsistent.  The particular solution has zeros in the free variables.
    """
    if not A:
        return None if any(Fraction(x) != 0 for x in b) else ((), [])
    n = len(A[0])
    aug = [list(row) + [bi] for row, bi in zip(A, b, strict=True)]
    R, pivots = row_reduce(aug)
    if n in pivots:
        return None
    x = [Fraction(0)] * n
    for i, c in enumerate(pivots):
        x[c] = R[i][n]
    free = [c for c in range(n) if c not in pivots]
    null = []
    for f in free:
        v = [Fraction(0)] * n
        v[f] = Fraction(1)
        for i, c in enumerate(pivots):
            v[c] = -R[i][f]
        null.append(tuple(v))
    return tuple(x), null


def solve_unique(A: Sequence[Sequence], b: Sequence) -> Optional[Vector]:
    """Unique solution of ``A x = b``, or ``None`` if none or not unique."""
    res = solve(A, b)
    if res is None or res[1]:
        return None
    return res[0]


def determinant(A: Sequence[Sequence]) -> Fraction:
    M = [[Fraction(x) for x in r] for r in A]
    n = len(M)
    det = Fraction(1)
    for c in range(n):
        pivot = next((i for i in range(c, n) if M[i][c] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != c:
            M[c], M[pivot] = M[pivot], M[c]
            det = -det
        p = M[c][c]
        det *= p
        for i in range(c + 1, n):
            if M[i][c] != 0:
                f = M[i][c] / p
                M[i] = [a - f * b for a, b in zip(M[i], M[c])]
    return det


def inverse(A: Sequence[Sequence]) -> Matrix:
    n = len(A)
    aug = [list(row) + list(unit(n, i)) for i, row in enumerate(A)]
    R, pivots = row_reduce(aug)
    if pivots[:n] != list(range(n)):
        raise ValueError("singular matrix")
    return tuple(tuple(r[n:]) for r in R)


# -- wire format --------------------------------------------------------------

def format_rational(q) -> str:
    """``Fraction(-2, 3) -> '-2/3'``, ``Fraction(1) -> '1'``."""
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def parse_rational(s: str) -> Fraction:
    s = s.strip()
    try:
        if "." in s or "e" in s.lower():
            raise ValueError
        return Fraction(s)
    except (ValueError, ZeroDivisionError):
        raise ValueError(f"malformed rational {s!r}; expected 'a' or 'a/b'") from None


def format_vector(v: Sequence) -> list[str]:
    return [format_rational(x) for x in v]


def parse_vector(s: str | Sequence[str]) -> Vector:
    """Parse ``"a/b,c/d,..."`` (or a list of rational strings)."""
    parts = s.split(",") if isinstance(s, str) else list(s)
    if not parts or any(not str(p).strip() for p in parts):
        raise ValueError(f"malformed vector {s!r}")
    return tuple(parse_rational(str(p)) for p in parts)


def pretty_vector(v: Sequence) -> str:
    return "(" + ", ".join(format_vector(v)) + ")"
