"""Level-k prequantization criteria and component counts for PU(p) moduli spaces.

Everything reduces to lattice arithmetic:

* a conjugacy class ``G . exp(xi)`` is prequantizable at level ``k`` iff
  ``(k xi)^flat`` is a weight; for SU(n) that is ``k xi`` in ``P^vee``;
* the double of PU(n) needs ``k`` to be a multiple of ``n``;
* components of the moduli space are indexed by ``Z / (Z_D1 ... Z_Ds)``.

Whether 1 is a regular value of the moment map is not decided here; every
report carries that caveat.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from math import lcm, prod
from typing import Optional, Sequence

from . import rational as rq
from .affine_weyl import fold_to_alcove
from .alcove import AlcovePoint, build_alcove, su_n_barycenter
from .center import CenterElement, center_elements, stabilizer, subgroup_generated
from .lie_data import RootSystem, build_root_system, flat_map, lattice, lattice_contains
from .rational import Vector

__all__ = [
    "ScopeError", "ClassLabel", "ModuliQuery", "ClassVerdict", "PrequantReport",
    "class_min_level", "class_admits_level", "double_min_level", "theorem_obs_check",
    "minimal_level", "gamma_order", "component_count", "is_prime", "barycenter_class",
    "CAVEAT",
]

CAVEAT = "assumes 1 is a regular value of the moment map"


class ScopeError(ValueError):
    """Query outside the cases the criteria cover (p = 2, composite p, other G/Z)."""


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def _weight_coordinates(rs: RootSystem, xi: Vector) -> Vector:
    # coefficients of xi^flat in the fundamental weights: <xi^flat, alpha_j^vee>
    f = flat_map(rs, xi)
    return tuple(rq.dot(f, c) for c in rs.coroots)


def class_min_level(rs: RootSystem, xi: AlcovePoint | Vector) -> int:
    """Smallest ``k >= 1`` with ``(k xi)^flat`` in the weight lattice.

    The admissible levels are exactly the multiples of the returned value.
    """
    x = xi.cartesian if isinstance(xi, AlcovePoint) else rq.vec(xi)
    return rq.common_denominator(_weight_coordinates(rs, x))


def class_admits_level(rs: RootSystem, xi: AlcovePoint | Vector, k: int) -> bool:
    """Direct lattice test ``(k xi)^flat in P`` (no minimal-level shortcut)."""
    x = xi.cartesian if isinstance(xi, AlcovePoint) else rq.vec(xi)
    return lattice_contains(lattice(rs, "P"), flat_map(rs, rq.scale(k, x)))


def double_min_level(group: str, n: int) -> int:
    """``l_0`` for the double: ``n`` for ``PU(n)``, 1 for simply connected ``SU(n)``."""
    g = group.upper().replace("(N)", "")
    if g in ("PU", "PSU"):
        if n < 2:
            raise ValueError("n must be at least 2")
        return n
    if g in ("SU", "SIMPLY_CONNECTED", "SIMPLY-CONNECTED"):
        return 1
    raise ScopeError(f"l_0 for {group}({n}) is not tabulated; only PU(n) and "
                     "simply connected groups are supported")


@dataclass(frozen=True)
class ClassLabel:
    """A conjugacy class ``G . exp(xi)`` of the simply connected group, ``xi`` in the alcove."""
    rs: RootSystem
    xi: AlcovePoint

    @classmethod
    def from_point(cls, rs: RootSystem, point) -> "ClassLabel":
        # any lift is accepted; folding picks the alcove representative
        return cls(rs, fold_to_alcove(build_alcove(rs), rq.vec(point))[0])


def _check_prime(p: int) -> None:
    if not isinstance(p, int) or not is_prime(p):
        raise ScopeError(f"p = {p} is not prime; the PU(p) criteria need an odd prime p")
    if p == 2:
        raise ScopeError("p = 2 (PU(2) = SO(3)) is outside the PU(p) criteria, which need p > 2")


@dataclass(frozen=True)
class ModuliQuery:
    """``M_PU(p)(Sigma; C_1..C_s)`` with classes given by SU(p) lifts."""
    p: int
    genus: int
    classes: tuple[ClassLabel, ...] = ()
    level: Optional[int] = None

    def __post_init__(self):
        _check_prime(self.p)
        if not isinstance(self.genus, int) or self.genus < 0:
            raise ValueError(f"genus must be a non-negative integer, got {self.genus!r}")
        if self.level is not None and (not isinstance(self.level, int) or self.level < 1):
            raise ValueError(f"level must be a positive integer, got {self.level!r}")
        object.__setattr__(self, "classes", tuple(self.classes))
        rs = self.root_system
        for c in self.classes:
            if c.rs is not rs:
                raise ValueError(f"class lives in {c.rs.type}, expected {rs.type}")

    @classmethod
    def from_points(cls, p: int, genus: int, points: Sequence = (), level: Optional[int] = None):
        _check_prime(p)
        rs = build_root_system(f"A{p - 1}")
        return cls(p, genus, tuple(ClassLabel.from_point(rs, x) for x in points), level)

    @property
    def root_system(self) -> RootSystem:
        return build_root_system(f"A{self.p - 1}")

    def with_level(self, k: Optional[int]) -> "ModuliQuery":
        return ModuliQuery(self.p, self.genus, self.classes, k)


@dataclass(frozen=True)
class ClassVerdict:
    xi: Vector
    min_level: int
    stabilizer_order: int
    passes: Optional[bool] = None


@dataclass(frozen=True)
class PrequantReport:
    p: int
    genus: int
    classes: tuple[ClassVerdict, ...]
    double_level: int
    k_min: int
    components: int
    gamma_order: int
    level: Optional[int] = None
    condition_i: Optional[bool] = None
    condition_ii: Optional[bool] = None
    caveat: str = field(default=CAVEAT)

    @property
    def prequantizable(self) -> Optional[bool]:
        if self.level is None:
            return None
        return bool(self.condition_i and self.condition_ii)

    def to_json(self) -> dict:
        out: dict = {"p": self.p, "genus": self.genus}
        if self.level is not None:
            out["k"] = self.level
        out["k_min"] = self.k_min
        cond_i: dict = {"required_multiple": self.double_level}
        if self.level is not None:
            cond_i["pass"] = self.condition_i
        out["condition_i"] = cond_i
        classes = []
        for c in self.classes:
            entry = {"xi": rq.format_vector(c.xi), "min_level": c.min_level,
                     "stabilizer_order": c.stabilizer_order}
            if c.passes is not None:
                entry["pass"] = c.passes
            classes.append(entry)
        out["classes"] = classes
        if self.level is not None:
            out["condition_ii"] = {"pass": self.condition_ii}
            out["prequantizable"] = self.prequantizable
        out["components"] = self.components
        out["gamma_order"] = self.gamma_order
        out["caveat"] = self.caveat
        return out


def minimal_level(q: ModuliQuery) -> int:
    """lcm of ``p`` (when the genus is positive) and every per-class minimal level."""
    rs = q.root_system
    double = double_min_level("PU", q.p) if q.genus >= 1 else 1
    return lcm(double, *(class_min_level(rs, c.xi) for c in q.classes))


def gamma_order(subgroup: Sequence[CenterElement],
                stabilizers: Sequence[Sequence[CenterElement]]) -> int:
    """``|Gamma|`` for tuples of stabilizer elements with trivial product."""
    if not stabilizers:
        return 1
    generated = subgroup_generated([z for s in stabilizers for z in s], subgroup[0].rs)
    total = prod(len(s) for s in stabilizers)
    if total % len(generated):
        raise ArithmeticError("stabilizer product does not divide")
    return total // len(generated)


@lru_cache(maxsize=4096)
def _stabilizer_cached(subgroup: tuple[CenterElement, ...], x: Vector) -> tuple[CenterElement, ...]:
    return stabilizer(x, subgroup)


def _stabilizers(subgroup, classes) -> list[tuple[CenterElement, ...]]:
    out = []
    for c in classes:
        x = c.xi if isinstance(c, ClassLabel) else c
        x = x.cartesian if isinstance(x, AlcovePoint) else rq.vec(x)
        out.append(_stabilizer_cached(tuple(subgroup), x))
    return out


def _count(subgroup, stabs) -> int:
    generated = subgroup_generated([z for s in stabs for z in s], subgroup[0].rs)
    return len(subgroup) // len(generated)


def component_count(subgroup: Sequence[CenterElement], genus: int,
                    classes: Sequence[ClassLabel | AlcovePoint | Vector]) -> int:
    """Number of components, ``|Z| / |Z_D1 ... Z_Ds|``; the genus does not enter."""
    if genus < 0:
        raise ValueError("genus must be non-negative")
    return _count(subgroup, _stabilizers(subgroup, classes))


def theorem_obs_check(q: ModuliQuery) -> PrequantReport:
    """Evaluate both level conditions for a PU(p) query.

    (i) positive genus forces ``p | k``; (ii) every class must satisfy
    ``k xi in P^vee``.  Without a level only ``k_min`` is reported.
    """
    rs = q.root_system
    Z = center_elements(rs)
    stabs = _stabilizers(Z, q.classes)
    double = double_min_level("PU", q.p) if q.genus >= 1 else 1
    k = q.level
    verdicts = []
    for c, s in zip(q.classes, stabs):
        ok = None if k is None else class_admits_level(rs, c.xi, k)
        verdicts.append(ClassVerdict(c.xi.cartesian, class_min_level(rs, c.xi), len(s), ok))
    cond_i = cond_ii = None
    if k is not None:
        cond_i = q.genus == 0 or k % q.p == 0
        cond_ii = all(v.passes for v in verdicts)
    return PrequantReport(
        p=q.p,
        genus=q.genus,
        classes=tuple(verdicts),
        double_level=double,
        k_min=minimal_level(q),
        components=_count(Z, stabs),
        gamma_order=gamma_order(Z, stabs),
        level=k,
        condition_i=cond_i,
        condition_ii=cond_ii,
    )


def barycenter_class(p: int) -> ClassLabel:
    """The class ``D_*`` of the alcove barycenter, the unique centre-invariant class."""
    _check_prime(p)
    rs = build_root_system(f"A{p - 1}")
    return ClassLabel.from_point(rs, su_n_barycenter(p))

