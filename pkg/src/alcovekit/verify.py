"""Golden reproduction checks run by ``alcovekit verify``."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from . import rational as rq
from .affine_weyl import evaluate_word
from .alcove import build_alcove, to_barycentric, vertex_enumeration_oracle
from .center import (CenterElement, center_elements, cycle_notation, dynkin_automorphism,
                     fixed_locus_su_n, order, vertex_permutation, weyl_element_for_center)
from .lie_data import build_root_system
from .reference import (E6_HIGHEST_ROOT, E6_ROOTS, E6_VERTICES, E7_HIGHEST_ROOT, E7_ROOTS,
                        E7_VERTICES, WEYL_WORDS)

# every supported type with a nontrivial center, up to rank 8
NONTRIVIAL_CENTER_TYPES = (
    [f"A{n}" for n in range(1, 9)] + ["B2", "B3", "B4", "C3", "C4"]
    + ["D4", "D5", "D6", "E6", "E7"]
)


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""


def _table(name: str, roots, highest, vertices) -> Callable[[], str | None]:
    def check():
        rs = build_root_system(name)
        alc = build_alcove(rs)
        for j, a in roots.items():
            if rs.root(j) != a:
                return f"alpha_{j} = {rq.pretty_vector(rs.root(j))}"
        if rs.highest_root != highest:
            return "highest root differs"
        for j, v in vertices.items():
            if rq.format_vector(alc.vertices[j]) != rq.format_vector(v):
                return f"v_{j} = {rq.pretty_vector(alc.vertices[j])}"
        oracle = vertex_enumeration_oracle(alc.facets, rs.simple_roots)
        if oracle.status != "bounded" or oracle.vertices != frozenset(vertices.values()):
            return "brute-force vertex enumeration disagrees"
        return None
    return check


def _word(type_name: str, i: int) -> Callable[[], str | None]:
    def check():
        rs = build_root_system(type_name)
        w = evaluate_word(rs, WEYL_WORDS[(type_name, i)])
        if w != weyl_element_for_center(CenterElement(rs, i)):
            return "word matrix differs from the folded Weyl element"
        if w(rs.root(0)) != rs.root(i):
            return f"w(alpha_0) != alpha_{i}"
        roots = set(rs.extended_roots)
        if {w(r) for r in roots} != roots:
            return "does not permute alpha_0..alpha_l"
        return None
    return check


def _su_n_cycles() -> str | None:
    for n in range(2, 13):
        rs = build_root_system(f"A{n - 1}")
        perm = vertex_permutation(CenterElement(rs, 1))
        if perm != tuple((j + 1) % n for j in range(n)):
            return f"SU({n}) generator acts as {cycle_notation(perm)}"
    return None


def _fig_segment() -> str | None:
    locus = fixed_locus_su_n(4, 2)
    alc = build_alcove("A3")
    zeta0 = rq.vec([Fraction(1, 4), Fraction(1, 4), Fraction(-1, 4), Fraction(-1, 4)])
    zeta1 = rq.scale(Fraction(1, 2), rq.add(alc.vertices[1], alc.vertices[3]))
    if set(locus.generators) != {zeta0, zeta1}:
        return "fixed-locus generators differ from the edge barycenters"
    if to_barycentric(alc, zeta0).barycentric != (Fraction(1, 2), 0, Fraction(1, 2), 0):
        return "zeta_0 barycentric coordinates"
    return None


def _coherence() -> str | None:
    for t in NONTRIVIAL_CENTER_TYPES:
        rs = build_root_system(t)
        for z in center_elements(rs)[1:]:
            if vertex_permutation(z) != dynkin_automorphism(z):
                return f"{t}, {z}: vertex and Dynkin permutations differ"
    return None


def _exceptional_cycles() -> str | None:
    e6 = CenterElement(build_root_system("E6"), 1)
    e7 = CenterElement(build_root_system("E7"), 7)
    if cycle_notation(vertex_permutation(e6)) != "(0 1 6)(2 3 5)" or order(e6) != 3:
        return f"E6: {cycle_notation(vertex_permutation(e6))}"
    if cycle_notation(vertex_permutation(e7)) != "(0 7)(1 6)(3 5)" or order(e7) != 2:
        return f"E7: {cycle_notation(vertex_permutation(e7))}"
    return None


CHECKS: list[tuple[str, Callable[[], str | None]]] = [
    ("E6 alcove table", _table("E6", E6_ROOTS, E6_HIGHEST_ROOT, E6_VERTICES)),
    ("E7 alcove table", _table("E7", E7_ROOTS, E7_HIGHEST_ROOT, E7_VERTICES)),
    ("E6 word w_1", _word("E6", 1)),
    ("E6 word w_6", _word("E6", 6)),
    ("E7 word w_7", _word("E7", 7)),
    ("E6/E7 vertex permutations", _exceptional_cycles),
    ("SU(n) n-cycle, n <= 12", _su_n_cycles),
    ("SU(4) Z/2 fixed segment", _fig_segment),
    ("vertex/Dynkin permutation coherence", _coherence),
]


def run_checks() -> list[CheckResult]:
    results = []
    for name, fn in CHECKS:
        try:
            err = fn()
        except Exception as exc:  # a crash is a failed check, not an abort
            err = f"{type(exc).__name__}: {exc}"
        results.append(CheckResult(name, err is None, err or ""))
    return results
