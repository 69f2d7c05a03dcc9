import random
from fractions import Fraction as F
from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from alcovekit import rational as rq
from alcovekit.affine_weyl import evaluate_word
from alcovekit.alcove import build_alcove, contains, from_barycentric, su_n_barycenter
from alcovekit.center import (CenterElement, act_on_point, center_affine_map, center_elements,
                              compose, cycle_notation, dynkin_automorphism, fixed_locus,
                              fixed_locus_su_n, generator, order, power, stabilizer,
                              su_n_subgroup, subgroup_generated, vertex_permutation,
                              weyl_element_for_center)
from alcovekit.lie_data import build_root_system
from alcovekit.reference import WEYL_WORDS
from alcovekit.verify import NONTRIVIAL_CENTER_TYPES

from .conftest import alcove_points

# center structure from the classification, typed independently
CENTER = {"A3": (4, [4, 2, 4]), "B3": (2, [2]), "C3": (2, [2]), "D4": (4, [2, 2, 2]),
          "D5": (4, [2, 4, 4]), "E6": (3, [3, 3]), "E7": (2, [2])}


@pytest.mark.parametrize("t", sorted(CENTER))
def test_center_orders(t):
    rs = build_root_system(t)
    size, orders = CENTER[t]
    Z = center_elements(rs)
    assert len(Z) == size == rs.center_order
    assert [order(z) for z in Z[1:]] == orders


def test_identity_and_bad_index(e6):
    assert str(CenterElement(e6, 0)) == "1"
    assert vertex_permutation(CenterElement(e6, 0)) == tuple(range(7))
    with pytest.raises(ValueError, match="special root"):
        CenterElement(e6, 2)


@pytest.mark.parametrize("t", NONTRIVIAL_CENTER_TYPES)
def test_group_laws(t):
    rs = build_root_system(t)
    Z = center_elements(rs)
    e = Z[0]
    for a, b in product(Z, Z):
        assert compose(a, b) == compose(b, a)  # centre is abelian
        for c in Z:
            assert compose(compose(a, b), c) == compose(a, compose(b, c))
    for a in Z:
        assert compose(e, a) == a
        assert any(compose(a, b) == e for b in Z)
        assert power(a, order(a)) == e


@pytest.mark.parametrize("t", ["A3", "D4", "D5", "E6", "E7"])
@settings(max_examples=25)
@given(data=st.data())
def test_action_laws(t, data):
    rs = build_root_system(t)
    xi = data.draw(alcove_points(t))
    Z = center_elements(rs)
    assert act_on_point(Z[0], xi).cartesian == xi
    a, b = data.draw(st.sampled_from(Z)), data.draw(st.sampled_from(Z))
    lhs = act_on_point(a, act_on_point(b, xi))
    assert lhs == act_on_point(compose(a, b), xi)
    # the fold agrees with the affine map xi -> w xi + lambda^vee
    assert act_on_point(a, xi).cartesian == center_affine_map(a)(xi)


@pytest.mark.parametrize("t", NONTRIVIAL_CENTER_TYPES)
def test_weyl_element_properties(t):
    rs = build_root_system(t)
    for z in center_elements(rs)[1:]:
        w = weyl_element_for_center(z)
        assert w(rs.root(0)) == rs.root(z.index)
        assert {w(r) for r in rs.extended_roots} == set(rs.extended_roots)
        assert vertex_permutation(z) == dynkin_automorphism(z)
        # z . v_0 = v_i
        assert vertex_permutation(z)[0] == z.index


def test_e6_generators_inverse(e6):
    z1, z6 = CenterElement(e6, 1), CenterElement(e6, 6)
    assert compose(z1, z6).index == 0
    assert (weyl_element_for_center(z1) * weyl_element_for_center(z6)).is_identity()


def _perm_of_word(rs, word):
    w = evaluate_word(rs, word)
    roots = rs.extended_roots
    return tuple(roots.index(w(r)) for r in roots)


def test_exceptional_cycles_from_words(e6, e7):
    # permutations induced by the tabulated words, independent of folding
    assert cycle_notation(_perm_of_word(e6, WEYL_WORDS[("E6", 1)])) == "(0 1 6)(2 3 5)"
    assert cycle_notation(_perm_of_word(e6, WEYL_WORDS[("E6", 6)])) == "(0 6 1)(2 5 3)"
    assert cycle_notation(_perm_of_word(e7, WEYL_WORDS[("E7", 7)])) == "(0 7)(1 6)(3 5)"
    assert cycle_notation(vertex_permutation(CenterElement(e6, 1))) == "(0 1 6)(2 3 5)"
    assert cycle_notation(vertex_permutation(CenterElement(e7, 7))) == "(0 7)(1 6)(3 5)"


def test_cycle_notation():
    assert cycle_notation((0, 1, 2)) == "()"
    assert cycle_notation((0, 2, 1), fixed=True) == "(0)(1 2)"


@pytest.mark.parametrize("n", range(2, 13))
def test_su_n_generator_is_n_cycle(n):
    rs = build_root_system(f"A{n - 1}")
    z = CenterElement(rs, 1)
    assert vertex_permutation(z) == tuple((j + 1) % n for j in range(n))
    assert order(z) == n and generator(rs) == z


@pytest.mark.parametrize("n", [3, 5, 7])
def test_su_p_barycenter_unique_fixed_point(n):
    locus = fixed_locus(center_elements(build_root_system(f"A{n - 1}")))
    assert locus.dimension == 0
    assert locus.generators == (su_n_barycenter(n),)


def test_stabilizers(e6):
    a3 = build_root_system("A3")
    Z = center_elements(a3)
    zeta0 = rq.vec([F(1, 4), F(1, 4), F(-1, 4), F(-1, 4)])
    assert [z.index for z in stabilizer(zeta0, Z)] == [0, 2]
    assert [z.index for z in stabilizer(su_n_barycenter(4), Z)] == [0, 1, 2, 3]
    assert [z.index for z in stabilizer(build_alcove(a3).vertices[1], Z)] == [0]
    ZE = center_elements(e6)
    assert len(stabilizer(build_alcove(e6).barycenter(), ZE)) == 3
    assert len(stabilizer(build_alcove(e6).vertices[4], ZE)) == 3
    assert len(stabilizer(build_alcove(e6).vertices[2], ZE)) == 1


def test_subgroup_generated(e6):
    d4 = build_root_system("D4")
    Z = center_elements(d4)
    assert len(subgroup_generated([Z[1]])) == 2
    assert len(subgroup_generated([Z[1], Z[2]])) == 4
    assert subgroup_generated([], d4) == (Z[0],)
    with pytest.raises(ValueError):
        subgroup_generated([])


def test_su4_fixed_segment():
    locus = fixed_locus_su_n(4, 2)
    alc = build_alcove("A3")
    zeta0 = rq.vec([F(1, 4), F(1, 4), F(-1, 4), F(-1, 4)])
    zeta1 = rq.scale(F(1, 2), rq.add(alc.vertices[1], alc.vertices[3]))
    assert set(locus.generators) == {zeta0, zeta1}
    assert locus.dimension == 1
    assert locus.contains(rq.scale(F(1, 2), rq.add(zeta0, zeta1)))
    assert not locus.contains(alc.vertices[0])


@pytest.mark.parametrize("n, nu", [(4, 2), (6, 2), (6, 3), (6, 6), (8, 4), (9, 3)])
def test_closed_form_matches_generic(n, nu):
    closed = fixed_locus_su_n(n, nu)
    generic = fixed_locus(su_n_subgroup(n, nu))
    assert closed.orbits == generic.orbits
    assert closed.generators == generic.generators
    assert closed.dimension == n // nu - 1


def test_fixed_locus_grid_brute_force():
    # every barycentric grid point of SU(6) with denominator 6, checked directly
    n, nu = 6, 3
    rs = build_root_system(f"A{n - 1}")
    alc = build_alcove(rs)
    locus = fixed_locus_su_n(n, nu)
    sub = su_n_subgroup(n, nu)
    d = 6
    for parts in product(range(d + 1), repeat=n - 1):
        if sum(parts) > d:
            continue
        t = tuple(F(x, d) for x in parts + (d - sum(parts),))
        xi = from_barycentric(alc, t).cartesian
        fixed = all(act_on_point(z, xi).cartesian == xi for z in sub)
        assert fixed == locus.contains(xi)


def test_fixed_locus_rejects_bad_nu():
    with pytest.raises(ValueError):
        fixed_locus_su_n(6, 4)
    with pytest.raises(ValueError):
        su_n_subgroup(6, 5)


def test_fixed_locus_in_alcove(e7):
    locus = fixed_locus(center_elements(e7))
    alc = build_alcove(e7)
    assert locus.orbits == ((0, 7), (1, 6), (2,), (3, 5), (4,))
    for g in locus.generators:
        assert contains(alc, g) and locus.contains(g)


@pytest.mark.parametrize("t", NONTRIVIAL_CENTER_TYPES)
def test_action_laws_vertices_and_random_points(t):
    rs = build_root_system(t)
    alc = build_alcove(rs)
    rng = random.Random(t)
    points = list(alc.vertices)
    for _ in range(50):
        w = [rng.randint(0, 5) for _ in alc.vertices]
        w[rng.randrange(len(w))] += 1
        points.append(rq.combination([F(x, sum(w)) for x in w], alc.vertices))
    Z = center_elements(rs)
    for xi in points:
        moved = {z.index: act_on_point(z, xi) for z in Z}
        assert moved[0].cartesian == xi
        for a in Z:
            for b in Z:
                assert act_on_point(a, moved[b.index]) == moved[compose(a, b).index]
