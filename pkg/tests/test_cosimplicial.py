import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from twistlab.bialgebra import (FiniteGroup, amitsur_complex, bar_complex, cobar_complex, field_extension,
                                group_algebra, group_likes, twist_search_and_apply)
from twistlab.cosimplicial import (CosimplicialComplex, NondecreasingMap, commutativity_bound, differential,
                                   linking_coefficient)
from twistlab.exact import GF, Matrix

D, S = NondecreasingMap.coface, NondecreasingMap.codegeneracy


def complexes():
    out = []
    for G, p in ((FiniteGroup.cyclic(2), 3), (FiniteGroup.cyclic(3), 2), (FiniteGroup.cyclic(2), 5)):
        H = group_algebra(G, GF(p))
        out += [bar_complex(H, 4), cobar_complex(H, 4)]
    H = group_algebra(FiniteGroup.symmetric(3), GF(5))
    out += [bar_complex(H, 3), cobar_complex(H, 3)]
    out.append(amitsur_complex(field_extension(2, 2), 3))
    out.append(amitsur_complex(field_extension(3, 2), 2))
    return out


COMPLEXES = complexes()


# -- the simplex category ----------------------------------------------------------

@st.composite
def maps(draw, max_level=4):
    l = draw(st.integers(0, max_level))
    m = draw(st.integers(0, max_level))
    vals = sorted(draw(st.lists(st.integers(0, m), min_size=l + 1, max_size=l + 1)))
    return NondecreasingMap(tuple(vals), m)


def test_map_validation():
    with pytest.raises(ValueError):
        NondecreasingMap((1, 0), 2)
    with pytest.raises(ValueError):
        NondecreasingMap((0, 3), 2)


@given(maps())
@settings(max_examples=100)
def test_epi_mono_factorisation_recomposes(tau):
    degens, faces = tau.factor()
    out = NondecreasingMap.identity(tau.l)
    level = tau.l
    for x in degens:
        level -= 1
        out = S(level, x).compose(out)
    for i in faces:
        level += 1
        out = D(level, i).compose(out)
    assert out == tau


@pytest.mark.parametrize("n", range(1, 5))
def test_simplicial_identities_on_maps(n):
    for j in range(n + 2):
        for i in range(j):
            assert D(n + 1, j).compose(D(n, i)) == D(n + 1, i).compose(D(n, j - 1))
    for j in range(n + 1):
        for i in range(j + 1):
            assert S(n, j).compose(S(n + 1, i)) == S(n, i).compose(S(n + 1, j + 1))


def test_linking_examples():
    assert linking_coefficient(D(2, 0), D(2, 1)) == 2
    assert linking_coefficient(D(1, 0), D(1, 1)) == 1
    point = NondecreasingMap((1, 1), 2)
    assert linking_coefficient(point, point) == 1


@pytest.mark.parametrize("k", range(1, 5))
def test_linking_of_identical_images_is_image_size(k):
    tau = NondecreasingMap(tuple(range(k)), k)
    assert linking_coefficient(tau, tau) == k


@pytest.mark.parametrize("n", range(1, 6))
def test_linking_of_adjacent_cofaces(n):
    for i in range(n):
        assert linking_coefficient(D(n, i), D(n, i + 1)) == n


@given(maps(), st.data())
@settings(max_examples=60)
def test_linking_is_symmetric(tau, data):
    vals = sorted(data.draw(st.lists(st.integers(0, tau.m), min_size=1, max_size=4)))
    pi = NondecreasingMap(tuple(vals), tau.m)
    assert linking_coefficient(tau, pi) == linking_coefficient(pi, tau) >= 0


def test_commutativity_bound_monotone():
    assert [commutativity_bound(n) for n in range(1, 6)] == sorted(commutativity_bound(n) for n in range(1, 6))


# -- complexes ---------------------------------------------------------------------

@pytest.mark.parametrize("C", COMPLEXES, ids=repr)
def test_cosimplicial_identities_hold(C):
    assert C.check_identities() == []


@pytest.mark.parametrize("C", COMPLEXES, ids=repr)
def test_differential_squares_to_zero(C):
    for n in range(C.top - 1):
        dd = differential(C, n + 1) @ differential(C, n)
        assert dd.is_zero(), (C, n)


@pytest.mark.parametrize("C", COMPLEXES[:6] + COMPLEXES[-2:], ids=repr)
def test_structure_maps_are_algebra_maps(C):
    assert C.check_homomorphisms(top=3) == []


def test_cobar_level_zero_coface_is_constant_inclusion():
    C = cobar_complex(group_algebra(FiniteGroup.cyclic(3), GF(2)), 2)
    for i in (0, 1):
        assert C.coface(1, i).data.reshape(-1).tolist() == [1, 1, 1]
    assert C.coface(2, 1) @ C.coface(1, 0) == C.coface(2, 0) @ C.coface(1, 0)


def test_commutative_complexes_are_commutative():
    for C in (bar_complex(group_algebra(FiniteGroup.cyclic(2), GF(3)), 3), amitsur_complex(field_extension(2, 2), 2)):
        assert C.is_n_commutative(4).ok


def test_bar_complex_of_s3_is_one_commutative():
    C = bar_complex(group_algebra(FiniteGroup.symmetric(3), GF(5)), 2)
    assert C.is_n_commutative(1).ok


def test_constant_noncommutative_complex_fails_with_witness():
    A = group_algebra(FiniteGroup.symmetric(3), GF(5)).algebra
    C = CosimplicialComplex.constant(A, 2)
    v = C.is_n_commutative(1)
    assert not v.ok
    tau, pi, i, j = v.counterexample
    a, b = C.map_element(C.E(tau), A.basis(i)), C.map_element(C.E(pi), A.basis(j))
    assert not A.equal(A.multiply(a, b), A.multiply(b, a))


def test_lower_levels_of_n_commutative_complex_are_commutative():
    for C in COMPLEXES:
        for n in (1, 2):
            if C.is_n_commutative(n, max_level=2).ok:
                for m in range(n):
                    assert C.levels[m].is_commutative


def test_json_round_trip():
    C = bar_complex(group_algebra(FiniteGroup.cyclic(2), GF(3)), 2)
    back = CosimplicialComplex.from_json(C.to_json())
    assert [lv.dim for lv in back.levels] == [lv.dim for lv in C.levels]
    for key, m in C.cofaces.items():
        assert back.coface(*key) == m


# -- nonabelian cocycles -----------------------------------------------------------

@pytest.mark.parametrize("G,p", [(FiniteGroup.cyclic(2), 2), (FiniteGroup.cyclic(2), 3), (FiniteGroup.cyclic(2), 5),
                                 (FiniteGroup.cyclic(3), 2), (FiniteGroup.cyclic(3), 3), (FiniteGroup.cyclic(3), 5),
                                 (FiniteGroup.symmetric(3), 2)])
def test_z1_of_bar_complex_is_the_group_likes(G, p):
    H = group_algebra(G, GF(p))
    C = bar_complex(H, 2)
    A = C.levels[1]
    z1 = {tuple(int(x) for x in a) for a in A.elements() if A.is_unit(a) and C.is_zn_cocycle(a, 1)}
    likes = {tuple(int(x) for x in g) for g in group_likes(H)}
    basis = {tuple(int(x) for x in A.basis(g)) for g in range(G.order)}
    assert z1 == likes == basis


def test_identity_is_a_cocycle_and_generic_unit_is_not():
    C = bar_complex(group_algebra(FiniteGroup.cyclic(2), GF(3)), 3)
    one = C.levels[2].unit
    assert C.is_zn_cocycle(one, 2)
    A = C.levels[2]
    units = [a for a in A.elements() if A.is_unit(a)]
    cocycles = [a for a in units if C.is_zn_cocycle(a, 2)]
    assert 0 < len(cocycles) < len(units)
    with pytest.raises(ValueError):
        C.is_zn_cocycle(np.zeros(4, dtype=np.int64), 2)


def test_twist_is_a_z2_cocycle():
    H = group_algebra(FiniteGroup.cyclic(2), GF(3))
    C = bar_complex(H, 3)
    twists = twist_search_and_apply(H)
    assert len(twists) > 1
    for t in twists:
        assert C.is_zn_cocycle(t.x, 2)


def test_zn_equivalence():
    H = group_algebra(FiniteGroup.cyclic(2), GF(5))
    C = bar_complex(H, 3)
    one = C.levels[2].unit
    ok, c = C.zn_equivalent(one, one, 2)
    assert ok
    # the bicharacter in the idempotent basis: values 1, 1, 1, -1 on (e_i, e_j)
    inv2 = pow(2, -1, 5)
    e = [np.array([inv2, inv2]), np.array([inv2, -inv2 % 5])]
    x = sum(v * np.kron(e[i], e[j]) for (i, j), v in zip(itertools.product((0, 1), repeat=2), (1, 1, 1, -1)))
    x = x % 5
    ok, c = C.zn_equivalent(one, x, 2)
    assert ok
    # c must be a unit with value 1 on e_0 and a square root of -1 on e_1
    c0, c1 = (int(c[0] + c[1]) % 5, int(c[0] - c[1]) % 5)
    assert c0 == 1 and c1 * c1 % 5 == 4


def test_shifted_cocycle_is_equivalent():
    H = group_algebra(FiniteGroup.cyclic(2), GF(5))
    C = bar_complex(H, 3)
    A2 = C.levels[2]
    c = np.array([2, 1])  # 2 + g is a unit of F_5[Z2] that is not group-like
    evens = A2.multiply(C.map_element(C.coface(2, 0), c), C.map_element(C.coface(2, 2), c))
    odd = C.map_element(C.coface(2, 1), c)
    a = A2.unit
    b = A2.multiply(A2.inverse(odd), A2.multiply(a, evens))
    assert C.zn_related_by(a, b, c, 2)
    assert C.zn_equivalent(a, b, 2)[0]
