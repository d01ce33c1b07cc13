import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from twistlab.algebra import TooLargeError
from twistlab.bialgebra import (AbelianGroup, BialgebraAxiomError, FinBialgebra, FiniteGroup, LieAlgebraDatum,
                                Wedge, amitsur_complex, bar_complex, cobar_complex, field_extension,
                                first_approx_cone_check, group_algebra, group_likes, k0_shadow,
                                primitive_elements, primitives_closed_under_commutator, schouten_bracket,
                                small_groups, sweedler_cohomology, tangent_cohomology, truncated_polynomial,
                                twist_search_and_apply, unit_cohomology)
from twistlab.bialgebra.cohomology import NotReducedError
from twistlab.exact import GF

from oracles import cyclic_group_cohomology, cyclic_table, group_cohomology_trivial

Z = FiniteGroup.cyclic


def F(G, p):
    return group_algebra(G, GF(p))


# -- bialgebras ----------------------------------------------------------------------

@pytest.mark.parametrize("G", small_groups(6), ids=lambda G: G.name)
@pytest.mark.parametrize("p", [2, 3, 5])
def test_group_algebras_are_bialgebras(G, p):
    assert F(G, p).check_axioms() == []


def test_truncated_polynomial_bialgebra():
    for p in (2, 3, 5):
        H = truncated_polynomial(p)
        assert H.check_axioms() == []
        (x,) = primitive_elements(H)
        assert np.count_nonzero(x) == 1 and x[1] != 0
        assert primitives_closed_under_commutator(H)


def test_group_algebra_has_no_primitives():
    assert primitive_elements(F(Z(2), 3)) == []


def test_flip_of_comultiplication_matrix_rank():
    # Delta of F_3[Z2] as a 4 x 2 map has rank 2
    assert F(Z(2), 3).comul.rank() == 2


def test_broken_bialgebra_is_rejected():
    H = F(Z(2), 3)
    obj = H.to_json()
    obj["counit"] = ["1", "0"]
    with pytest.raises(BialgebraAxiomError):
        FinBialgebra.from_json(obj)
    del obj["comul"]
    with pytest.raises(ValueError, match="comul"):
        FinBialgebra.from_json(obj)


def test_json_round_trip():
    H = truncated_polynomial(3)
    back = FinBialgebra.from_json(H.to_json())
    assert back.comul == H.comul and back.counit == H.counit


def test_group_likes_counts():
    assert len(group_likes(F(Z(2), 3))) == 2
    assert len(group_likes(F(Z(3), 2))) == 3
    for G in small_groups(4):
        likes = group_likes(F(G, 3))
        assert any((g == F(G, 3).algebra.unit).all() for g in likes)
        assert len(likes) == G.order


# -- twists --------------------------------------------------------------------------

def _bicharacter(p):
    inv2 = pow(2, -1, p)
    e = [np.array([inv2, inv2]), np.array([inv2, -inv2 % p])]
    signs = (1, 1, 1, -1)
    x = sum(s * np.kron(e[i], e[j]) for (i, j), s in zip(itertools.product((0, 1), repeat=2), signs))
    return x % p


def test_twist_search_contains_trivial_and_bicharacter():
    H = F(Z(2), 5)
    twists = twist_search_and_apply(H)
    xs = {tuple(int(v) for v in t.x) for t in twists}
    assert (1, 0, 0, 0) in xs
    assert tuple(int(v) for v in _bicharacter(5)) in xs
    trivial = next(t for t in twists if tuple(int(v) for v in t.x) == (1, 0, 0, 0))
    assert trivial.bialgebra.comul == H.comul


@pytest.mark.parametrize("G,p", [(Z(2), 3), (Z(2), 5), (Z(3), 2)])
def test_twisted_bialgebras_satisfy_axioms(G, p):
    for t in twist_search_and_apply(F(G, p)):
        assert t.bialgebra.check_axioms() == []


# -- tangent cohomology --------------------------------------------------------------

def test_tangent_cohomology_of_amitsur_f4():
    C = amitsur_complex(field_extension(2, 2), 3)
    assert tangent_cohomology(C, 1) == 0


def test_tangent_cohomology_of_cobar_counts_primitives():
    # H^1 of the cobar complex of the dual is spanned by the primitive elements
    H = truncated_polynomial(3)
    C = bar_complex(H, 2)
    assert tangent_cohomology(C, 1) == len(primitive_elements(H))


# -- Sweedler cohomology --------------------------------------------------------------

def test_sweedler_examples():
    assert str(sweedler_cohomology(Z(2), 3, 1)) == "Z/2"
    assert str(sweedler_cohomology(Z(2), 3, 2)) == "Z/2"
    for G in small_groups(6):
        assert sweedler_cohomology(G, 5, 0).invariants == (4,)


@pytest.mark.parametrize("k", range(1, 7))
@pytest.mark.parametrize("p", [3, 5, 7])
def test_sweedler_matches_cyclic_closed_form(k, p):
    for n in range(4):
        assert sweedler_cohomology(Z(k), p, n).invariants == cyclic_group_cohomology(k, p - 1, n)


@pytest.mark.parametrize("G", small_groups(4), ids=lambda G: G.name)
def test_sweedler_matches_bar_resolution_oracle(G):
    table = [list(r) for r in G.table]
    for p in (3, 5):
        for n in range(3):
            assert sweedler_cohomology(G, p, n).invariants == group_cohomology_trivial(table, p - 1, n)


def test_sweedler_rejects_large_groups():
    with pytest.raises(TooLargeError):
        sweedler_cohomology(Z(9), 3, 1)


def test_abelian_group_normal_form():
    assert AbelianGroup.from_cyclic([2, 3]).invariants == (6,)
    assert AbelianGroup.from_cyclic([2, 4, 1]).invariants == (2, 4)
    assert AbelianGroup.from_cyclic([]).is_trivial


# -- unit cohomology -----------------------------------------------------------------

@pytest.mark.parametrize("G,p", [(Z(2), 3), (Z(3), 2), (Z(2), 5), (Z(2).product(Z(2)), 3), (Z(4), 3)])
def test_unit_cohomology_of_cobar_equals_sweedler(G, p):
    C = cobar_complex(F(G, p), 3)
    for n in (0, 1, 2):
        assert unit_cohomology(C, n).group == sweedler_cohomology(G, p, n)


@pytest.mark.parametrize("q,m", [(2, 2), (3, 2), (2, 3)])
def test_amitsur_cohomology_is_trivial(q, m):
    C = amitsur_complex(field_extension(q, m), 3)
    for n in (1, 2):
        assert unit_cohomology(C, n).group.is_trivial


def test_amitsur_h0_is_base_units():
    # h^0 = ker of d^0/d^1 on L^*, i.e. the base field units
    C = amitsur_complex(field_extension(3, 2), 2)
    assert unit_cohomology(C, 0).group.invariants == (2,)


@pytest.mark.parametrize("C", [cobar_complex(F(Z(2), 3), 3), cobar_complex(F(Z(3), 2), 3),
                               amitsur_complex(field_extension(2, 2), 3), amitsur_complex(field_extension(3, 2), 2)],
                         ids=repr)
def test_split_and_enumerate_routes_agree(C):
    for n in range(C.top):
        a = unit_cohomology(C, n, method="split")
        b = unit_cohomology(C, n, method="enumerate")
        assert a.group == b.group
        assert (a.cocycles, a.coboundaries) == (b.cocycles, b.coboundaries)


def test_split_route_rejects_nilpotents():
    C = cobar_complex(truncated_polynomial(2), 2)
    with pytest.raises(NotReducedError):
        unit_cohomology(C, 1, method="split")
    assert unit_cohomology(C, 1, method="auto").details["method"] == "enumerate"


# -- the Lie bracket on Lambda g -------------------------------------------------------

E, Fv, Hh = 0, 1, 2


def test_schouten_examples():
    sl2 = LieAlgebraDatum.sl2()
    ef = Wedge.basis(E, Fv)
    assert schouten_bracket(sl2, ef, Wedge.basis(Hh)).is_zero()
    assert schouten_bracket(sl2, ef, ef) == Wedge.basis(E, Fv, Hh).scale(2)
    ab = LieAlgebraDatum.abelian(4)
    assert schouten_bracket(ab, Wedge.basis(0, 1), Wedge.basis(2, 3)).is_zero()


def test_cone_check():
    g = LieAlgebraDatum.sl2().product(LieAlgebraDatum.sl2())
    assert first_approx_cone_check(g, Wedge.basis(2, 5))
    assert first_approx_cone_check(g, Wedge.zero(2))
    assert not first_approx_cone_check(LieAlgebraDatum.sl2(), Wedge.basis(E, Fv))


def _lie_algebras():
    return [LieAlgebraDatum.sl2(), LieAlgebraDatum.abelian(3), LieAlgebraDatum.sl2().product(LieAlgebraDatum.abelian(1))]


@pytest.mark.parametrize("g", _lie_algebras(), ids=lambda g: f"dim{g.dim}")
def test_schouten_sign_symmetry_on_basis_wedges(g):
    n = g.dim
    for s, t in ((1, 1), (1, 2), (2, 1), (2, 2)):
        if s + t - 1 > n:
            continue
        for xs in itertools.combinations(range(n), s):
            for ys in itertools.combinations(range(n), t):
                a, b = Wedge.basis(*xs), Wedge.basis(*ys)
                sign = -((-1) ** ((s - 1) * (t - 1)))
                assert schouten_bracket(g, a, b) == schouten_bracket(g, b, a).scale(sign)


@given(st.lists(st.integers(-3, 3), min_size=3, max_size=3), st.lists(st.integers(-3, 3), min_size=3, max_size=3))
@settings(max_examples=40)
def test_schouten_is_bilinear(u, v):
    g = LieAlgebraDatum.sl2()
    pairs = list(itertools.combinations(range(3), 2))
    alpha = Wedge.make(2, {k: c for k, c in zip(pairs, u) if c})
    beta = Wedge.make(2, {k: c for k, c in zip(pairs, v) if c})
    gamma = Wedge.basis(0, 2)
    assert schouten_bracket(g, alpha + beta, gamma) == schouten_bracket(g, alpha, gamma) + schouten_bracket(g, beta, gamma)
    assert schouten_bracket(g, alpha.scale(3), gamma) == schouten_bracket(g, alpha, gamma).scale(3)


# -- the K_0 shadow -----------------------------------------------------------------

def test_k0_shadow_degree_one_scaling():
    res = k0_shadow(Z(3), 5, {(0,): 1, (1,): 2, (2,): 4}, 1)
    assert res.cochain == {(0,): 1, (1,): 2, (2,): 4}
    assert res.consistent


def test_k0_shadow_identity_is_trivial():
    res = k0_shadow(Z(2), 3, lambda t: 1, 2)
    assert res.cocycle_cobar and res.coboundary_cobar and res.consistent


def test_k0_shadow_two_cocycle_on_z2():
    table = cyclic_table(2)
    for values in itertools.product((1, 2), repeat=4):
        alpha = dict(zip(itertools.product(range(2), repeat=2), values))
        res = k0_shadow(Z(2), 3, alpha, 2)
        assert res.consistent
        if res.cocycle_hochschild:
            # normalized 2-cocycle condition holds pointwise
            for a, b, c in itertools.product(range(2), repeat=3):
                lhs = alpha[(b, c)] * alpha[(a, table[b][c])]
                rhs = alpha[(table[a][b], c)] * alpha[(a, b)]
                assert lhs % 3 == rhs % 3
