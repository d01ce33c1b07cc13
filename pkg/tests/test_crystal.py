from collections import Counter
from fractions import Fraction

import pytest

from twistlab.crystal import (a_invariant_crystal, compute_a_invariant_crystal, components, decompose,
                              highest_weights, increasing_words, lambda_check, multiplicity_compare,
                              standard_crystal, tensor, tensor_power, weight)

from oracles import schur_dimension, standard_tableaux

CASES = [(n, N) for N in range(1, 5) for n in range(1, 5) if N ** n <= 256]


def test_standard_crystal():
    X = standard_crystal(3)
    assert X.apply_f(1, (1,)) == (2,) and X.apply_f(2, (2,)) == (3,)
    assert X.apply_f(1, (2,)) is None and X.apply_e(2, (3,)) == (2,)
    assert X.check_axioms() == []
    with pytest.raises(ValueError):
        standard_crystal(0)


def test_x2_tensor_square():
    B = tensor(standard_crystal(2), standard_crystal(2))
    assert sorted(len(c) for c in components(B)) == [1, 3]
    assert [(1, 2)] in components(B)
    assert B.apply_f(1, (1, 1)) == (2, 1)
    assert B.apply_f(1, (2, 1)) == (2, 2)
    assert highest_weights(B) == [(1, 1), (1, 2)]


@pytest.mark.parametrize("n,N", CASES)
def test_tensor_powers_satisfy_axioms(n, N):
    assert tensor_power(standard_crystal(N), n).check_axioms() == []


def test_printed_e_rule_breaks_inverse_axiom():
    B = tensor(standard_crystal(2), standard_crystal(2), literal=True)
    assert B.check_axioms() != []


def test_tensor_is_associative_on_words():
    X = standard_crystal(3)
    left = tensor(tensor(X, X), X)
    right = tensor(X, tensor(X, X))
    for i in X.indices:
        assert left.f[i] == right.f[i] and left.e[i] == right.e[i]


@pytest.mark.parametrize("n,N", CASES)
def test_weights_move_by_simple_roots(n, N):
    B = tensor_power(standard_crystal(N), n)
    for i in B.indices:
        for u, v in B.f[i].items():
            wu, wv = weight(u, N), weight(v, N)
            diff = [b - a for a, b in zip(wu, wv)]
            assert diff[i - 1] == -1 and diff[i] == 1 and sum(map(abs, diff)) == 2
        for u in B.vertices:
            w = weight(u, N)
            assert B.phi(i, u) - B.eps(i, u) == w[i - 1] - w[i]


@pytest.mark.parametrize("n,N", CASES)
def test_components_have_schur_dimensions(n, N):
    comps = decompose(N, n)
    assert sum(c.size for c in comps) == N ** n
    for c in comps:
        assert c.size == schur_dimension(c.shape.parts, N)
        assert weight(c.highest_weight, N)[: len(c.shape)] == c.shape.parts
    census = Counter(c.shape.parts for c in comps)
    for mu, m in census.items():
        assert m == standard_tableaux(mu)


def test_component_sizes_for_three_letters_cubed():
    assert sorted((c.size for c in decompose(3, 3)), reverse=True) == [10, 8, 8, 1]


@pytest.mark.parametrize("N", range(1, 5))
def test_increasing_words_form_a_component(N):
    for n in range(1, N + 1):
        if N ** n <= 256:
            assert lambda_check(N, n)
            assert len(increasing_words(N, n)) == schur_dimension((1,) * n, N)


@pytest.mark.parametrize("N", [2, 3, 4])
def test_crystal_a_invariant_vanishes(N):
    res = compute_a_invariant_crystal(N)
    assert res.proportional
    assert res.value == Fraction(0) == a_invariant_crystal(N)


def test_crystal_a_invariant_rejects_small_n():
    with pytest.raises(ValueError):
        compute_a_invariant_crystal(1)


@pytest.mark.parametrize("n,N", [(n, N) for n, N in CASES if n <= N])
def test_multiplicities_match_pieri(n, N):
    v = multiplicity_compare(n, N)
    assert v.ok and v.crystal == v.pieri
    assert sum(v.sizes) == N ** n


def test_multiplicity_compare_rejects_truncation():
    with pytest.raises(ValueError):
        multiplicity_compare(3, 2)
