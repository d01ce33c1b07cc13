import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from twistlab.exact import TruncatedSeries, expand_rational
from twistlab.symfunc import (HilbertHom, Partition, cycle_census, cycle_types, dual_partition, partitions,
                              pieri_multiply, power_decompose, schur_value, toeplitz_minors_nonneg,
                              verify_rational_form)

from oracles import partitions as oracle_partitions
from oracles import schur_dimension, standard_tableaux

P = Partition.of


def test_dual_partition_examples():
    assert dual_partition(P(2, 1)) == P(2, 1)
    assert dual_partition(P(3, 1)) == P(2, 1, 1)
    assert dual_partition(P(5)) == P(1, 1, 1, 1, 1)


def test_dual_is_involution_up_to_10():
    for n in range(11):
        for mu in partitions(n):
            assert dual_partition(dual_partition(mu)) == mu


def test_partitions_match_oracle_enumeration():
    for n in range(9):
        assert [mu.parts for mu in partitions(n)] == list(oracle_partitions(n))


def test_pieri_examples():
    assert set(pieri_multiply(P(1))) == {P(2), P(1, 1)}
    assert set(pieri_multiply(P(4))) == {P(5), P(4, 1)}
    assert set(pieri_multiply(P(2, 1))) == {P(3, 1), P(2, 2), P(2, 1, 1)}


def test_power_decompose_examples():
    assert power_decompose(0) == {P(): 1}
    assert power_decompose(2) == {P(2): 1, P(1, 1): 1}
    assert power_decompose(3) == {P(3): 1, P(2, 1): 2, P(1, 1, 1): 1}


@pytest.mark.parametrize("n", range(1, 7))
def test_power_decompose_is_hook_length_count(n):
    dec = power_decompose(n)
    assert {mu.parts: m for mu, m in dec.items()} == {mu: standard_tableaux(mu) for mu in oracle_partitions(n)}
    assert sum(m * m for m in dec.values()) == math.factorial(n)


def test_schur_value_examples():
    f = HilbertHom((1, 2, 1, 0, 0))
    assert schur_value(P(1), f) == 2
    assert schur_value(P(2, 1), f) == 2
    assert schur_value(P(1, 1), f) == 1


@pytest.mark.parametrize("d", range(1, 5))
def test_schur_value_is_hook_content_dimension(d):
    f = HilbertHom.binomial(d, 12)
    for n in range(1, 6):
        for mu in partitions(n):
            assert schur_value(mu, f) == schur_dimension(mu.parts, d), (mu, d)


def test_cycle_census_examples():
    assert cycle_census({3: 1}) == 2
    assert cycle_census({1: 1, 2: 1}) == 3
    assert cycle_census({1: 3}) == 1
    assert cycle_census((1, 1)) == 3
    with pytest.raises(ValueError):
        cycle_census({1: 2}, 3)


@pytest.mark.parametrize("n", range(0, 9))
def test_cycle_census_sums_to_factorial(n):
    assert sum(cycle_census(mu) for mu in cycle_types(n)) == math.factorial(n)


def test_toeplitz_examples():
    assert toeplitz_minors_nonneg([1, 2, 1, 0, 0], 2).ok
    v = toeplitz_minors_nonneg([1, 0, 1, 0, 0], 2)
    assert not v.ok and v.witness.value == -1
    assert toeplitz_minors_nonneg([1, 0, 0, 0, 0], 5).ok


def test_verify_rational_form_examples():
    assert verify_rational_form(TruncatedSeries([1, 2, 1, 0, 0]), [1, 1], [])
    assert verify_rational_form(TruncatedSeries([1, 2, 3, 4, 5, 6]), [], [1, 1])
    s = TruncatedSeries([1, 0, 1, 0, 0])
    for a in ([], [1], [1, 2]):
        for b in ([], [1], [1, 3]):
            assert not verify_rational_form(s, a, b)


def _fits(mu: Partition, L: int) -> bool:
    return bool(mu.parts) and mu.parts[0] + len(mu) <= L


@given(st.lists(st.integers(1, 3), max_size=3), st.lists(st.integers(1, 2), max_size=2))
@settings(max_examples=30)
def test_positive_root_series_are_totally_positive(a, b):
    L = 6
    seq = [int(c) for c in expand_rational(a, b, L - 1)]
    assert toeplitz_minors_nonneg(seq, L).ok
    f = HilbertHom(tuple(seq))
    for n in range(1, L):
        for mu in partitions(n):
            if _fits(mu, L):
                assert schur_value(mu, f) >= 0


@given(st.lists(st.integers(0, 4), min_size=4, max_size=4))
@settings(max_examples=60)
def test_window_positivity_implies_nonnegative_schur_values(tail):
    seq = [1] + tail
    L = len(seq)
    f = HilbertHom(tuple(seq))
    values = [schur_value(mu, f) for n in range(1, L) for mu in partitions(n) if _fits(mu, L)]
    if toeplitz_minors_nonneg(seq, L).ok:
        assert min(values) >= 0


def test_hilbert_hom_json_round_trip():
    f = HilbertHom.binomial(3, 4)
    assert HilbertHom.from_json(f.to_json()) == f
    with pytest.raises(ValueError):
        HilbertHom((2, 1))
    with pytest.raises(ValueError):
        f.lam(9)
