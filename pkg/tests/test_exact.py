from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from twistlab.exact import (GF, QQ, QQ_q, GFElement, Matrix, RatFunc, TruncatedSeries, exp_integral_transform,
                            expand_rational)
from twistlab.exact.fields import scalar_from_json, scalar_to_json
from twistlab.exact.integer import integer_kernel, lattice_basis, smith_invariants

from oracles import diagonal_entries, invariant_factors

fractions = st.fractions(min_value=-50, max_value=50, max_denominator=30)
small_ints = st.integers(-6, 6)


def int_matrices(max_rows=5, max_cols=5):
    return st.integers(1, max_rows).flatmap(
        lambda r: st.integers(1, max_cols).flatmap(
            lambda c: st.lists(st.lists(small_ints, min_size=c, max_size=c), min_size=r, max_size=r)))


# -- scalars -------------------------------------------------------------------------

@given(fractions, fractions, fractions)
def test_rational_field_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a * b == b * a
    assert a * (b + c) == a * b + a * c


def test_big_integers_do_not_overflow():
    x = Fraction(2) ** 200 / 3
    assert (x * 3).numerator == 2 ** 200


@given(st.integers(0, 6), st.integers(0, 6), st.integers(0, 6))
def test_prime_field_distributive(a, b, c):
    f = GF(7)
    x, y, z = (f.coerce(v) for v in (a, b, c))
    assert x * (y + z) == x * y + x * z
    if a % 7:
        assert x * (1 / x) == f.one


def test_gf_rejects_composite():
    with pytest.raises(ValueError):
        GF(6)


polys = st.lists(st.integers(-3, 3), min_size=1, max_size=3)


@given(polys, polys, polys)
@settings(max_examples=40)
def test_ratfunc_canonical_equality(a, b, c):
    q = RatFunc.q()
    x = RatFunc(a, (1, 1))
    y = RatFunc(b, (2, 0, 1))
    z = RatFunc(c) + q
    assert (x + y) + z == x + (y + z)
    assert x * (y + z) == x * y + x * z
    if z != 0:
        assert (x / z) * z == x
    assert x.den[-1] == 1


def test_ratfunc_canonical_string_and_evaluation():
    q = RatFunc.q()
    a = q / (q + 1) ** 2
    assert str(a) == "q/(q^2 + 2*q + 1)"
    assert a(Fraction(1)) == Fraction(1, 4)
    assert a(Fraction(2)) == Fraction(2, 9)
    assert (q * q - 1) / (q - 1) == q + 1


@pytest.mark.parametrize("x", [Fraction(3, 4), Fraction(-2), GFElement(5, 3), RatFunc((1, 2), (3, 1))])
def test_scalar_json_round_trip(x):
    assert scalar_from_json(scalar_to_json(x)) == x


# -- matrices ------------------------------------------------------------------------

def test_rank_examples():
    assert Matrix.identity(3).rank() == 3
    assert Matrix.from_rows([[1, 2], [2, 4]]).rank() == 1


def test_kernel_examples():
    assert Matrix.identity(3).kernel_basis() == []
    assert len(Matrix.zeros(2, 2).kernel_basis()) == 2
    (v,) = Matrix.from_rows([[1, 1]]).kernel_basis()
    a, b = v.data.reshape(-1)
    assert a == -b != 0


@given(int_matrices())
@settings(max_examples=60)
def test_rank_nullity_over_q(rows):
    M = Matrix.from_rows(rows)
    ker = M.kernel_basis()
    assert M.rank() + len(ker) == M.cols
    for v in ker:
        assert (M @ v).is_zero()


@given(int_matrices(), st.sampled_from([2, 3, 7]))
@settings(max_examples=60)
def test_rank_nullity_over_gf(rows, p):
    M = Matrix(np.array(rows, dtype=np.int64) % p, GF(p))
    ker = M.kernel_basis()
    assert M.rank() + len(ker) == M.cols
    for v in ker:
        assert (M @ v).is_zero()


def test_ratfunc_matrix_product_matches_entrywise():
    q = RatFunc.q()
    A = Matrix(np.array([[q / (q + 1), RatFunc.const(1)], [q, 1 / (q - 2)]], dtype=object), QQ_q)
    B = Matrix(np.array([[RatFunc.const(2), q / (q + 3)], [q * q, RatFunc()]], dtype=object), QQ_q)
    C = A @ B
    for i in range(2):
        for j in range(2):
            assert C[i, j] == sum((A[i, k] * B[k, j] for k in range(2)), RatFunc())


# -- integer lattices ----------------------------------------------------------------

def test_smith_known():
    assert smith_invariants([[2, 4, 4], [-6, 6, 12], [10, -4, -16]]) == [2, 6, 12]


@given(int_matrices())
@settings(max_examples=80)
def test_smith_matches_oracle_diagonalisation(rows):
    ours = smith_invariants(rows)
    ref = diagonal_entries(rows)
    assert len(ours) == len(ref)
    assert invariant_factors([d for d in ours if d > 1]) == invariant_factors([d for d in ref if d > 1])
    assert all(ours[i + 1] % ours[i] == 0 for i in range(len(ours) - 1))


@given(int_matrices())
@settings(max_examples=60)
def test_integer_kernel_is_annihilated(rows):
    ncols = len(rows[0])
    K = integer_kernel(rows, ncols)
    M = np.array(rows, dtype=object)
    for v in K:
        assert not (M @ np.array(v, dtype=object)).any()
    assert len(K) == ncols - Matrix.from_rows(rows).rank()


@given(int_matrices())
@settings(max_examples=40)
def test_lattice_basis_spans_same_index(rows):
    basis = lattice_basis(rows)
    assert len(basis) == Matrix.from_rows(rows).rank()


# -- series ----------------------------------------------------------------------------

def test_exp_integral_transform_examples():
    N = 6
    assert list(exp_integral_transform(TruncatedSeries([0] + [2] * N))) == [1, 2, 1, 0, 0, 0, 0]
    assert list(exp_integral_transform(TruncatedSeries([0] * (N + 1)))) == [1] + [0] * N
    neg = TruncatedSeries([0] + [2 * (-1) ** (n - 1) for n in range(1, N + 1)])
    assert list(exp_integral_transform(neg)) == list(range(1, N + 2))


def test_expand_rational_examples():
    assert list(expand_rational([1, 1], [], 4)) == [1, 2, 1, 0, 0]
    assert list(expand_rational([], [1, 1], 4)) == [1, 2, 3, 4, 5]
    assert list(expand_rational([2], [3], 3)) == [1, 5, 15, 45]


series = st.lists(fractions, min_size=5, max_size=5).map(lambda c: TruncatedSeries([0] + c))


@given(series, series)
@settings(max_examples=50)
def test_exp_transform_additive_to_multiplicative(a, b):
    H = exp_integral_transform(a + b)
    assert H[0] == 1
    assert H == (exp_integral_transform(a) * exp_integral_transform(b)).truncate(H.order)


def test_field_descriptors_distinct():
    assert QQ != QQ_q and GF(3) != GF(5) and GF(3) == GF(3)
