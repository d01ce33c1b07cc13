import os
import subprocess
import sys

import numpy as np
from hypothesis import given, settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from twistlab import _kernels
from twistlab._kernels import rank_mod_p, rref_mod_p, smith_local

from oracles import diagonal_entries, det

shapes = st.tuples(st.integers(1, 7), st.integers(1, 7))
int_arrays = shapes.flatmap(lambda s: arrays(np.int64, s, elements=st.integers(-40, 40)))


def valuation(x: int, ell: int) -> int:
    v = 0
    while x % ell == 0:
        x //= ell
        v += 1
    return v


@given(int_arrays, st.sampled_from([2, 3, 5, 7, 2147483647]))
@settings(max_examples=80)
def test_rref_paths_agree(a, p):
    r1, piv1 = rref_mod_p(a, p, use_numba=True)
    r2, piv2 = rref_mod_p(a, p, use_numba=False)
    assert np.array_equal(r1, r2) and list(piv1) == list(piv2)


@given(int_arrays, st.sampled_from([2, 3, 5, 7]))
@settings(max_examples=60)
def test_rref_is_reduced_and_row_equivalent(a, p):
    R, piv = rref_mod_p(a, p)
    for r, c in enumerate(piv):
        col = R[:, c]
        assert col[r] == 1 and np.count_nonzero(col) == 1
    assert not R[len(piv):].any()
    # same row space: stacking adds no rank
    assert rank_mod_p(np.vstack([a, R]), p) == len(piv)


@given(st.integers(1, 5).flatmap(lambda n: arrays(np.int64, (n, n), elements=st.integers(-9, 9))),
       st.sampled_from([3, 5, 7]))
@settings(max_examples=60)
def test_full_rank_iff_determinant_is_a_unit(a, p):
    n = a.shape[0]
    d = det(a.tolist())
    assert (rank_mod_p(a, p) == n) == (d % p != 0)


@given(int_arrays, st.sampled_from([(2, 3), (3, 2), (2, 1), (5, 2)]))
@settings(max_examples=80)
def test_smith_paths_agree(a, lk):
    ell, k = lk
    assert smith_local(a, ell, k, use_numba=True) == smith_local(a, ell, k, use_numba=False)


@given(int_arrays, st.sampled_from([(2, 3), (3, 2), (5, 2)]))
@settings(max_examples=80)
def test_smith_valuations_match_integer_diagonalisation(a, lk):
    ell, k = lk
    ref = sorted(min(valuation(d, ell), k) for d in diagonal_entries(a.tolist()) if d != 0)
    ref = [v for v in ref if v < k]
    assert sorted(smith_local(a, ell, k)) == ref


def test_empty_inputs():
    assert rank_mod_p(np.zeros((0, 3), dtype=np.int64), 5) == 0
    assert smith_local(np.zeros((0, 0), dtype=np.int64), 2, 3) == []


def test_environment_flag_selects_numpy_path():
    env = dict(os.environ, TWISTLAB_NUMBA="0")
    code = "from twistlab import _kernels; print(_kernels.USE_NUMBA)"
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "False"
    assert _kernels.USE_NUMBA == (os.environ.get("TWISTLAB_NUMBA", "1") != "0")
