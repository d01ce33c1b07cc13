"""Hot integer kernels: elimination over F_p and local Smith forms over Z/l^k.

Each kernel has a numba ``@njit`` version and a vectorised pure-numpy
version with identical results. Set ``TWISTLAB_NUMBA=0`` to force the numpy
path (numba is also skipped when it cannot be imported).
"""
from __future__ import annotations

import os

import numpy as np

try:
    import numba
    from numba import njit
except ImportError:  # pragma: no cover - numba is a declared dependency
    numba = None

USE_NUMBA = numba is not None and os.environ.get("TWISTLAB_NUMBA", "1") != "0"


def _inv_mod_py(a, m):
    return pow(int(a), -1, int(m))


# -- numpy implementations ---------------------------------------------------

def rref_mod_p_numpy(a: np.ndarray, p: int):
    a = np.mod(np.array(a, dtype=np.int64), p)
    rows, cols = a.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.flatnonzero(a[r:, c])
        if nz.size == 0:
            continue
        piv = r + nz[0]
        if piv != r:
            a[[r, piv]] = a[[piv, r]]
        a[r] = a[r] * _inv_mod_py(a[r, c], p) % p
        f = a[:, c].copy()
        f[r] = 0
        hit = np.flatnonzero(f)
        if hit.size:
            a[hit] = (a[hit] - np.outer(f[hit], a[r])) % p
        pivots.append(c)
        r += 1
    return a, np.array(pivots, dtype=np.int64)


def _valuation_array(x, ell, k):
    v = np.full(x.shape, k, dtype=np.int64)
    nz = x != 0
    y = x.copy()
    cur = np.zeros(x.shape, dtype=np.int64)
    live = nz.copy()
    while live.any():
        div = live & (y % ell == 0)
        stop = live & ~div
        v[stop] = cur[stop]
        live = div
        y[div] //= ell
        cur[div] += 1
    return v


def smith_local_numpy(a: np.ndarray, ell: int, k: int):
    mod = ell ** k
    a = np.mod(np.array(a, dtype=np.int64), mod)
    rows, cols = a.shape
    vals = []
    t = 0
    while t < min(rows, cols):
        sub = a[t:, t:]
        if not sub.any():
            break
        val = _valuation_array(sub, ell, k)
        idx = np.argmin(val)
        i, j = divmod(int(idx), sub.shape[1])
        v = int(val[i, j])
        i += t
        j += t
        if i != t:
            a[[t, i]] = a[[i, t]]
        if j != t:
            a[:, [t, j]] = a[:, [j, t]]
        pv = ell ** v
        u = int(a[t, t]) // pv
        a[t] = a[t] * _inv_mod_py(u, mod) % mod
        f = a[:, t] // pv
        f[t] = 0
        hit = np.flatnonzero(f)
        if hit.size:
            a[hit] = (a[hit] - np.outer(f[hit], a[t])) % mod
        a[t, t + 1:] = 0
        vals.append(v)
        t += 1
    return vals


# -- numba implementations ---------------------------------------------------

if numba is not None:

    @njit(cache=True)
    def _inv_mod_nb(a, m):
        r0, r1 = m, a % m
        s0, s1 = 0, 1
        while r1 != 0:
            qt = r0 // r1
            r0, r1 = r1, r0 - qt * r1
            s0, s1 = s1, s0 - qt * s1
        return s0 % m

    @njit(cache=True)
    def _rref_mod_p_nb(a, p):
        rows, cols = a.shape
        pivots = np.empty(min(rows, cols), dtype=np.int64)
        r = 0
        for c in range(cols):
            if r == rows:
                break
            piv = -1
            for i in range(r, rows):
                if a[i, c] != 0:
                    piv = i
                    break
            if piv < 0:
                continue
            if piv != r:
                for j in range(cols):
                    tmp = a[r, j]
                    a[r, j] = a[piv, j]
                    a[piv, j] = tmp
            inv = _inv_mod_nb(a[r, c], p)
            for j in range(c, cols):
                a[r, j] = a[r, j] * inv % p
            for i in range(rows):
                if i != r and a[i, c] != 0:
                    f = a[i, c]
                    for j in range(c, cols):
                        a[i, j] = (a[i, j] - f * a[r, j]) % p
            pivots[r] = c
            r += 1
        return pivots[:r]

    @njit(cache=True)
    def _smith_local_nb(a, ell, k):
        mod = 1
        for _ in range(k):
            mod *= ell
        rows, cols = a.shape
        vals = np.empty(min(rows, cols), dtype=np.int64)
        t = 0
        while t < min(rows, cols):
            best = k
            bi = -1
            bj = -1
            for i in range(t, rows):
                for j in range(t, cols):
                    x = a[i, j]
                    if x != 0:
                        v = 0
                        while x % ell == 0:
                            x //= ell
                            v += 1
                        if v < best:
                            best = v
                            bi = i
                            bj = j
                            if v == 0:
                                break
                if best == 0:
                    break
            if bi < 0:
                break
            if bi != t:
                for j in range(cols):
                    tmp = a[t, j]
                    a[t, j] = a[bi, j]
                    a[bi, j] = tmp
            if bj != t:
                for i in range(rows):
                    tmp = a[i, t]
                    a[i, t] = a[i, bj]
                    a[i, bj] = tmp
            pv = 1
            for _ in range(best):
                pv *= ell
            inv = _inv_mod_nb(a[t, t] // pv, mod)
            for j in range(t, cols):
                a[t, j] = a[t, j] * inv % mod
            for i in range(rows):
                if i != t and a[i, t] != 0:
                    f = a[i, t] // pv
                    for j in range(t, cols):
                        a[i, j] = (a[i, j] - f * a[t, j]) % mod
            for j in range(t + 1, cols):
                a[t, j] = 0
            vals[t] = best
            t += 1
        return vals[:t]


# -- dispatch ----------------------------------------------------------------

def rref_mod_p(a: np.ndarray, p: int, use_numba: bool | None = None):
    """Reduced row echelon form over F_p. Returns ``(R, pivot_columns)``."""
    if use_numba is None:
        use_numba = USE_NUMBA
    if use_numba and numba is not None and p < (1 << 31):
        work = np.ascontiguousarray(np.mod(np.array(a, dtype=np.int64), p))
        if work.size == 0:
            return work, np.zeros(0, dtype=np.int64)
        piv = _rref_mod_p_nb(work, np.int64(p))
        return work, piv
    return rref_mod_p_numpy(a, p)


def rank_mod_p(a: np.ndarray, p: int, use_numba: bool | None = None) -> int:
    a = np.asarray(a)
    if a.size == 0:
        return 0
    return len(rref_mod_p(a, p, use_numba)[1])


def smith_local(a: np.ndarray, ell: int, k: int, use_numba: bool | None = None) -> list[int]:
    """l-adic valuations (< k) of the Smith invariants of ``a`` over Z/l^k.

    Invariants divisible by l^k are not reported.
    """
    if use_numba is None:
        use_numba = USE_NUMBA
    a = np.asarray(a)
    if a.size == 0:
        return []
    if use_numba and numba is not None:
        work = np.ascontiguousarray(np.mod(np.array(a, dtype=np.int64), ell ** k))
        return [int(v) for v in _smith_local_nb(work, np.int64(ell), np.int64(k))]
    return smith_local_numpy(a, ell, k)
