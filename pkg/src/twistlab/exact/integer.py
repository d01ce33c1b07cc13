"""Integer lattices: row echelon form, kernels and Smith invariants over Z."""
from __future__ import annotations

from typing import Sequence


def echelon_rows(rows: Sequence[Sequence[int]], pivot_cols: int | None = None) -> tuple[list[list[int]], int]:
    """Unimodular row reduction on the first ``pivot_cols`` columns.

    Returns the transformed rows and the number of pivot rows; rows past that
    count vanish on the pivot columns.
    """
    A = [list(map(int, r)) for r in rows]
    m = len(A)
    ncols = len(A[0]) if A else 0
    pivot_cols = ncols if pivot_cols is None else pivot_cols
    r = 0
    for c in range(pivot_cols):
        if r == m:
            break
        while True:
            nz = [i for i in range(r, m) if A[i][c] != 0]
            if not nz:
                break
            piv = min(nz, key=lambda i: abs(A[i][c]))
            A[r], A[piv] = A[piv], A[r]
            clean = True
            for i in range(r + 1, m):
                if A[i][c]:
                    q = A[i][c] // A[r][c]
                    A[i] = [x - q * y for x, y in zip(A[i], A[r])]
                    if A[i][c]:
                        clean = False
            if clean:
                break
        if r < m and A[r][c] != 0:
            if A[r][c] < 0:
                A[r] = [-x for x in A[r]]
            r += 1
    return A, r


def lattice_basis(gens: Sequence[Sequence[int]]) -> list[list[int]]:
    A, r = echelon_rows(gens)
    return A[:r]


def integer_kernel(M: Sequence[Sequence[int]], ncols: int) -> list[list[int]]:
    """Basis of {x in Z^ncols : M x = 0} for an m x ncols integer matrix."""
    m = len(M)
    rows = [[M[i][j] for i in range(m)] + [1 if k == j else 0 for k in range(ncols)] for j in range(ncols)]
    A, r = echelon_rows(rows, pivot_cols=m)
    return [row[m:] for row in A[r:]]


def smith_invariants(rows: Sequence[Sequence[int]]) -> list[int]:
    """Nonzero Smith invariants d_1 | d_2 | ... of an integer matrix."""
    A = [list(map(int, r)) for r in rows if any(r)]
    out = []
    while A and any(any(r) for r in A):
        A = [r for r in A if any(r)]
        cols = [j for j in range(len(A[0])) if any(r[j] for r in A)]
        A = [[r[j] for j in cols] for r in A]
        while True:
            i0, j0 = min(((i, j) for i, r in enumerate(A) for j, x in enumerate(r) if x),
                         key=lambda ij: abs(A[ij[0]][ij[1]]))
            A[0], A[i0] = A[i0], A[0]
            for r in A:
                r[0], r[j0] = r[j0], r[0]
            p = A[0][0]
            dirty = False
            for i in range(1, len(A)):
                q = A[i][0] // p
                if q:
                    A[i] = [x - q * y for x, y in zip(A[i], A[0])]
                dirty |= A[i][0] != 0
            for j in range(1, len(A[0])):
                q = A[0][j] // p
                if q:
                    for r in A:
                        r[j] -= q * r[0]
                dirty |= A[0][j] != 0
            if dirty:
                continue
            bad = next((i for i in range(1, len(A)) if any(x % p for x in A[i][1:])), None)
            if bad is None:
                break
            A[0] = [x + y for x, y in zip(A[0], A[bad])]
        out.append(abs(A[0][0]))
        A = [r[1:] for r in A[1:]]
        if not A or not A[0]:
            break
    return out
