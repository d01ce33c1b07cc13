"""Finite crystals, the signature tensor product and the standard crystal X_N.

Vertices of tensor products of standard crystals are words (tuples of
letters); tensoring concatenates words, so bracketings give the same vertex set.
"""
from __future__ import annotations

from collections import Counter
from itertools import combinations
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .exact.fields import QQ
from .exact.matrix import Matrix
from .symfunc import Partition, power_decompose


@dataclass
class Crystal:
    """Vertices with partial operators e[i], f[i] stored as dicts (missing key = 0)."""

    vertices: list
    indices: tuple[int, ...]
    e: dict = field(default_factory=dict)
    f: dict = field(default_factory=dict)

    def __post_init__(self):
        for i in self.indices:
            self.e.setdefault(i, {})
            self.f.setdefault(i, {})
        self._phi: dict = {}
        self._eps: dict = {}

    def __len__(self):
        return len(self.vertices)

    def apply_f(self, i: int, u):
        return self.f[i].get(u)

    def apply_e(self, i: int, u):
        return self.e[i].get(u)

    def _run(self, ops: dict, u) -> int:
        k, seen = 0, {u}
        while u in ops:
            u = ops[u]
            if u in seen:
                raise ValueError("operator chain is not nilpotent")
            seen.add(u)
            k += 1
        return k

    def phi(self, i: int, u) -> int:
        key = (i, u)
        if key not in self._phi:
            self._phi[key] = self._run(self.f[i], u)
        return self._phi[key]

    def eps(self, i: int, u) -> int:
        key = (i, u)
        if key not in self._eps:
            self._eps[key] = self._run(self.e[i], u)
        return self._eps[key]

    def check_axioms(self) -> list[str]:
        """f_i(u) = v iff e_i(v) = u, and finite phi, eps."""
        bad = []
        for i in self.indices:
            for u, v in self.f[i].items():
                if self.e[i].get(v) != u:
                    bad.append(f"f_{i}({u}) = {v} but e_{i}({v}) = {self.e[i].get(v)}")
            for v, u in self.e[i].items():
                if self.f[i].get(u) != v:
                    bad.append(f"e_{i}({v}) = {u} but f_{i}({u}) = {self.f[i].get(u)}")
            for u in self.vertices:
                try:
                    self.phi(i, u)
                    self.eps(i, u)
                except ValueError:
                    bad.append(f"infinite string through {u} for index {i}")
        return bad


def standard_crystal(N: int) -> Crystal:
    """Letters x_1..x_N (as words of length 1) with f_i(x_i) = x_{i+1}."""
    if N < 1:
        raise ValueError("N must be positive")
    idx = tuple(range(1, N))
    f = {i: {(i,): (i + 1,)} for i in idx}
    e = {i: {(i + 1,): (i,)} for i in idx}
    return Crystal([(j,) for j in range(1, N + 1)], idx, e, f)


def _pair(u, v):
    return u + v if isinstance(u, tuple) and isinstance(v, tuple) else (u, v)


def tensor(B1: Crystal, B2: Crystal, literal: bool = False) -> Crystal:
    """Signature rule comparing phi_i(u) with eps_i(v).

    f_i acts on u when phi_i(u) > eps_i(v) and on v otherwise; e_i acts on u when
    phi_i(u) >= eps_i(v) and on v otherwise. ``literal=True`` uses the e-rule
    as printed (u when phi_i(u) <= eps_i(v), no displayed case otherwise), which
    breaks the f/e inverse axiom.
    """
    if B1.indices != B2.indices:
        raise ValueError("crystals must share their index set")
    verts = [(u, v) for u in B1.vertices for v in B2.vertices]
    e: dict = {}
    f: dict = {}
    for i in B1.indices:
        fi, ei = {}, {}
        for u, v in verts:
            pu, ev = B1.phi(i, u), B2.eps(i, v)
            w = _pair(u, v)
            if pu > ev:
                x = B1.apply_f(i, u)
                img = None if x is None else _pair(x, v)
            else:
                y = B2.apply_f(i, v)
                img = None if y is None else _pair(u, y)
            if img is not None:
                fi[w] = img
            if literal:
                x = B1.apply_e(i, u) if pu <= ev else None
                img = None if x is None else _pair(x, v)
            elif pu >= ev:
                x = B1.apply_e(i, u)
                img = None if x is None else _pair(x, v)
            else:
                y = B2.apply_e(i, v)
                img = None if y is None else _pair(u, y)
            if img is not None:
                ei[w] = img
        e[i], f[i] = ei, fi
    return Crystal([_pair(u, v) for u, v in verts], B1.indices, e, f)


def tensor_power(B: Crystal, n: int, literal: bool = False) -> Crystal:
    if n < 1:
        raise ValueError("n must be positive")
    out = B
    for _ in range(n - 1):
        out = tensor(out, B, literal)
    return out


def components(B: Crystal) -> list[list]:
    """Connected components under all operators, each sorted, ordered by first vertex."""
    parent = {v: v for v in B.vertices}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i in B.indices:
        for u, v in B.f[i].items():
            a, b = find(u), find(v)
            if a != b:
                parent[a] = b
    groups: dict = {}
    for v in B.vertices:
        groups.setdefault(find(v), []).append(v)
    return sorted((sorted(g) for g in groups.values()), key=lambda g: g[0])


def highest_weights(B: Crystal) -> list:
    return [v for v in B.vertices if all(B.apply_e(i, v) is None for i in B.indices)]


def weight(word, N: int) -> tuple[int, ...]:
    counts = Counter(word)
    return tuple(counts.get(j, 0) for j in range(1, N + 1))


@dataclass
class Component:
    vertices: list
    highest_weight: tuple
    shape: Partition

    @property
    def size(self) -> int:
        return len(self.vertices)


def decompose(N: int, n: int) -> list[Component]:
    """Components of X_N^(x)n, each with its unique highest-weight vertex."""
    B = tensor_power(standard_crystal(N), n)
    hw = set(highest_weights(B))
    out = []
    for comp in components(B):
        tops = [v for v in comp if v in hw]
        if len(tops) != 1:
            raise AssertionError(f"component through {comp[0]} has {len(tops)} highest-weight vertices")
        wt = weight(tops[0], N)
        if list(wt) != sorted(wt, reverse=True):
            raise AssertionError(f"highest weight {wt} of {tops[0]} is not a partition")
        out.append(Component(comp, tops[0], Partition(tuple(x for x in wt if x))))
    return out


def increasing_words(N: int, n: int) -> list[tuple]:
    return [tuple(c) for c in combinations(range(1, N + 1), n)]


def lambda_check(N: int, n: int) -> bool:
    """Strictly increasing words form exactly one component of X_N^(x)n."""
    if not 1 <= n <= N:
        raise ValueError("need 1 <= n <= N")
    target = sorted(increasing_words(N, n))
    return any(comp == target for comp in components(tensor_power(standard_crystal(N), n)))


@dataclass
class CrystalAInvariant:
    value: Fraction
    residual_1: Matrix
    residual_2: Matrix
    raw_residual: Matrix

    @property
    def proportional(self) -> bool:
        z = Matrix.zeros(*self.residual_1.shape, QQ)
        return self.residual_1 == z and self.residual_2 == z


def _exact(X: np.ndarray) -> Matrix:
    return Matrix(X.astype(object), QQ)


def compute_a_invariant_crystal(N: int) -> CrystalAInvariant:
    """P_1 P_2 P_1 = a P_1 on the linear envelope of X_N^(x)3.

    p is the indicator projector of the Lambda^2 component, p_1 = p (x) 1,
    p_2 = 1 (x) p, and P_i = p_i - p_3 with p_3 the Lambda^3 indicator. The
    projectors are 0/1 matrices, so products are taken over the integers.
    """
    if N < 2:
        raise ValueError("N must be at least 2")
    if not lambda_check(N, 2):
        raise AssertionError("increasing pairs do not form a component")
    if N >= 3 and not lambda_check(N, 3):
        raise AssertionError("increasing triples do not form a component")
    words = tensor_power(standard_crystal(N), 3).vertices
    p1 = np.diag([int(w[0] < w[1]) for w in words])
    p2 = np.diag([int(w[1] < w[2]) for w in words])
    p3 = np.diag([int(w[0] < w[1] < w[2]) for w in words])
    P1, P2 = p1 - p3, p2 - p3
    if not (np.array_equal(P1 @ P1, P1) and np.array_equal(P2 @ P2, P2)):
        raise AssertionError("P_i is not idempotent")
    M = P1 @ P2 @ P1
    r, c = np.argwhere(P1 != 0)[0]
    a = Fraction(int(M[r, c]), int(P1[r, c]))
    sc = lambda Y: Matrix._wrap(QQ.array(Y.astype(object)) * a, QQ)  # noqa: E731
    return CrystalAInvariant(a, _exact(M) - sc(P1), _exact(P2 @ P1 @ P2) - sc(P2), _exact(p1 @ p2 @ p1) - sc(p1))


def a_invariant_crystal(N: int) -> Fraction:
    res = compute_a_invariant_crystal(N)
    if not res.proportional:
        raise AssertionError("P1 P2 P1 is not proportional to P1")
    return res.value


@dataclass
class MultiplicityVerdict:
    ok: bool
    crystal: dict
    pieri: dict
    sizes: list[int]

    def __bool__(self):
        return self.ok


def multiplicity_compare(n: int, N: int) -> MultiplicityVerdict:
    """Component census of X_N^(x)n by highest weight against the Pieri multiplicities f^mu."""
    if n > N:
        raise ValueError("need n <= N so that truncation loses nothing")
    comps = decompose(N, n)
    census = Counter(c.shape for c in comps)
    expected = {mu: m for mu, m in power_decompose(n).items() if len(mu) <= N}
    crystal = dict(sorted(census.items(), reverse=True))
    return MultiplicityVerdict(crystal == expected, crystal, expected, sorted((c.size for c in comps), reverse=True))
