"""Multiplicative cohomology of cosimplicial groups of units.

``sweedler_cohomology`` transports the unit groups of the cobar complex of
k[G] to additive Z/(p-1)-cochains by a discrete logarithm and reads the answer
off rational ranks and local Smith forms (universal coefficients).
``unit_cohomology`` enumerates unit groups directly, or splits each level into
field factors and transports units to cyclic groups by a discrete logarithm.
"""
from __future__ import annotations

import itertools
import math
from collections import Counter
from dataclasses import dataclass, field

import numpy as np

from .. import _kernels
from ..algebra import TensorPowerAlgebra, TooLargeError, apply, enum_cap, vec_equal
from ..cosimplicial import CosimplicialComplex
from ..exact.fields import GF, PrimeField
from ..exact.integer import integer_kernel, lattice_basis, smith_invariants
from ..exact.matrix import Matrix
from .complexes import cobar_complex
from .core import FiniteGroup, group_algebra

RANK_PRIME = 2_147_483_647


def _factor(n: int) -> dict[int, int]:
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


@dataclass(frozen=True)
class AbelianGroup:
    """Finite abelian group by invariant factors d_1 | d_2 | ... (all > 1)."""

    invariants: tuple[int, ...] = ()

    @classmethod
    def from_cyclic(cls, orders) -> "AbelianGroup":
        """Normalise a direct sum of cyclic groups Z/n_i."""
        primary: dict[int, list[int]] = {}
        for n in orders:
            for ell, k in _factor(int(n)).items():
                primary.setdefault(ell, []).append(ell ** k)
        for ell in primary:
            primary[ell].sort(reverse=True)
        length = max((len(v) for v in primary.values()), default=0)
        inv = []
        for i in range(length):
            inv.append(math.prod(v[i] for v in primary.values() if i < len(v)))
        return cls(tuple(sorted(inv)))

    @property
    def order(self) -> int:
        return math.prod(self.invariants)

    @property
    def is_trivial(self) -> bool:
        return not self.invariants

    def __str__(self):
        return " + ".join(f"Z/{d}" for d in self.invariants) or "0"

    def to_json(self):
        return list(self.invariants)


def _ilog(ell: int, c: int) -> int:
    e = 0
    while c % ell == 0 and c > 1:
        c //= ell
        e += 1
    if c != 1:
        raise AssertionError("torsion count is not a prime power")
    return e


def _prime_power_part(ell: int, counts: dict[int, int], k: int) -> list[int]:
    """ell-primary cyclic orders from c_j = #{x : ell^j x = 0}, j = 1..k."""
    logs = [0] + [_ilog(ell, counts[ell ** j]) for j in range(1, k + 1)]
    at_least = [logs[j] - logs[j - 1] for j in range(1, k + 1)] + [0]
    lam = []
    for j in range(1, k + 1):
        lam.extend([ell ** j] * (at_least[j - 1] - at_least[j]))
    return lam


# -- Sweedler cohomology -----------------------------------------------------------

def _pullback_differential(C: CosimplicialComplex, n: int) -> np.ndarray:
    """Integer matrix of sum_i (-1)^i d^i_(n+1); each coface must be a 0/1 pullback."""
    rows, cols = C.levels[n + 1].dim, C.levels[n].dim
    D = np.zeros((rows, cols), dtype=np.int64)
    for i in range(n + 2):
        m = C.coface(n + 1, i).data.astype(np.int64)
        if not (np.isin(m, (0, 1)).all() and (m.sum(axis=1) == 1).all()):
            raise ValueError(f"coface d^{i}_{n + 1} is not a pullback of functions")
        D += m if i % 2 == 0 else -m
    return D


def _rank_and_torsion(D: np.ndarray, m: int, bound: int) -> tuple[int, dict[int, list[int]]]:
    """Rational rank and, per prime ell | m, the ell-adic gcds gcd(d_i, ell^k) of the invariants."""
    if D.size == 0:
        return 0, {}
    if RANK_PRIME <= bound:
        raise ValueError("rank prime must exceed the exponent bound")
    r = _kernels.rank_mod_p(np.mod(D, RANK_PRIME), RANK_PRIME)
    torsion = {}
    for ell, k in _factor(m).items():
        vals = _kernels.smith_local(D, ell, k)
        gcds = [ell ** v for v in vals] + [ell ** k] * (r - len(vals))
        torsion[ell] = gcds
    return r, torsion


def sweedler_cohomology(G: FiniteGroup, p: int, n: int) -> AbelianGroup:
    """h^n of the unit groups of the cobar complex of F_p[G]."""
    if G.order > 8:
        raise TooLargeError("groups of order above 8 are outside the desk-scale window")
    if n < 0:
        raise ValueError("n must be nonnegative")
    m = p - 1
    if m == 1:
        return AbelianGroup()
    C = cobar_complex(group_algebra(G, GF(p)), n + 1)
    N_n = C.levels[n].dim
    r_prev, tors_prev = (0, {}) if n == 0 else _rank_and_torsion(_pullback_differential(C, n - 1), m, G.order)
    r_n, tors_n = _rank_and_torsion(_pullback_differential(C, n), m, G.order)
    cyclic = [m] * (N_n - r_n - r_prev)
    for tors in (tors_prev, tors_n):
        for gcds in tors.values():
            cyclic.extend(g for g in gcds if g > 1)
    return AbelianGroup.from_cyclic(cyclic)


# -- brute-force unit cohomology ---------------------------------------------------

def _key(v) -> tuple:
    return tuple(int(x) for x in v)


def multiplicative_differential(C: CosimplicialComplex, n: int, a, a_inv) -> np.ndarray:
    """prod_i d^i_(n+1)(a)^((-1)^i), using d^i(a)^-1 = d^i(a^-1)."""
    tgt = C.levels[n + 1]
    factors = [apply(C.coface(n + 1, i), a if i % 2 == 0 else a_inv) for i in range(n + 2)]
    return tgt.product(factors)


@dataclass
class UnitCohomology:
    group: AbelianGroup
    cocycles: int
    coboundaries: int
    details: dict = field(default_factory=dict)


def _units_with_inverses(A, cap):
    out = []
    for a in A.elements(cap):
        inv = A.inverse(a)
        if inv is not None:
            out.append((a, inv))
    return out


def _power(A, a, k):
    result = A.unit
    base = a
    while k:
        if k & 1:
            result = A.multiply(result, base)
        base = A.multiply(base, base)
        k >>= 1
    return result


def unit_cohomology(C: CosimplicialComplex, n: int, cap: int | None = None,
                    method: str = "auto") -> UnitCohomology:
    """ker / im of the multiplicative alternating differential.

    ``method`` is "enumerate", "split" or "auto" (split when every level is a
    product of fields, enumerate otherwise).
    """
    if not isinstance(C.field, PrimeField):
        raise TooLargeError(f"unit enumeration needs a prime field, got {C.field}")
    if n + 1 > C.top:
        raise ValueError(f"degree {n} needs level {n + 1}")
    for lv in range(max(n - 1, 0), n + 2):
        if not C.levels[lv].is_commutative:
            raise ValueError(f"level {lv} is not commutative")
    cap = enum_cap() if cap is None else cap
    if method not in ("auto", "enumerate", "split"):
        raise ValueError(f"unknown method {method!r}")
    if method == "split":
        return _split_unit_cohomology(C, n, cap)
    if method == "auto":
        try:
            return _split_unit_cohomology(C, n, cap)
        except NotReducedError:
            pass
    A = C.levels[n]
    units = _units_with_inverses(A, cap)
    one_next = C.levels[n + 1].unit
    f = C.field
    cocycles = [a for a, ai in units if vec_equal(f, multiplicative_differential(C, n, a, ai), one_next)]
    if n >= 1:
        bounds = {_key(multiplicative_differential(C, n - 1, c, ci)) for c, ci in _units_with_inverses(C.levels[n - 1], cap)}
    else:
        bounds = {_key(A.unit)}
    zset = {_key(z) for z in cocycles}
    if not bounds <= zset:
        raise AssertionError("a coboundary fails the cocycle condition; the complex is malformed")
    order = len(zset) // len(bounds)
    counts = {}
    for ell, k in _factor(order).items():
        for j in range(1, k + 1):
            q = ell ** j
            hits = sum(1 for z in cocycles if _key(_power(A, z, q)) in bounds)
            counts[q] = hits // len(bounds)
    cyclic = []
    for ell, k in _factor(order).items():
        cyclic.extend(_prime_power_part(ell, counts, k))
    group = AbelianGroup.from_cyclic(cyclic)
    if group.order != order:
        raise AssertionError(f"recovered group {group} has order {group.order}, expected {order}")
    return UnitCohomology(group, len(zset), len(bounds), {"method": "enumerate", "units": len(units)})


# -- split route: field factors and discrete logarithms ---------------------------------

class NotReducedError(ValueError):
    """A level has nilpotents, so it is not a product of fields."""


@dataclass
class _Factor:
    """One field factor e A with a primitive element and its discrete log table.

    When e is a basis vector (``coord`` set), logs are keyed by that coordinate.
    """

    idempotent: np.ndarray
    degree: int
    generator: np.ndarray
    logs: dict
    coord: int | None = None

    @property
    def order(self) -> int:
        return len(self.logs)

    def log(self, v) -> int:
        return self.logs[int(v[self.coord])] if self.coord is not None else self.logs[_key(v)]

    def contains_image_of(self, B, idem) -> bool:
        """Does idem act as 1 on this factor?"""
        if self.coord is not None:
            return int(idem[self.coord]) == 1
        return vec_equal(B.field, B.multiply(idem, self.idempotent), self.idempotent)

    def project(self, B, x):
        return x if self.coord is not None else B.multiply(x, self.idempotent)


def _idempotent_basis(A) -> bool:
    """Is the basis a complete set of orthogonal idempotents (a function algebra)?"""
    if isinstance(A, TensorPowerAlgebra):
        return _idempotent_basis(A.base)
    d = A.dim
    target = np.zeros((d, d, d), dtype=np.int64)
    for i in range(d):
        target[i, i, i] = 1
    return vec_equal(A.field, A.mult, target)


def _function_algebra_factors(A) -> list[_Factor]:
    p = A.field.p
    g = next(x for x in range(1, p) if len({pow(x, k, p) for k in range(p - 1)}) == p - 1)
    logs = {pow(g, k, p): k for k in range(p - 1)}
    return [_Factor(A.basis(i), 1, A.field.reduce(A.basis(i) * g), logs, coord=i) for i in range(A.dim)]


def _primitive_idempotents(A) -> list[np.ndarray]:
    """Split 1 along the Frobenius-fixed subalgebra, which is F_p^r for a reduced algebra."""
    f = A.field
    p = f.p
    frob = np.stack([_power(A, A.basis(i), p) for i in range(A.dim)], axis=1)
    fixed = Matrix._wrap(f.reduce(frob - np.eye(A.dim, dtype=np.int64)), f).kernel_basis()
    idems = [A.unit]
    for b in (v.data.reshape(-1) for v in fixed):
        nxt = []
        for e in idems:
            x = A.multiply(b, e)
            for lam in range(p):
                g = e
                for mu in range(p):
                    if mu != lam:
                        g = A.multiply(g, f.reduce((x - mu * e) * pow(lam - mu, -1, p)))
                if np.any(g):
                    nxt.append(g)
        idems = nxt
    if len(idems) != len(fixed):
        raise NotReducedError("level is not reduced; it does not split into fields")
    return idems


def _split_level(A, cap: int) -> list[_Factor]:
    if _idempotent_basis(A):
        return _function_algebra_factors(A)
    f = A.field
    out = []
    for e in _primitive_idempotents(A):
        span = A.left_matrix(e)
        cols, basis = [], []
        for j in range(A.dim):
            trial = cols + [span.data[:, j]]
            if Matrix._wrap(np.stack(trial, axis=1), f).rank() == len(trial):
                cols = trial
        d = len(cols)
        if f.p ** d > cap:
            raise TooLargeError(f"field factor of size {f.p ** d} exceeds the cap {cap}")
        N = f.p ** d - 1
        basis = np.stack(cols)
        primes = list(_factor(N))
        gen = None
        for coords in itertools.product(range(f.p), repeat=d):
            g = f.reduce(np.asarray(coords, dtype=np.int64) @ basis)
            if not np.any(g):
                continue
            if not vec_equal(f, _power(A, g, N), e):
                continue
            if all(not vec_equal(f, _power(A, g, N // ell), e) for ell in primes):
                gen = g
                break
        if gen is None:
            raise NotReducedError("field factor has no primitive element; the level is not a product of fields")
        logs, x = {}, e
        for k in range(N):
            logs[_key(x)] = k
            x = A.multiply(x, gen)
        if len(logs) != N:
            raise AssertionError("discrete log table is not injective")
        out.append(_Factor(e, d, gen, logs))
    return out


def _log_matrix(phi: Matrix, src: list[_Factor], tgt: list[_Factor], B) -> list[list[int]]:
    """Integer matrix of an algebra map on the product of cyclic unit groups."""
    f = phi.field
    L = [[0] * len(src) for _ in tgt]
    images = [(apply(phi, a.idempotent), apply(phi, a.generator)) for a in src]
    for bi, b in enumerate(tgt):
        hits = [ai for ai, (pe, _) in enumerate(images) if b.contains_image_of(B, pe)]
        if len(hits) != 1:
            raise ValueError("coface does not map field factors to field factors")
        ai = hits[0]
        L[bi][ai] = b.log(b.project(B, images[ai][1]))
    return L


def _log_differential(C: CosimplicialComplex, n: int, split) -> list[list[int]]:
    src, tgt = split[n], split[n + 1]
    D = [[0] * len(src) for _ in tgt]
    for i in range(n + 2):
        L = _log_matrix(C.coface(n + 1, i), src, tgt, C.levels[n + 1])
        sign = 1 if i % 2 == 0 else -1
        for r in range(len(tgt)):
            for c in range(len(src)):
                D[r][c] += sign * L[r][c]
    return D


def _abs_det(basis: list[list[int]]) -> int:
    return math.prod(abs(basis[i][i]) for i in range(len(basis))) if basis else 1


def _split_unit_cohomology(C: CosimplicialComplex, n: int, cap: int) -> UnitCohomology:
    split = {lv: _split_level(C.levels[lv], cap) for lv in range(max(n - 1, 0), n + 2)}
    orders = [fa.order for fa in split[n]]
    r = len(orders)
    tgt_orders = [fa.order for fa in split[n + 1]]
    D = _log_differential(C, n, split)
    # cocycles: x with D x = 0 in prod Z/N', lifted to a lattice containing diag(N)
    aug = [row + [-tgt_orders[i] if j == i else 0 for j in range(len(tgt_orders))] for i, row in enumerate(D)]
    ker = integer_kernel(aug, r + len(tgt_orders))
    K = lattice_basis([v[:r] for v in ker] + [[N if j == i else 0 for j in range(r)] for i, N in enumerate(orders)])
    gens = [[N if j == i else 0 for j in range(r)] for i, N in enumerate(orders)]
    if n >= 1:
        Dp = _log_differential(C, n - 1, split)
        gens += [[Dp[i][j] for i in range(r)] for j in range(len(split[n - 1]))]
    I = lattice_basis(gens)
    if len(K) != r or len(I) != r:
        raise AssertionError("cochain lattices must have full rank")
    Kinv = Matrix.from_rows(K).inverse()
    coords = []
    for v in I:
        c = (Matrix.from_rows([v]) @ Kinv).data.reshape(-1)
        if any(x.denominator != 1 for x in c):
            raise AssertionError("coboundaries are not cocycles; the complex is malformed")
        coords.append([int(x) for x in c])
    group = AbelianGroup.from_cyclic(d for d in smith_invariants(coords) if d > 1)
    total = math.prod(orders)
    cocycles, bounds = total // _abs_det(K), total // _abs_det(I)
    if cocycles // bounds != group.order:
        raise AssertionError("lattice indices disagree with the Smith invariants")
    details = {"method": "split", "factors": [[fa.degree for fa in split[lv]] for lv in sorted(split)]}
    return UnitCohomology(group, cocycles, bounds, details)


# -- K_0 shadow for G-graded vector spaces ---------------------------------------------

def _tuples(G: FiniteGroup, n: int):
    return itertools.product(range(G.order), repeat=n)


def _index(G: FiniteGroup, t) -> int:
    idx = 0
    for g in t:
        idx = idx * G.order + g
    return idx


def hochschild_coface(G: FiniteGroup, c: dict, n: int, i: int) -> dict:
    """Coface d^i from n-cochains to (n+1)-cochains on Z[G] with trivial coefficients."""
    out = {}
    for t in _tuples(G, n + 1):
        if i == 0:
            s = t[1:]
        elif i == n + 1:
            s = t[:-1]
        else:
            s = t[: i - 1] + (G.mul(t[i - 1], t[i]),) + t[i + 1:]
        out[t] = c[s]
    return out


@dataclass
class K0Shadow:
    cochain: dict
    commutes: bool
    cocycle_cobar: bool
    cocycle_hochschild: bool
    coboundary_cobar: bool
    coboundary_hochschild: bool

    @property
    def consistent(self) -> bool:
        return (self.commutes and self.cocycle_cobar == self.cocycle_hochschild
                and self.coboundary_cobar == self.coboundary_hochschild)


def k0_shadow(G: FiniteGroup, p: int, alpha, n: int, cap: int | None = None) -> K0Shadow:
    """Shadow of an automorphism of F^(x)n on Comod-F_p[G] as a Hochschild cochain.

    ``alpha`` maps n-tuples of group elements (simple objects) to nonzero residues mod p.
    """
    f = GF(p)
    cap = enum_cap() if cap is None else cap
    get = alpha if callable(alpha) else (lambda t: alpha[tuple(t)])
    cochain = {t: int(get(t)) % p for t in _tuples(G, n)}
    if any(v == 0 for v in cochain.values()):
        raise ValueError("automorphism values must be invertible")
    C = cobar_complex(group_algebra(G, f), n + 1)
    vec = np.zeros(G.order ** n, dtype=np.int64)
    for t, v in cochain.items():
        vec[_index(G, t)] = v

    commutes = True
    images = []
    for i in range(n + 2):
        img = apply(C.coface(n + 1, i), vec)
        hoch = hochschild_coface(G, cochain, n, i)
        if any(img[_index(G, t)] != v for t, v in hoch.items()):
            commutes = False
        images.append(hoch)

    def mult_diff(ch: dict, deg: int) -> dict:
        faces = [hochschild_coface(G, ch, deg, i) for i in range(deg + 2)]
        out = {}
        for t in _tuples(G, deg + 1):
            val = 1
            for i, face in enumerate(faces):
                val = val * (face[t] if i % 2 == 0 else pow(face[t], -1, p)) % p
            out[t] = val
        return out

    # Hochschild side: pointwise formula on tuples
    d_alpha = {}
    for t in _tuples(G, n + 1):
        val = 1
        for i, img in enumerate(images):
            val = val * (img[t] if i % 2 == 0 else pow(img[t], -1, p)) % p
        d_alpha[t] = val
    cocycle_h = all(v == 1 for v in d_alpha.values())

    # cobar side: multiplicative differential in the function algebra
    inv = np.array([pow(int(v), -1, p) for v in vec], dtype=np.int64)
    d_vec = multiplicative_differential(C, n, vec, inv)
    cocycle_c = vec_equal(f, d_vec, C.levels[n + 1].unit)

    # coboundaries: enumerate (n-1)-cochains
    count = (p - 1) ** (G.order ** (n - 1)) if n >= 1 else 1
    if count > cap:
        raise TooLargeError(f"{count} candidate (n-1)-cochains exceed the cap {cap}")
    target = {t: v for t, v in cochain.items()}
    cob_h = cob_c = False
    if n == 0:
        cob_h = cob_c = all(v == 1 for v in cochain.values())
    else:
        prev = list(_tuples(G, n - 1))
        for vals in itertools.product(range(1, p), repeat=len(prev)):
            beta = dict(zip(prev, vals))
            if not cob_h and mult_diff(beta, n - 1) == target:
                cob_h = True
            if not cob_c:
                bvec = np.zeros(G.order ** (n - 1), dtype=np.int64)
                for t, v in beta.items():
                    bvec[_index(G, t)] = v
                binv = np.array([pow(int(v), -1, p) for v in bvec], dtype=np.int64)
                if vec_equal(f, multiplicative_differential(C, n - 1, bvec, binv), vec):
                    cob_c = True
            if cob_h and cob_c:
                break
    return K0Shadow(cochain, commutes, cocycle_c, cocycle_h, cob_c, cob_h)
