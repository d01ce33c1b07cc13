"""Cosimplicial towers of finite-dimensional algebras.

Level n is E([n]). The coface d^i_n : E_(n-1) -> E_n (i = 0..n) is induced by
the injection [n-1] -> [n] missing i, and the codegeneracy s^i_n : E_(n+1) -> E_n
(i = 0..n) by the surjection [n+1] -> [n] hitting i twice. Maps are stored as
exact matrices acting on coordinate columns.
"""
from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass

import numpy as np

from .algebra import Algebra, TooLargeError, apply, vec_equal
from .exact.fields import Field, field_from_json, field_to_json, scalar_from_json, scalar_to_json
from .exact.matrix import Matrix


# -- the simplex category ---------------------------------------------------------

@dataclass(frozen=True)
class NondecreasingMap:
    """A nondecreasing map [l] -> [m] given by its values."""

    values: tuple[int, ...]
    m: int

    def __post_init__(self):
        vals = tuple(int(v) for v in self.values)
        object.__setattr__(self, "values", vals)
        if not vals:
            raise ValueError("domain [l] is never empty")
        if any(v < 0 or v > self.m for v in vals):
            raise ValueError(f"values {vals} leave [0, {self.m}]")
        if any(vals[i] > vals[i + 1] for i in range(len(vals) - 1)):
            raise ValueError(f"values {vals} are not nondecreasing")

    @property
    def l(self) -> int:
        return len(self.values) - 1

    @classmethod
    def coface(cls, n: int, i: int) -> "NondecreasingMap":
        """Injection [n-1] -> [n] skipping i."""
        if not 0 <= i <= n:
            raise ValueError(f"coface index {i} outside 0..{n}")
        return cls(tuple(v if v < i else v + 1 for v in range(n)), n)

    @classmethod
    def codegeneracy(cls, n: int, i: int) -> "NondecreasingMap":
        """Surjection [n+1] -> [n] taking the value i twice."""
        if not 0 <= i <= n:
            raise ValueError(f"codegeneracy index {i} outside 0..{n}")
        return cls(tuple(v if v <= i else v - 1 for v in range(n + 2)), n)

    @classmethod
    def identity(cls, n: int) -> "NondecreasingMap":
        return cls(tuple(range(n + 1)), n)

    @classmethod
    def all_maps(cls, l: int, m: int):
        for vals in itertools.combinations_with_replacement(range(m + 1), l + 1):
            yield cls(vals, m)

    @property
    def image(self) -> tuple[int, ...]:
        return tuple(sorted(set(self.values)))

    def __call__(self, x: int) -> int:
        return self.values[x]

    def compose(self, inner: "NondecreasingMap") -> "NondecreasingMap":
        """self after inner."""
        if inner.m != self.l:
            raise ValueError("maps are not composable")
        return NondecreasingMap(tuple(self.values[v] for v in inner.values), self.m)

    def factor(self) -> tuple[list[int], list[int]]:
        """Coface and codegeneracy words of the epi-mono factorisation.

        Returns ``(degeneracies, faces)``: apply the codegeneracies s^x in the
        listed order (each given by its index x, acting on the current level),
        then the cofaces d^i in the listed order.
        """
        vals = list(self.values)
        degens = []
        while True:
            x = next((j for j in range(len(vals) - 1) if vals[j] == vals[j + 1]), None)
            if x is None:
                break
            degens.append(x)
            del vals[x + 1]
        missing = [v for v in range(self.m + 1) if v not in set(vals)]
        return degens, missing

    def __str__(self):
        return f"[{self.l}]->[{self.m}]:{self.values}"


def _block_chain(first: tuple[int, ...], second: tuple[int, ...]) -> int | None:
    """Fewest alternating contiguous blocks F1 <= S1 <= F2 <= ... covering both sets."""
    nf, ns = len(first), len(second)
    # state: (used of first, used of second, kind of the last block, last max)
    start = (0, 0, 1, -1)  # pretend a 'second' block came before so 'first' opens
    dist = {start: 0}
    queue = deque([start])
    best = None
    while queue:
        i, j, last, mx = state = queue.popleft()
        d = dist[state]
        if i == nf and j == ns:
            if best is None or d < best:
                best = d
            continue
        seq, used, kind = (first, i, 0) if last == 1 else (second, j, 1)
        if used == len(seq) or seq[used] < mx:
            continue
        for end in range(used + 1, len(seq) + 1):
            nxt = (end, j, 0, seq[end - 1]) if kind == 0 else (i, end, 1, seq[end - 1])
            if nxt not in dist:
                dist[nxt] = d + 1
                queue.append(nxt)
    return best


def linking_coefficient(tau: NondecreasingMap, pi: NondecreasingMap) -> int:
    """Smallest n admitting interleaved block decompositions of the images with s + t = n + 1."""
    if tau.m != pi.m:
        raise ValueError("maps must share a codomain")
    a, b = tau.image, pi.image
    options = [c for c in (_block_chain(a, b), _block_chain(b, a)) if c is not None]
    if not options:
        raise ValueError("images admit no interleaving")  # unreachable for nonempty images
    return min(options) - 1


def commutativity_bound(n: int) -> int:
    """Largest linking coefficient whose pairs must commute in an n-commutative complex."""
    return n if n < 3 else 2 * n - 1


# -- the complex ------------------------------------------------------------------

@dataclass
class CommutativityVerdict:
    ok: bool
    counterexample: tuple | None = None

    def __bool__(self):
        return self.ok


class CosimplicialComplex:
    """Finite tower E_0, ..., E_top with cofaces and codegeneracies."""

    def __init__(self, levels: list[Algebra], cofaces: dict, codegeneracies: dict, name: str = ""):
        self.levels = list(levels)
        self.cofaces = dict(cofaces)
        self.codegeneracies = dict(codegeneracies)
        self.name = name
        self.field: Field = self.levels[0].field
        top = self.top
        for n in range(1, top + 1):
            for i in range(n + 1):
                m = self.cofaces[(n, i)]
                if m.shape != (self.levels[n].dim, self.levels[n - 1].dim):
                    raise ValueError(f"coface ({n},{i}) has shape {m.shape}")
        for n in range(top):
            for i in range(n + 1):
                m = self.codegeneracies[(n, i)]
                if m.shape != (self.levels[n].dim, self.levels[n + 1].dim):
                    raise ValueError(f"codegeneracy ({n},{i}) has shape {m.shape}")
        self._cache: dict = {}

    @property
    def top(self) -> int:
        return len(self.levels) - 1

    def __repr__(self):
        dims = [lv.dim for lv in self.levels]
        return f"CosimplicialComplex({self.name or 'E'}, dims={dims}, over {self.field})"

    @classmethod
    def constant(cls, algebra: Algebra, top: int) -> "CosimplicialComplex":
        """Every level equal to ``algebra`` and every structure map the identity."""
        eye = Matrix.identity(algebra.dim, algebra.field)
        cof = {(n, i): eye for n in range(1, top + 1) for i in range(n + 1)}
        cod = {(n, i): eye for n in range(top) for i in range(n + 1)}
        return cls([algebra] * (top + 1), cof, cod, name=f"const({algebra.name})")

    # -- functoriality ---------------------------------------------------------
    def coface(self, n: int, i: int) -> Matrix:
        return self.cofaces[(n, i)]

    def codegeneracy(self, n: int, i: int) -> Matrix:
        return self.codegeneracies[(n, i)]

    def E(self, tau: NondecreasingMap) -> Matrix:
        """The linear map E_l -> E_m induced by a nondecreasing map."""
        key = ("E", tau)
        if key in self._cache:
            return self._cache[key]
        if max(tau.l, tau.m) > self.top:
            raise ValueError(f"{tau} leaves the stored levels 0..{self.top}")
        degens, faces = tau.factor()
        out = Matrix.identity(self.levels[tau.l].dim, self.field)
        level = tau.l
        for x in degens:
            level -= 1
            out = self.codegeneracy(level, x) @ out
        for i in faces:
            level += 1
            out = self.coface(level, i) @ out
        self._cache[key] = out
        return out

    def map_element(self, m: Matrix, a) -> np.ndarray:
        return apply(m, np.asarray(a))

    # -- identities ------------------------------------------------------------
    def check_identities(self, top: int | None = None) -> list[str]:
        """All cosimplicial identities among stored maps; returns failure labels."""
        top = self.top if top is None else min(top, self.top)
        d, s = self.coface, self.codegeneracy
        bad = []
        for n in range(1, top):
            for j in range(n + 2):
                for i in range(j):
                    if d(n + 1, j) @ d(n, i) != d(n + 1, i) @ d(n, j - 1):
                        bad.append(f"d^{j}_{n + 1} d^{i}_{n} != d^{i}_{n + 1} d^{j - 1}_{n}")
        for n in range(top - 1):
            for j in range(n + 1):
                for i in range(j + 1):
                    if s(n, j) @ s(n + 1, i) != s(n, i) @ s(n + 1, j + 1):
                        bad.append(f"s^{j}_{n} s^{i}_{n + 1} != s^{i}_{n} s^{j + 1}_{n + 1}")
        for n in range(top):
            ident = Matrix.identity(self.levels[n].dim, self.field)
            for j in range(n + 1):
                for i in range(n + 2):
                    lhs = s(n, j) @ d(n + 1, i)
                    if i < j:
                        rhs = d(n, i) @ s(n - 1, j - 1)
                    elif i in (j, j + 1):
                        rhs = ident
                    else:
                        rhs = d(n, i - 1) @ s(n - 1, j)
                    if lhs != rhs:
                        bad.append(f"s^{j}_{n} d^{i}_{n + 1}")
        return bad

    def check_homomorphisms(self, top: int | None = None) -> list[str]:
        """Each stored map preserves the unit and basis products."""
        top = self.top if top is None else min(top, self.top)
        bad = []
        items = [(("d", k), m, k[0] - 1, k[0]) for k, m in self.cofaces.items() if k[0] <= top]
        items += [(("s", k), m, k[0] + 1, k[0]) for k, m in self.codegeneracies.items() if k[0] + 1 <= top]
        for label, m, src, dst in items:
            A, B = self.levels[src], self.levels[dst]
            if not B.equal(apply(m, A.unit), B.unit):
                bad.append(f"{label} misses the unit")
                continue
            imgs = [apply(m, A.basis(i)) for i in range(A.dim)]
            for i in range(A.dim):
                for j in range(A.dim):
                    if not B.equal(apply(m, A.multiply(A.basis(i), A.basis(j))), B.multiply(imgs[i], imgs[j])):
                        bad.append(f"{label} not multiplicative on (e{i}, e{j})")
                        break
                else:
                    continue
                break
        return bad

    # -- n-commutativity ---------------------------------------------------------
    def is_n_commutative(self, n: int, max_level: int | None = None) -> CommutativityVerdict:
        """Check that E(tau)(a) and E(pi)(b) commute whenever link(tau, pi) is within the bound."""
        top = self.top if max_level is None else min(max_level, self.top)
        bound = commutativity_bound(n)
        for m in range(top + 1):
            target = self.levels[m]
            if target.is_commutative:
                continue
            for l in range(top + 1):
                maps = list(NondecreasingMap.all_maps(l, m))
                src = self.levels[l]
                images = {}
                for tau, pi in itertools.combinations_with_replacement(maps, 2):
                    if linking_coefficient(tau, pi) > bound:
                        continue
                    for t in (tau, pi):
                        if t not in images:
                            images[t] = self.E(t).data.T.copy()
                    hit = target.commutator_free(images[tau], images[pi])
                    if hit is not None:
                        return CommutativityVerdict(False, (tau, pi) + hit)
        return CommutativityVerdict(True)

    # -- nonabelian cocycles -------------------------------------------------------
    def _faces(self, level: int, a, indices) -> list:
        return [apply(self.coface(level, i), np.asarray(a)) for i in indices]

    def zn_sides(self, a, n: int):
        """Both sides of the z^n equation for a in E_n."""
        if n + 1 > self.top:
            raise ValueError(f"level {n + 1} is not stored")
        evens = [2 * i for i in range((n + 1) // 2 + 1)]
        odds = [2 * i + 1 for i in range(n // 2, -1, -1)]
        tgt = self.levels[n + 1]
        return tgt.product(self._faces(n + 1, a, evens)), tgt.product(self._faces(n + 1, a, odds))

    def is_zn_cocycle(self, a, n: int) -> bool:
        A = self.levels[n]
        a = A.element(a) if not isinstance(a, np.ndarray) else a
        if not A.is_unit(a):
            raise ValueError("z^n membership is defined for invertible elements only")
        lhs, rhs = self.zn_sides(a, n)
        return self.levels[n + 1].equal(lhs, rhs)

    def zn_related_by(self, a, b, c, n: int) -> bool:
        """a * prod d^(2i)(c) == prod_desc d^(2i+1)(c) * b in E_n."""
        A = self.levels[n]
        evens = [2 * i for i in range(n // 2 + 1)]
        odds = [2 * i + 1 for i in range((n - 1) // 2, -1, -1)]
        lhs = A.multiply(a, A.product(self._faces(n, c, evens)))
        rhs = A.multiply(A.product(self._faces(n, c, odds)), b)
        return A.equal(lhs, rhs)

    def zn_equivalent(self, a, b, n: int, cap: int | None = None):
        """Search E_(n-1) for a unit c relating a and b; returns ``(verdict, c)``."""
        if n < 1:
            raise ValueError("the relation needs n >= 1")
        A, C = self.levels[n], self.levels[n - 1]
        a = np.asarray(a if isinstance(a, np.ndarray) else A.element(a))
        b = np.asarray(b if isinstance(b, np.ndarray) else A.element(b))
        for c in C.elements(cap):
            if not C.is_unit(c):
                continue
            if self.zn_related_by(a, b, c, n):
                return True, c
        return False, None

    # -- serialisation -----------------------------------------------------------
    def to_json(self) -> dict:
        def mat(m: Matrix):
            return [[scalar_to_json(x) for x in row] for row in m.tolist()]

        return {
            "name": self.name,
            "field": field_to_json(self.field),
            "levels": [lv.to_json() for lv in self.levels],
            "cofaces": [{"n": n, "i": i, "matrix": mat(m)} for (n, i), m in sorted(self.cofaces.items())],
            "codegeneracies": [{"n": n, "i": i, "matrix": mat(m)}
                               for (n, i), m in sorted(self.codegeneracies.items())],
        }

    @classmethod
    def from_json(cls, obj) -> "CosimplicialComplex":
        f = field_from_json(obj["field"])
        levels = [Algebra.from_json(lv, f) for lv in obj["levels"]]

        def mat(rows):
            return Matrix.from_rows([[scalar_from_json(x) for x in r] for r in rows], f)

        cof = {(e["n"], e["i"]): mat(e["matrix"]) for e in obj["cofaces"]}
        cod = {(e["n"], e["i"]): mat(e["matrix"]) for e in obj["codegeneracies"]}
        return cls(levels, cof, cod, name=obj.get("name", ""))


# -- tangent cohomology -------------------------------------------------------------

def differential(C: CosimplicialComplex, n: int) -> Matrix:
    """d_n = sum_i (-1)^i d^i_(n+1) : E_n -> E_(n+1)."""
    if not 0 <= n < C.top:
        raise ValueError(f"d_{n} needs levels {n} and {n + 1}; stored 0..{C.top}")
    out = Matrix.zeros(C.levels[n + 1].dim, C.levels[n].dim, C.field)
    for i in range(n + 2):
        term = C.coface(n + 1, i)
        out = out + term if i % 2 == 0 else out - term
    return out


def tangent_cohomology(C: CosimplicialComplex, n: int) -> int:
    """dim ker d_n - rank d_(n-1)."""
    if not 0 <= n < C.top:
        raise ValueError(f"tangent cohomology in degree {n} needs levels up to {n + 1}")
    r_n = differential(C, n).rank()
    r_prev = differential(C, n - 1).rank() if n >= 1 else 0
    return C.levels[n].dim - r_n - r_prev
