"""Finite groups, finite-dimensional bialgebras and finite field extensions."""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from ..algebra import Algebra, apply, vec_equal
from ..exact.fields import Field, PrimeField, field_from_json, field_to_json, scalar_from_json, scalar_to_json
from ..exact.matrix import Matrix


class BialgebraAxiomError(ValueError):
    pass


# -- finite groups ----------------------------------------------------------------

@dataclass(frozen=True)
class FiniteGroup:
    """Multiplication table on 0..n-1 with identity 0."""

    table: tuple[tuple[int, ...], ...]
    name: str = ""

    def __post_init__(self):
        n = len(self.table)
        if any(len(r) != n for r in self.table):
            raise ValueError("multiplication table must be square")
        if tuple(self.table[0]) != tuple(range(n)) or tuple(r[0] for r in self.table) != tuple(range(n)):
            raise ValueError("element 0 must be the identity")

    @property
    def order(self) -> int:
        return len(self.table)

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def inv(self, a: int) -> int:
        return self.table[a].index(0)

    def elements(self):
        return range(self.order)

    @cached_property
    def is_abelian(self) -> bool:
        return all(self.table[a][b] == self.table[b][a] for a in self.elements() for b in self.elements())

    def element_order(self, a: int) -> int:
        k, x = 1, a
        while x != 0:
            x = self.table[x][a]
            k += 1
        return k

    @classmethod
    def cyclic(cls, n: int) -> "FiniteGroup":
        return cls(tuple(tuple((a + b) % n for b in range(n)) for a in range(n)), f"Z{n}")

    @classmethod
    def symmetric(cls, n: int) -> "FiniteGroup":
        perms = sorted(itertools.permutations(range(n)))
        index = {p: i for i, p in enumerate(perms)}
        # (pq)(x) = p(q(x))
        table = tuple(tuple(index[tuple(p[q[x]] for x in range(n))] for q in perms) for p in perms)
        return cls(table, f"S{n}")

    def product(self, other: "FiniteGroup") -> "FiniteGroup":
        n, m = self.order, other.order
        table = tuple(
            tuple(self.table[a // m][b // m] * m + other.table[a % m][b % m] for b in range(n * m))
            for a in range(n * m))
        return FiniteGroup(table, f"{self.name}x{other.name}")


def small_groups(max_order: int = 6) -> list[FiniteGroup]:
    """One representative of every isomorphism class of order <= max_order (max 7)."""
    if max_order > 7:
        raise ValueError("the built-in census stops at order 7")
    Z = FiniteGroup.cyclic
    census = [Z(1), Z(2), Z(3), Z(4), Z(2).product(Z(2)), Z(5), Z(6), FiniteGroup.symmetric(3), Z(7)]
    return [g for g in census if g.order <= max_order]


# -- bialgebras -------------------------------------------------------------------

class FinBialgebra:
    """Algebra plus coproduct Delta (dim^2 x dim) and counit (1 x dim).

    Column j of ``comul`` holds Delta(e_j) in the lexicographic basis of H(x)H.
    """

    def __init__(self, algebra: Algebra, comul: Matrix, counit: Matrix, name: str = "", check: bool = True):
        self.algebra = algebra
        self.field: Field = algebra.field
        d = algebra.dim
        if comul.shape != (d * d, d) or counit.shape != (1, d):
            raise BialgebraAxiomError(f"coproduct/counit shapes {comul.shape}, {counit.shape} do not fit dim {d}")
        self.comul = comul
        self.counit = counit
        self.name = name or algebra.name
        if check:
            bad = self.check_axioms()
            if bad:
                raise BialgebraAxiomError("; ".join(bad))

    @property
    def dim(self) -> int:
        return self.algebra.dim

    def __repr__(self):
        return f"FinBialgebra({self.name}, dim {self.dim} over {self.field})"

    @cached_property
    def square(self) -> Algebra:
        return self.algebra.tensor_power(2)

    def delta(self, h) -> np.ndarray:
        return apply(self.comul, np.asarray(h))

    def eps(self, h):
        return apply(self.counit, np.asarray(h))[0]

    def unit_column(self) -> Matrix:
        return Matrix._wrap(self.algebra.unit.reshape(-1, 1), self.field)

    def check_axioms(self) -> list[str]:
        bad = [f"algebra: {b}" for b in self.algebra.check_axioms()]
        A, f, d = self.algebra, self.field, self.dim
        I = Matrix.identity(d, f)
        D, e = self.comul, self.counit
        if D.kron(I) @ D != I.kron(D) @ D:
            bad.append("coassociativity fails")
        if e.kron(I) @ D != I or I.kron(e) @ D != I:
            bad.append("counit axiom fails")
        AA = self.square
        if not AA.equal(self.delta(A.unit), AA.unit):
            bad.append("Delta(1) != 1(x)1")
        if not vec_equal(f, np.asarray([self.eps(A.unit)]), np.asarray([f.one])):
            bad.append("eps(1) != 1")
        dl = [self.delta(A.basis(i)) for i in range(d)]
        el = [self.eps(A.basis(i)) for i in range(d)]
        for i in range(d):
            for j in range(d):
                prod = A.multiply(A.basis(i), A.basis(j))
                if not AA.equal(self.delta(prod), AA.multiply(dl[i], dl[j])):
                    bad.append(f"Delta not multiplicative on (e{i}, e{j})")
                    return bad
                if not vec_equal(f, np.asarray([self.eps(prod)]), f.reduce(np.asarray([el[i] * el[j]]))):
                    bad.append(f"eps not multiplicative on (e{i}, e{j})")
                    return bad
        return bad

    def is_cocommutative(self) -> bool:
        d = self.dim
        flip = flip_matrix(d, self.field)
        return flip @ self.comul == self.comul

    def twisted(self, x) -> "FinBialgebra":
        """(H, x Delta(.) x^-1, eps); raises if the result breaks an axiom."""
        AA = self.square
        x = np.asarray(x)
        xinv = AA.inverse(x)
        if xinv is None:
            raise ValueError("twist element is not invertible")
        cols = [AA.multiply(AA.multiply(x, self.delta(self.algebra.basis(j))), xinv) for j in range(self.dim)]
        comul = Matrix._wrap(np.stack(cols, axis=1), self.field)
        return FinBialgebra(self.algebra, comul, self.counit, name=f"{self.name}^x")

    # -- serialisation -----------------------------------------------------------
    def to_json(self) -> dict:
        obj = self.algebra.to_json()
        obj["field"] = field_to_json(self.field)
        obj["comul"] = [[scalar_to_json(x) for x in col] for col in self.comul.T.tolist()]
        obj["counit"] = [scalar_to_json(x) for x in self.counit.tolist()[0]]
        obj["name"] = self.name
        return obj

    @classmethod
    def from_json(cls, obj) -> "FinBialgebra":
        """``comul[i]`` lists the coordinates of Delta(e_i); ``mul[i][j][k]`` is the e_k-coefficient of e_i e_j."""
        for key in ("dim", "mul", "unit", "comul", "counit"):
            if key not in obj:
                raise ValueError(f"bialgebra JSON lacks field {key!r}")
        field = field_from_json(obj.get("field"))
        A = Algebra.from_json(obj, field)
        if A.dim != obj["dim"]:
            raise ValueError(f"field 'dim' = {obj['dim']} but 'mul' has dimension {A.dim}")
        rows = [[scalar_from_json(x) for x in r] for r in obj["comul"]]
        comul = Matrix.from_rows(rows, field).T
        counit = Matrix.from_rows([[scalar_from_json(x) for x in obj["counit"]]], field)
        return cls(A, comul, counit, name=obj.get("name", ""))


def flip_matrix(d: int, field: Field) -> Matrix:
    """Permutation e_i(x)e_j -> e_j(x)e_i on the lexicographic basis."""
    rows = field.zeros((d * d, d * d))
    for i in range(d):
        for j in range(d):
            rows[j * d + i, i * d + j] = field.one
    return Matrix._wrap(rows, field)


def group_algebra(G: FiniteGroup, field: Field) -> FinBialgebra:
    n = G.order
    mult = np.zeros((n, n, n), dtype=np.int64)
    for a in range(n):
        for b in range(n):
            mult[a, b, G.mul(a, b)] = 1
    unit = np.zeros(n, dtype=np.int64)
    unit[0] = 1
    A = Algebra(field, mult.astype(object) if field.dtype is object else mult, unit.tolist(),
                name=f"{field}[{G.name}]", check=False)
    comul = field.zeros((n * n, n))
    for g in range(n):
        comul[g * n + g, g] = field.one
    counit = field.array([[1] * n])
    return FinBialgebra(A, Matrix._wrap(comul, field), Matrix._wrap(counit, field), name=A.name, check=False)


def truncated_polynomial(p: int) -> FinBialgebra:
    """F_p[x]/(x^p) with x primitive; a bialgebra because (x(x)1 + 1(x)x)^p = 0 in characteristic p."""
    from ..exact.fields import GF

    f = GF(p)
    mult = np.zeros((p, p, p), dtype=np.int64)
    for a in range(p):
        for b in range(p - a):
            mult[a, b, a + b] = 1
    unit = [1] + [0] * (p - 1)
    A = Algebra(f, mult, unit, name=f"GF({p})[x]/x^{p}")
    comul = np.zeros((p * p, p), dtype=np.int64)
    for k in range(p):
        for j in range(k + 1):
            comul[j * p + (k - j), k] = math.comb(k, j) % p
    counit = np.array([[1] + [0] * (p - 1)], dtype=np.int64)
    return FinBialgebra(A, Matrix._wrap(comul, f), Matrix._wrap(counit, f), name=A.name)


# -- finite field extensions ------------------------------------------------------

def _poly_mod_irreducible(p: int, m: int) -> tuple[int, ...]:
    """Smallest monic irreducible polynomial of degree m over F_p (ascending coefficients)."""
    if m == 1:
        return (0, 1)
    for tail in itertools.product(range(p), repeat=m):
        poly = tuple(tail) + (1,)
        if poly[0] == 0:
            continue
        if not any(_divides(q, poly, p) for d in range(1, m // 2 + 1) for q in _monics(p, d)):
            return poly
    raise RuntimeError("no irreducible polynomial found")  # pragma: no cover


def _monics(p, d):
    for tail in itertools.product(range(p), repeat=d):
        yield tuple(tail) + (1,)


def _divides(q, poly, p):
    r = list(poly)
    dq = len(q) - 1
    for k in range(len(r) - 1, dq - 1, -1):
        c = r[k] % p
        if c:
            for t in range(dq + 1):
                r[k - dq + t] = (r[k - dq + t] - c * q[t]) % p
    return not any(x % p for x in r[:dq])


def field_extension(p: int, m: int) -> Algebra:
    """F_(p^m) as an F_p-algebra on the power basis of an irreducible polynomial."""
    from ..exact.fields import GF

    poly = _poly_mod_irreducible(p, m)
    mult = np.zeros((m, m, m), dtype=np.int64)
    for a in range(m):
        for b in range(m):
            vec = [0] * (2 * m - 1)
            vec[a + b] = 1
            for k in range(2 * m - 2, m - 1, -1):
                c = vec[k]
                if c:
                    vec[k] = 0
                    for t in range(m):
                        vec[k - m + t] = (vec[k - m + t] - c * poly[t]) % p
            mult[a, b] = vec[:m]
    unit = [1] + [0] * (m - 1)
    return Algebra(GF(p), mult, unit, name=f"GF({p}^{m})")


def require_commutative(R: Algebra) -> Algebra:
    if not R.is_commutative:
        raise ValueError(f"{R} is not commutative")
    return R
