"""Finite-dimensional unital algebras given by structure constants.

Elements are 1-d numpy arrays in the field's storage dtype. The product is
e_i e_j = sum_k mult[i, j, k] e_k.
"""
from __future__ import annotations

import itertools
import os
from functools import cached_property

import numpy as np

from .exact.fields import QQ, Field, PrimeField, field_from_json, field_to_json, scalar_from_json, scalar_to_json
from .exact.matrix import Matrix

DEFAULT_ENUM_CAP = 10 ** 6


class TooLargeError(ValueError):
    """Raised when a brute-force enumeration would exceed its cap."""


def enum_cap() -> int:
    return int(os.environ.get("TWISTLAB_ENUM_CAP", DEFAULT_ENUM_CAP))


def vec_equal(field: Field, a, b) -> bool:
    if isinstance(field, PrimeField):
        return bool(np.array_equal(np.mod(a, field.p), np.mod(b, field.p)))
    return all(x == y for x, y in zip(np.asarray(a).reshape(-1), np.asarray(b).reshape(-1)))


def vec_is_zero(field: Field, a) -> bool:
    return field.is_zero_array(a)


def apply(m: Matrix, v: np.ndarray) -> np.ndarray:
    """Matrix times vector in the matrix's field."""
    return m.field.reduce(m.field.matmul(m.data, v.reshape(-1, 1)).reshape(-1))


def _contract(field: Field, a, b, mult):
    out = np.tensordot(np.tensordot(a, mult, axes=(0, 0)), b, axes=(0, 0))
    return field.reduce(out)


class Algebra:
    """Unital associative algebra over an exact field."""

    def __init__(self, field: Field, mult, unit, name: str = "", check: bool = True):
        self.field = field
        self.mult = field.array(mult)
        if self.mult.ndim != 3 or len(set(self.mult.shape)) != 1:
            raise ValueError(f"structure tensor must be dim x dim x dim, got {self.mult.shape}")
        self.unit = field.array(unit).reshape(-1)
        self.name = name
        if check:
            bad = self.check_axioms()
            if bad:
                raise ValueError(f"algebra axioms fail: {bad}")

    @property
    def dim(self) -> int:
        return self.mult.shape[0]

    def __repr__(self):
        return f"Algebra({self.name or 'dim ' + str(self.dim)} over {self.field})"

    # -- elements ------------------------------------------------------------
    def basis(self, i: int) -> np.ndarray:
        v = self.field.zeros(self.dim)
        v[i] = self.field.one
        return v

    def zero(self) -> np.ndarray:
        return self.field.zeros(self.dim)

    def element(self, coords) -> np.ndarray:
        v = self.field.array(list(coords)).reshape(-1)
        if v.shape[0] != self.dim:
            raise ValueError(f"expected {self.dim} coordinates, got {v.shape[0]}")
        return v

    def scalar(self, c) -> np.ndarray:
        return self.field.reduce(self.unit * self.field.coerce(c))

    def multiply(self, a, b) -> np.ndarray:
        return _contract(self.field, a, b, self.mult)

    def multiply_batch(self, X, Y) -> np.ndarray:
        """All products X[a] Y[b] as an array of shape (len(X), len(Y), dim)."""
        f = self.field
        T = f.reduce(np.tensordot(np.asarray(X), self.mult, axes=(1, 0)))  # [a, j, k]
        return f.reduce(np.einsum("ajk,bj->abk", T, np.asarray(Y)))

    def commutator_free(self, X, Y) -> tuple[int, int] | None:
        """First (a, b) with X[a] Y[b] != Y[b] X[a], or ``None``."""
        XY = self.multiply_batch(X, Y)
        YX = self.multiply_batch(Y, X)
        diff = self.field.reduce(XY - np.transpose(YX, (1, 0, 2)))
        if isinstance(self.field, PrimeField):
            bad = np.argwhere(diff.any(axis=2))
        else:
            bad = np.argwhere(np.array([[any(x != 0 for x in v) for v in row] for row in diff], dtype=bool).reshape(diff.shape[:2]))
        return None if len(bad) == 0 else (int(bad[0][0]), int(bad[0][1]))

    def left_matrix(self, a) -> Matrix:
        cols = [self.multiply(a, self.basis(j)) for j in range(self.dim)]
        return Matrix._wrap(np.stack(cols, axis=1), self.field)

    def inverse(self, a):
        """Two-sided inverse of ``a`` or ``None``."""
        L = self.left_matrix(a)
        x = L.solve(Matrix._wrap(self.unit.reshape(-1, 1), self.field))
        if x is None:
            return None
        x = x.data.reshape(-1)
        if not vec_equal(self.field, self.multiply(x, a), self.unit):
            return None
        return x

    def is_unit(self, a) -> bool:
        return self.inverse(a) is not None

    def product(self, elems) -> np.ndarray:
        out = self.unit
        for e in elems:
            out = self.multiply(out, e)
        return out

    def equal(self, a, b) -> bool:
        return vec_equal(self.field, a, b)

    # -- axioms ----------------------------------------------------------------
    def check_axioms(self) -> list[str]:
        bad = []
        for i in range(self.dim):
            e = self.basis(i)
            if not self.equal(self.multiply(self.unit, e), e) or not self.equal(self.multiply(e, self.unit), e):
                bad.append(f"unit fails on e{i}")
                break
        if self.dim <= 16:
            f = self.field
            left = f.reduce(np.tensordot(self.mult, self.mult, axes=(2, 0)))  # (ab)c: [a,b,c,k]
            right = f.reduce(np.tensordot(self.mult, self.mult, axes=(2, 1)))  # a(bc): [b,c,a,k]
            right = np.transpose(right, (2, 0, 1, 3))
            if not vec_equal(f, left, right):
                bad.append("associativity")
        return bad

    @cached_property
    def is_commutative(self) -> bool:
        return vec_equal(self.field, self.mult, np.transpose(self.mult, (1, 0, 2)))

    def commutes(self, a, b) -> bool:
        return self.equal(self.multiply(a, b), self.multiply(b, a))

    # -- enumeration over prime fields -----------------------------------------
    def n_elements(self) -> int:
        if not isinstance(self.field, PrimeField):
            raise TooLargeError(f"cannot enumerate elements over {self.field}")
        return self.field.p ** self.dim

    def elements(self, cap: int | None = None):
        cap = enum_cap() if cap is None else cap
        n = self.n_elements()
        if n > cap:
            raise TooLargeError(f"{n} elements exceed the enumeration cap {cap}")
        for coords in itertools.product(range(self.field.p), repeat=self.dim):
            yield np.array(coords, dtype=np.int64)

    def units(self, cap: int | None = None) -> list[np.ndarray]:
        return [a for a in self.elements(cap) if self.is_unit(a)]

    # -- constructions -----------------------------------------------------------
    def tensor(self, other: "Algebra") -> "Algebra":
        if other.field != self.field:
            raise ValueError("mixed-field tensor product")
        f = self.field
        m = np.einsum("ijk,abc->iajbkc", self.mult, other.mult)
        d = self.dim * other.dim
        unit = np.kron(self.unit, other.unit)
        return Algebra(f, f.reduce(m.reshape(d, d, d)), f.reduce(unit), check=False,
                       name=f"{self.name}(x){other.name}")

    def tensor_power(self, n: int) -> "Algebra":
        if n == 0:
            return Algebra(self.field, self.field.array([[[1]]]), self.field.array([1]), name="k", check=False)
        if n == 1:
            return self
        return TensorPowerAlgebra(self, n)

    # -- serialisation ------------------------------------------------------------
    def to_json(self) -> dict:
        box = self.field.box
        return {
            "dim": self.dim,
            "mul": [[[scalar_to_json(box(x)) for x in row] for row in plane] for plane in self.mult],
            "unit": [scalar_to_json(box(x)) for x in self.unit],
        }

    @classmethod
    def from_json(cls, obj, field: Field | None = None) -> "Algebra":
        field = field or field_from_json(obj.get("field"))
        mult = [[[scalar_from_json(x) for x in row] for row in plane] for plane in obj["mul"]]
        unit = [scalar_from_json(x) for x in obj["unit"]]
        return cls(field, mult, unit, name=obj.get("name", ""))


class TensorPowerAlgebra(Algebra):
    """A^{(x)n} with lexicographic basis; products contract one factor at a time."""

    FULL_TENSOR_DIM = 64

    def __init__(self, base: Algebra, n: int):
        self.base = base
        self.power = n
        self.field = base.field
        self.name = f"{base.name or 'A'}^{n}"
        unit = base.unit
        for _ in range(n - 1):
            unit = np.kron(unit, base.unit)
        self.unit = self.field.reduce(unit)
        self._dim = base.dim ** n

    @property
    def dim(self) -> int:
        return self._dim

    @cached_property
    def mult(self):
        if self._dim > self.FULL_TENSOR_DIM:
            raise TooLargeError(f"full structure tensor of dimension {self._dim} not materialised")
        out = self.base
        for _ in range(self.power - 1):
            out = out.tensor(self.base)
        return out.mult

    @cached_property
    def is_commutative(self) -> bool:
        return self.base.is_commutative

    def multiply(self, a, b):
        f = self.field
        d, n = self.base.dim, self.power
        w = np.multiply.outer(np.asarray(a).reshape((d,) * n), np.asarray(b).reshape((d,) * n))
        w = f.reduce(w)
        for t in range(n):
            w = f.reduce(np.tensordot(w, self.base.mult, axes=([0, n - t], [0, 1])))
        return w.reshape(-1)

    def multiply_batch(self, X, Y, budget: int = 1 << 21):
        f = self.field
        d, n = self.base.dim, self.power
        X, Y = np.asarray(X), np.asarray(Y)
        nx, ny = X.shape[0], Y.shape[0]
        step = max(1, budget // max(1, ny * d ** (2 * n)))
        chunks = []
        for s0 in range(0, nx, step):
            xs = X[s0:s0 + step].reshape((-1,) + (d,) * n)
            ys = Y.reshape((ny,) + (d,) * n)
            w = np.multiply.outer(xs, ys)  # [a, i1..in, b, j1..jn]
            w = np.moveaxis(w, n + 1, 1)  # [a, b, i.., j..]
            w = f.reduce(w)
            for t in range(n):
                w = f.reduce(np.tensordot(w, self.base.mult, axes=([2, 2 + n - t], [0, 1])))
            chunks.append(w.reshape(w.shape[0], ny, -1))
        return np.concatenate(chunks, axis=0)

    def check_axioms(self):
        return self.base.check_axioms()
