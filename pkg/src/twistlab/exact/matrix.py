"""Dense exact matrices over QQ, GF(p) and QQ(q)."""
from __future__ import annotations

import numpy as np

from .. import _kernels
from .fields import QQ, Field, PrimeField, common_field


class Matrix:
    """Immutable dense matrix; all entries live in one field.

    ``data`` is a 2-d numpy array in the field's storage dtype (object for
    QQ and QQ(q), int64 residues for GF(p)).
    """

    __slots__ = ("field", "data")

    def __init__(self, data, field: Field | None = None):
        if isinstance(data, Matrix):
            field = field or data.field
            data = data.data
        if field is None:
            flat = list(np.asarray(data, dtype=object).reshape(-1))
            field = common_field(flat)
        arr = field.array(data)
        if arr.ndim != 2:
            raise ValueError(f"matrix data must be 2-d, got shape {arr.shape}")
        arr.setflags(write=False)
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "data", arr)

    def __setattr__(self, name, value):
        raise AttributeError("Matrix is immutable")

    @classmethod
    def from_rows(cls, rows, field: Field | None = None) -> "Matrix":
        rows = [list(r) for r in rows]
        if rows and len({len(r) for r in rows}) != 1:
            raise ValueError("ragged rows")
        if not rows:
            return cls(np.empty((0, 0), dtype=object), field or QQ)
        return cls(rows, field)

    @classmethod
    def identity(cls, n: int, field: Field = QQ) -> "Matrix":
        return cls._wrap(field.eye(n), field)

    @classmethod
    def zeros(cls, rows: int, cols: int, field: Field = QQ) -> "Matrix":
        return cls._wrap(field.zeros((rows, cols)), field)

    @classmethod
    def _wrap(cls, arr, field) -> "Matrix":
        m = object.__new__(cls)
        arr = np.asarray(arr)
        if isinstance(field, PrimeField):
            arr = np.mod(arr.astype(np.int64), field.p)
        arr.setflags(write=False)
        object.__setattr__(m, "field", field)
        object.__setattr__(m, "data", arr)
        return m

    # -- shape and access -------------------------------------------------
    @property
    def rows(self) -> int:
        return self.data.shape[0]

    @property
    def cols(self) -> int:
        return self.data.shape[1]

    @property
    def shape(self):
        return self.data.shape

    @property
    def entries(self) -> list:
        """Row-major list of boxed scalars."""
        return [self.field.box(x) for x in self.data.reshape(-1)]

    def __getitem__(self, idx):
        i, j = idx
        return self.field.box(self.data[i, j])

    def tolist(self):
        return [[self.field.box(x) for x in row] for row in self.data]

    # -- arithmetic -------------------------------------------------------
    def _check(self, other: "Matrix"):
        if not isinstance(other, Matrix):
            raise TypeError("expected a Matrix")
        if other.field != self.field:
            raise ValueError(f"mixed-field entries: {self.field} and {other.field}")

    def __matmul__(self, other: "Matrix") -> "Matrix":
        self._check(other)
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        return Matrix._wrap(self.field.matmul(self.data, other.data), self.field)

    def __add__(self, other: "Matrix") -> "Matrix":
        self._check(other)
        return Matrix._wrap(self.field.reduce(self.data + other.data), self.field)

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._check(other)
        return Matrix._wrap(self.field.reduce(self.data - other.data), self.field)

    def __neg__(self) -> "Matrix":
        return Matrix._wrap(self.field.reduce(-self.data), self.field)

    def scale(self, c) -> "Matrix":
        c = self.field.coerce(c)
        return Matrix._wrap(self.field.reduce(self.data * c), self.field)

    def __rmul__(self, c):
        return self.scale(c)

    @property
    def T(self) -> "Matrix":
        return Matrix._wrap(self.data.T.copy(), self.field)

    def kron(self, other: "Matrix") -> "Matrix":
        self._check(other)
        return Matrix._wrap(self.field.reduce(np.kron(self.data, other.data)), self.field)

    def trace(self):
        acc = self.field.zero
        for i in range(min(self.rows, self.cols)):
            acc = acc + self.data[i, i]
        if isinstance(self.field, PrimeField):
            acc %= self.field.p
        return self.field.box(acc)

    def is_zero(self) -> bool:
        return self.field.is_zero_array(self.data)

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        if self.field != other.field or self.shape != other.shape:
            return False
        if isinstance(self.field, PrimeField):
            return bool(np.array_equal(self.data, other.data))
        return all(a == b for a, b in zip(self.data.reshape(-1), other.data.reshape(-1)))

    def __hash__(self):
        return hash((self.shape, tuple(self.data.reshape(-1).tolist())))

    def first_difference(self, other: "Matrix"):
        """``(i, j, mine, theirs)`` for the first unequal entry, or ``None``."""
        for i in range(self.rows):
            for j in range(self.cols):
                if self.data[i, j] != other.data[i, j]:
                    return i, j, self.field.box(self.data[i, j]), other.field.box(other.data[i, j])
        return None

    def __repr__(self):
        return f"Matrix({self.rows}x{self.cols} over {self.field})"

    def __str__(self):
        return "\n".join("[" + ", ".join(str(self.field.box(x)) for x in row) + "]" for row in self.data)

    # -- elimination ------------------------------------------------------
    def rref(self):
        """Reduced row echelon form and pivot columns."""
        if isinstance(self.field, PrimeField):
            r, piv = _kernels.rref_mod_p(self.data, self.field.p)
            return Matrix._wrap(r, self.field), [int(c) for c in piv]
        a = self.data.copy()
        rows, cols = a.shape
        pivots = []
        r = 0
        for c in range(cols):
            if r == rows:
                break
            piv = next((i for i in range(r, rows) if a[i, c] != 0), None)
            if piv is None:
                continue
            if piv != r:
                a[[r, piv]] = a[[piv, r]]
            inv = self.field.inv(a[r, c])
            a[r, c:] = [x * inv for x in a[r, c:]]
            for i in range(rows):
                f = a[i, c]
                if i != r and f != 0:
                    a[i, c:] = [x - f * y for x, y in zip(a[i, c:], a[r, c:])]
            pivots.append(c)
            r += 1
        return Matrix._wrap(a, self.field), pivots

    def rank(self) -> int:
        if self.rows == 0 or self.cols == 0:
            return 0
        if isinstance(self.field, PrimeField):
            return _kernels.rank_mod_p(self.data, self.field.p)
        return len(self.rref()[1])

    def kernel_basis(self) -> list["Matrix"]:
        """Basis of the right kernel as column vectors (cols x 1 matrices)."""
        n = self.cols
        if self.rows == 0:
            return [Matrix._wrap(self.field.eye(n)[:, [j]], self.field) for j in range(n)]
        r, piv = self.rref()
        free = [c for c in range(n) if c not in set(piv)]
        basis = []
        for fcol in free:
            v = self.field.zeros((n, 1))
            v[fcol, 0] = self.field.one
            for row, pc in enumerate(piv):
                x = r.data[row, fcol]
                if x != 0:
                    v[pc, 0] = self.field.reduce(-x) if isinstance(self.field, PrimeField) else -x
            basis.append(Matrix._wrap(v, self.field))
        return basis

    def inverse(self) -> "Matrix":
        if self.rows != self.cols:
            raise ValueError("inverse of a non-square matrix")
        n = self.rows
        aug = np.concatenate([self.data, self.field.eye(n)], axis=1)
        r, piv = Matrix._wrap(aug, self.field).rref()
        if piv[:n] != list(range(n)) or len(piv) < n:
            raise ZeroDivisionError("matrix is singular")
        return Matrix._wrap(r.data[:, n:].copy(), self.field)

    def solve(self, b: "Matrix") -> "Matrix | None":
        """One solution x of ``self @ x == b`` or ``None`` if inconsistent."""
        self._check(b)
        n = self.cols
        aug = np.concatenate([self.data, b.data], axis=1)
        r, piv = Matrix._wrap(aug, self.field).rref()
        if any(c >= n for c in piv):
            return None
        x = self.field.zeros((n, b.cols))
        for row, pc in enumerate(piv):
            x[pc] = r.data[row, n:]
        return Matrix._wrap(x, self.field)

    def det(self):
        if self.rows != self.cols:
            raise ValueError("det of a non-square matrix")
        a = self.data.copy()
        n = self.rows
        d = self.field.one
        for c in range(n):
            piv = next((i for i in range(c, n) if a[i, c] % self.field.p != 0), None) \
                if isinstance(self.field, PrimeField) else next((i for i in range(c, n) if a[i, c] != 0), None)
            if piv is None:
                return self.field.box(self.field.zero)
            if piv != c:
                a[[c, piv]] = a[[piv, c]]
                d = -d
            d = d * a[c, c]
            inv = self.field.inv(a[c, c])
            for i in range(c + 1, n):
                f = a[i, c] * inv
                if f != 0:
                    a[i, c:] = self.field.reduce(a[i, c:] - f * a[c, c:])
        if isinstance(self.field, PrimeField):
            d %= self.field.p
        return self.field.box(d)


def rank(m: Matrix) -> int:
    return m.rank()


def kernel_basis(m: Matrix) -> list[Matrix]:
    return m.kernel_basis()
