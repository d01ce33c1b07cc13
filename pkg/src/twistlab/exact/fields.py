"""Field descriptors: how entries of one exact field are held in numpy arrays.

``QQ`` and ``QQ_q`` keep Python objects (``Fraction`` / ``RatFunc``) in
object arrays. ``GF(p)`` keeps residues in int64 arrays so the hot kernels
can run on them directly.
"""
from __future__ import annotations

from fractions import Fraction

import numpy as np

from .scalars import GFElement, RatFunc, is_prime, padd, pdivmod, pgcd, pmul


class Field:
    name = "field"
    dtype = object

    def coerce(self, x):
        raise NotImplementedError

    def box(self, x):
        return x

    def array(self, data) -> np.ndarray:
        arr = np.asarray(data, dtype=object)
        out = np.empty(arr.shape, dtype=self.dtype)
        flat_in = arr.reshape(-1)
        flat_out = out.reshape(-1)
        for i, x in enumerate(flat_in):
            flat_out[i] = self.coerce(x)
        return out

    def zeros(self, shape) -> np.ndarray:
        out = np.empty(shape, dtype=object)
        out.fill(self.zero)
        return out

    def eye(self, n) -> np.ndarray:
        out = self.zeros((n, n))
        for i in range(n):
            out[i, i] = self.one
        return out

    def reduce(self, a):
        return a

    def matmul(self, a, b):
        return a @ b

    def inv(self, x):
        return 1 / x

    def is_zero_array(self, a) -> bool:
        return all(x == 0 for x in np.asarray(a).reshape(-1))

    def __eq__(self, other):
        return type(self) is type(other)

    def __hash__(self):
        return hash(self.name)

    def __repr__(self):
        return self.name


class RationalField(Field):
    name = "QQ"

    @property
    def zero(self):
        return Fraction(0)

    @property
    def one(self):
        return Fraction(1)

    def coerce(self, x):
        if isinstance(x, Fraction):
            return x
        if isinstance(x, (int, np.integer)):
            return Fraction(int(x))
        if isinstance(x, str):
            return Fraction(x)
        raise TypeError(f"mixed-field entry {x!r} in a QQ matrix")


class RationalFunctionField(Field):
    name = "QQ(q)"

    @property
    def zero(self):
        return RatFunc()

    @property
    def one(self):
        return RatFunc.const(1)

    def coerce(self, x):
        if isinstance(x, RatFunc):
            return x
        if isinstance(x, (int, np.integer, Fraction)):
            return RatFunc.const(Fraction(int(x)) if isinstance(x, np.integer) else x)
        raise TypeError(f"mixed-field entry {x!r} in a QQ(q) matrix")

    @staticmethod
    def _cleared(a) -> tuple[list, tuple]:
        """Polynomial numerators over one common denominator L, entrywise x = num / L."""
        L = (Fraction(1),)
        for den in {x.den for x in a.reshape(-1)}:
            L = pmul(L, pdivmod(den, pgcd(L, den))[0])
        scale = {}
        rows = []
        for row in a:
            out = []
            for x in row:
                if x.den not in scale:
                    scale[x.den] = pdivmod(L, x.den)[0]
                out.append(pmul(x.num, scale[x.den]))
            rows.append(out)
        return rows, L

    def matmul(self, a, b):
        """Products on cleared numerators; one reduction per output entry."""
        a, b = np.asarray(a), np.asarray(b)
        if a.ndim != 2 or b.ndim != 2 or 0 in a.shape or 0 in b.shape:
            return a @ b
        na, La = self._cleared(a)
        nb, Lb = self._cleared(b)
        den = pmul(La, Lb)
        out = self.zeros((a.shape[0], b.shape[1]))
        for i in range(a.shape[0]):
            for j in range(b.shape[1]):
                acc = ()
                for k in range(a.shape[1]):
                    if na[i][k] and nb[k][j]:
                        acc = padd(acc, pmul(na[i][k], nb[k][j]))
                out[i, j] = RatFunc(acc, den)
        return out


class PrimeField(Field):
    dtype = np.int64
    _BIG = 1 << 62

    def __init__(self, p: int):
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        self.p = p
        self.name = f"GF({p})"

    @property
    def zero(self):
        return 0

    @property
    def one(self):
        return 1

    def coerce(self, x):
        if isinstance(x, GFElement):
            if x.p != self.p:
                raise TypeError(f"mixed-field entry {x!r} in a {self.name} matrix")
            return x.v
        if isinstance(x, (int, np.integer)):
            return int(x) % self.p
        if isinstance(x, Fraction):
            return (x.numerator * pow(x.denominator, -1, self.p)) % self.p
        raise TypeError(f"mixed-field entry {x!r} in a {self.name} matrix")

    def box(self, x):
        return GFElement(self.p, int(x))

    def array(self, data) -> np.ndarray:
        arr = np.asarray(data)
        if arr.dtype != object and np.issubdtype(arr.dtype, np.integer):
            return np.mod(arr.astype(np.int64), self.p)
        return super().array(data).astype(np.int64)

    def zeros(self, shape):
        return np.zeros(shape, dtype=np.int64)

    def eye(self, n):
        return np.eye(n, dtype=np.int64)

    def reduce(self, a):
        return np.mod(a, self.p)

    def matmul(self, a, b):
        inner = a.shape[-1] if a.ndim else 1
        if (self.p - 1) ** 2 * max(inner, 1) < self._BIG:
            return np.mod(a @ b, self.p)
        out = a.astype(object) @ b.astype(object)
        return np.mod(out, self.p).astype(np.int64)

    def inv(self, x):
        if x % self.p == 0:
            raise ZeroDivisionError(f"inverse of 0 in {self.name}")
        return pow(int(x), -1, self.p)

    def is_zero_array(self, a) -> bool:
        return not np.any(np.asarray(a) % self.p)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))


QQ = RationalField()
QQ_q = RationalFunctionField()
_GF_CACHE: dict[int, PrimeField] = {}


def GF(p: int) -> PrimeField:
    if p not in _GF_CACHE:
        _GF_CACHE[p] = PrimeField(p)
    return _GF_CACHE[p]


def field_of(x):
    """Field descriptor of a scalar, or ``None`` for plain ints (field-neutral)."""
    if isinstance(x, GFElement):
        return GF(x.p)
    if isinstance(x, RatFunc):
        return QQ_q
    if isinstance(x, Fraction):
        return QQ
    if isinstance(x, (int, np.integer)):
        return None
    raise TypeError(f"not an exact scalar: {x!r}")


def common_field(values, default=QQ):
    found = None
    for x in values:
        f = field_of(x)
        if f is None:
            continue
        if found is None:
            found = f
        elif f != found:
            raise ValueError(f"mixed-field entries: {found} and {f}")
    return found if found is not None else default


# -- JSON scalar encodings ---------------------------------------------------

def scalar_to_json(x):
    if isinstance(x, GFElement):
        return {"p": x.p, "v": x.v}
    if isinstance(x, RatFunc):
        return {"num": [str(c) for c in x.num], "den": [str(c) for c in x.den]}
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def scalar_from_json(obj):
    if isinstance(obj, dict):
        if "p" in obj:
            return GFElement(int(obj["p"]), int(obj["v"]))
        if "num" in obj:
            return RatFunc([Fraction(c) for c in obj["num"]], [Fraction(c) for c in obj.get("den", ["1"])])
        raise ValueError(f"unrecognised scalar encoding {obj!r}")
    if isinstance(obj, bool):
        raise ValueError("booleans are not scalars")
    if isinstance(obj, int):
        return Fraction(obj)
    if isinstance(obj, str):
        return Fraction(obj)
    raise ValueError(f"unrecognised scalar encoding {obj!r}")


def field_from_json(obj):
    if obj is None or obj == "QQ":
        return QQ
    if obj == "QQ(q)":
        return QQ_q
    if isinstance(obj, dict) and "p" in obj:
        return GF(int(obj["p"]))
    if isinstance(obj, str) and obj.startswith("GF(") and obj.endswith(")"):
        return GF(int(obj[3:-1]))
    raise ValueError(f"unrecognised field {obj!r}")


def field_to_json(field):
    if isinstance(field, PrimeField):
        return {"p": field.p}
    return field.name
