"""Hecke algebras H_n(q) in the T-basis, their antisymmetrizers and the a-invariant.

T_s T_w = T_sw when l(sw) > l(w), and q T_sw + (q-1) T_w otherwise. The
parameter q is the formal variable of QQ(q) unless a rational value is given.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from ._perm import left_mult, length, permutations, reduced_word
from .exact.fields import QQ, QQ_q
from .exact.matrix import Matrix
from .exact.scalars import RatFunc

MAX_REGULAR_N = 5


def _param(q):
    """(field, scalar) for the formal variable or a rational specialisation."""
    if q is None:
        return QQ_q, RatFunc.q()
    q = Fraction(q)
    if q == -1:
        raise ValueError("q = -1 is a root of unity where the antisymmetrizers are undefined")
    return QQ, q


@dataclass(frozen=True)
class HeckeElement:
    """Finitely supported sum of T_w over S_n, zero coefficients dropped."""

    n: int
    coefficients: tuple
    q: object = None

    @classmethod
    def make(cls, n: int, coeffs: dict, q=None) -> "HeckeElement":
        field, _ = _param(q)
        clean = {}
        for w, c in coeffs.items():
            c = field.coerce(c)
            if c != 0:
                clean[tuple(w)] = c
        return cls(n, tuple(sorted(clean.items())), None if q is None else Fraction(q))

    @classmethod
    def one(cls, n: int, q=None) -> "HeckeElement":
        return cls.make(n, {tuple(range(1, n + 1)): 1}, q)

    @classmethod
    def basis(cls, w, q=None) -> "HeckeElement":
        return cls.make(len(w), {tuple(w): 1}, q)

    @classmethod
    def generator(cls, n: int, i: int, q=None) -> "HeckeElement":
        if not 1 <= i < n:
            raise ValueError(f"t_{i} is undefined in H_{n}")
        w = list(range(1, n + 1))
        w[i - 1], w[i] = w[i], w[i - 1]
        return cls.basis(w, q)

    @property
    def field(self):
        return _param(self.q)[0]

    @property
    def param(self):
        return _param(self.q)[1]

    def as_dict(self) -> dict:
        return dict(self.coefficients)

    def _check(self, other: "HeckeElement"):
        if self.n != other.n:
            raise ValueError(f"strand mismatch: H_{self.n} vs H_{other.n}")
        if self.q != other.q:
            raise ValueError("elements live over different specialisations of q")

    def __add__(self, other: "HeckeElement") -> "HeckeElement":
        self._check(other)
        acc = self.as_dict()
        for w, c in other.coefficients:
            acc[w] = acc.get(w, 0) + c
        return HeckeElement.make(self.n, acc, self.q)

    def scale(self, c) -> "HeckeElement":
        c = self.field.coerce(c)
        return HeckeElement.make(self.n, {w: x * c for w, x in self.coefficients}, self.q)

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other: "HeckeElement") -> "HeckeElement":
        return hecke_multiply(self, other)

    def __str__(self):
        if not self.coefficients:
            return "0"
        return " + ".join(f"({c})*T{''.join(map(str, w))}" for w, c in self.coefficients)

    def to_json(self) -> dict:
        return {"n": self.n, "q": None if self.q is None else str(self.q),
                "coefficients": [["".join(map(str, w)), str(c)] for w, c in self.coefficients]}


def _left_generator(i: int, x: dict, q) -> dict:
    """t_i times a coefficient dict."""
    out: dict = {}
    for w, c in x.items():
        sw = left_mult(i, w)
        if length(sw) > length(w):
            out[sw] = out.get(sw, 0) + c
        else:
            out[sw] = out.get(sw, 0) + c * q
            out[w] = out.get(w, 0) + c * (q - 1)
    return out


def hecke_multiply(x: HeckeElement, y: HeckeElement) -> HeckeElement:
    x._check(y)
    q = x.param
    acc: dict = {}
    for u, a in x.coefficients:
        part = y.as_dict()
        for i in reversed(reduced_word(u)):
            part = _left_generator(i, part, q)
        for w, c in part.items():
            acc[w] = acc.get(w, 0) + a * c
    return HeckeElement.make(x.n, acc, x.q)


def t_word(n: int, word, q=None) -> HeckeElement:
    out = HeckeElement.one(n, q)
    for i in word:
        out = out * HeckeElement.generator(n, i, q)
    return out


def regular_representation(n: int, q=None) -> list[Matrix]:
    """Left multiplication by t_1..t_{n-1} on the lexicographic T-basis."""
    if n > MAX_REGULAR_N:
        raise ValueError(f"regular representation limited to n <= {MAX_REGULAR_N}")
    field, qv = _param(q)
    basis = permutations(n)
    index = {w: k for k, w in enumerate(basis)}
    mats = []
    for i in range(1, n):
        data = field.zeros((len(basis), len(basis)))
        for j, w in enumerate(basis):
            for v, c in _left_generator(i, {w: field.one}, qv).items():
                data[index[v], j] = field.coerce(c)
        mats.append(Matrix._wrap(data, field))
    return mats


def left_matrix(x: HeckeElement) -> Matrix:
    """Matrix of left multiplication by x on the T-basis."""
    basis = permutations(x.n)
    field = x.field
    data = field.zeros((len(basis), len(basis)))
    index = {w: k for k, w in enumerate(basis)}
    for j, w in enumerate(basis):
        for v, c in (x * HeckeElement.basis(w, x.q)).coefficients:
            data[index[v], j] = c
    return Matrix._wrap(data, field)


def check_relations(mats: list[Matrix], q=None) -> list[str]:
    """Braid, far commutation (|i-j| >= 2) and quadratic relations on generator matrices."""
    field, qv = _param(q)
    bad = []
    if not mats:
        return bad
    I = Matrix.identity(mats[0].shape[0], field)
    qI = Matrix._wrap(I.data * qv, field)
    for i, t in enumerate(mats, start=1):
        if (t + I) @ (t - qI) != Matrix.zeros(*t.shape, field):
            bad.append(f"(t_{i}+1)(t_{i}-q) != 0")
    for i in range(len(mats) - 1):
        a, b = mats[i], mats[i + 1]
        if a @ b @ a != b @ a @ b:
            bad.append(f"braid relation fails at i={i + 1}")
    for i in range(len(mats)):
        for j in range(i + 2, len(mats)):
            if mats[i] @ mats[j] != mats[j] @ mats[i]:
                bad.append(f"t_{i + 1}, t_{j + 1} do not commute")
    return bad


def q_antisymmetrizer(n: int, q=None) -> HeckeElement:
    """The idempotent p with t_i p = -p for every i, found by a linear solve."""
    if n > 4:
        raise ValueError("q_antisymmetrizer is limited to n <= 4")
    field, _ = _param(q)
    basis = permutations(n)
    if n <= 1:
        return HeckeElement.one(n, q)
    mats = regular_representation(n, q)
    I = Matrix.identity(len(basis), field)
    stacked = Matrix._wrap(np.concatenate([(t + I).data for t in mats]), field)
    ker = stacked.kernel_basis()
    if len(ker) != 1:
        raise AssertionError(f"sign-eigenspace has dimension {len(ker)}, expected 1")
    y = HeckeElement.make(n, {w: c for w, c in zip(basis, ker[0].data.reshape(-1))}, q)
    yy = y * y
    w0 = next(w for w, c in y.coefficients)
    lam = yy.as_dict().get(w0, field.zero) / y.as_dict()[w0]
    if lam == 0 or yy != y.scale(lam):
        raise AssertionError("sign-eigenvector does not square to a multiple of itself")
    p = y.scale(1 / lam)
    for i in range(1, n):
        t = HeckeElement.generator(n, i, q)
        if t * p != -p or p * t != -p:
            raise AssertionError("antisymmetrizer is not (-1)-absorbing")
    return p


def embed(x: HeckeElement, n: int, shift: int) -> HeckeElement:
    """Image of x in H_n under t_i -> t_(i+shift)."""
    out = HeckeElement.make(n, {}, x.q)
    for w, c in x.coefficients:
        word = [i + shift for i in reduced_word(w)]
        out = out + t_word(n, word, x.q).scale(c)
    return out


@dataclass
class AInvariant:
    value: object
    residual_1: Matrix
    residual_2: Matrix
    raw_residual: Matrix

    @property
    def proportional(self) -> bool:
        z = Matrix.zeros(*self.residual_1.shape, self.residual_1.field)
        return self.residual_1 == z and self.residual_2 == z


def compute_a_invariant(q=None) -> AInvariant:
    """P_1 P_2 P_1 = a P_1 in the regular representation of H_3.

    P_i is the image of the rank-2 projector p_i = p (x) 1 or 1 (x) p with the
    Lambda^3 summand removed, P_i = p_i - p_3.
    """
    field, _ = _param(q)
    p = q_antisymmetrizer(2, q)
    p1, p2 = left_matrix(embed(p, 3, 0)), left_matrix(embed(p, 3, 1))
    p3 = left_matrix(q_antisymmetrizer(3, q))
    P1, P2 = p1 - p3, p2 - p3
    M = P1 @ P2 @ P1
    r, c = next((r, c) for r in range(6) for c in range(6) if P1.data[r, c] != 0)
    a = M.data[r, c] / P1.data[r, c]
    scaled = lambda X: Matrix._wrap(X.data * a, field)  # noqa: E731
    return AInvariant(a, M - scaled(P1), P2 @ P1 @ P2 - scaled(P2), p1 @ p2 @ p1 - scaled(p1))


def a_invariant(q=None):
    """a(phi_q); q/(q+1)^2 for the formal parameter."""
    res = compute_a_invariant(q)
    if not res.proportional:
        raise AssertionError("P1 P2 P1 is not proportional to P1")
    return res.value
