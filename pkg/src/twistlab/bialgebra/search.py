"""Primitive and group-like elements, and the search for coproduct twists."""
from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from ..algebra import TooLargeError, apply, enum_cap, vec_equal
from ..exact.fields import PrimeField
from ..exact.matrix import Matrix
from .core import FinBialgebra


def _require_prime(H: FinBialgebra):
    if not isinstance(H.field, PrimeField):
        raise TooLargeError(f"enumeration needs a prime field, got {H.field}")


def primitive_elements(H: FinBialgebra) -> list[np.ndarray]:
    """Basis of {l : Delta(l) = l(x)1 + 1(x)l}."""
    d, f = H.dim, H.field
    I, u = Matrix.identity(d, f), H.unit_column()
    eq = H.comul - I.kron(u) - u.kron(I)
    return [v.data.reshape(-1) for v in eq.kernel_basis()]


def is_primitive(H: FinBialgebra, x) -> bool:
    d = H.dim
    u = H.algebra.unit
    rhs = H.field.reduce(np.kron(x, u) + np.kron(u, x))
    return vec_equal(H.field, H.delta(x), rhs)


def primitives_closed_under_commutator(H: FinBialgebra, basis=None) -> bool:
    basis = primitive_elements(H) if basis is None else basis
    A = H.algebra
    for a, b in itertools.product(basis, repeat=2):
        c = H.field.reduce(A.multiply(a, b) - A.multiply(b, a))
        if not is_primitive(H, c):
            return False
    return True


def group_likes(H: FinBialgebra, cap: int | None = None) -> list[np.ndarray]:
    """All invertible g with Delta(g) = g(x)g and eps(g) = 1, by exhaustion."""
    _require_prime(H)
    f = H.field
    out = []
    for g in H.algebra.elements(cap):
        if H.eps(g) % f.p != 1:
            continue
        if not vec_equal(f, H.delta(g), f.reduce(np.kron(g, g))):
            continue
        if H.algebra.is_unit(g):
            out.append(g)
    return out


# -- twists ---------------------------------------------------------------------

def counit_contractions(H: FinBialgebra, x) -> tuple[np.ndarray, np.ndarray]:
    """((eps(x)I)(x), (I(x)eps)(x)) as elements of H."""
    d, f = H.dim, H.field
    I = Matrix.identity(d, f)
    return apply(H.counit.kron(I), np.asarray(x)), apply(I.kron(H.counit), np.asarray(x))


def normalize_twist(H: FinBialgebra, x) -> np.ndarray:
    """Divide x by c when both counit contractions equal c * 1 with c invertible."""
    f = H.field
    left, right = counit_contractions(H, x)
    u = H.algebra.unit
    c = apply(H.counit, left)[0]
    if f.is_zero_array(np.asarray([c])):
        raise ValueError("counit contraction is not invertible")
    cu = f.reduce(u * c)
    if not (vec_equal(f, left, cu) and vec_equal(f, right, cu)):
        raise ValueError("counit contractions are not scalar multiples of 1")
    return f.reduce(np.asarray(x) * f.inv(c))


def twist_cocycle_sides(H: FinBialgebra, x):
    """(1(x)x)(I(x)Delta)(x) and (x(x)1)(Delta(x)I)(x) in H^(x)3."""
    d, f = H.dim, H.field
    I = Matrix.identity(d, f)
    A3 = H.algebra.tensor_power(3)
    u = H.algebra.unit
    x = np.asarray(x)
    lhs = A3.multiply(f.reduce(np.kron(u, x)), apply(I.kron(H.comul), x))
    rhs = A3.multiply(f.reduce(np.kron(x, u)), apply(H.comul.kron(I), x))
    return lhs, rhs


def is_twist(H: FinBialgebra, x) -> bool:
    """Invertible, counit-normalised and satisfying the 2-cocycle equation."""
    f = H.field
    u = H.algebra.unit
    left, right = counit_contractions(H, x)
    if not (vec_equal(f, left, u) and vec_equal(f, right, u)):
        return False
    if H.square.inverse(np.asarray(x)) is None:
        return False
    lhs, rhs = twist_cocycle_sides(H, x)
    return vec_equal(f, lhs, rhs)


@dataclass
class Twist:
    x: np.ndarray
    bialgebra: FinBialgebra


def _normalised_candidates(H: FinBialgebra, cap: int):
    """Enumerate x in H(x)H with both counit contractions equal to 1."""
    d, f = H.dim, H.field
    I = Matrix.identity(d, f)
    cons = Matrix._wrap(np.concatenate([H.counit.kron(I).data, I.kron(H.counit).data]), f)
    rhs = Matrix._wrap(np.concatenate([H.algebra.unit, H.algebra.unit]).reshape(-1, 1), f)
    base = cons.solve(rhs)
    if base is None:
        return
    kernel = [v.data.reshape(-1) for v in cons.kernel_basis()]
    count = f.p ** len(kernel)
    if count > cap:
        raise TooLargeError(f"{count} normalised candidates exceed the cap {cap}")
    x0 = base.data.reshape(-1)
    K = np.array(kernel, dtype=np.int64).reshape(len(kernel), -1)
    for coeffs in itertools.product(range(f.p), repeat=len(kernel)):
        yield f.reduce(x0 + np.asarray(coeffs, dtype=np.int64) @ K) if kernel else x0.copy()


def twist_search_and_apply(H: FinBialgebra, cap: int | None = None) -> list[Twist]:
    """Every normalised twist of H with its twisted bialgebra (H, x Delta x^-1, eps)."""
    _require_prime(H)
    cap = enum_cap() if cap is None else cap
    out = []
    for x in _normalised_candidates(H, cap):
        if is_twist(H, x):
            out.append(Twist(x, H.twisted(x)))
    return out
