"""Bar, cobar and Amitsur cosimplicial complexes."""
from __future__ import annotations

import numpy as np

from ..algebra import Algebra
from ..cosimplicial import CosimplicialComplex
from ..exact.matrix import Matrix
from .core import FinBialgebra, require_commutative


def _eye(n, f):
    return Matrix.identity(n, f)


def _kron_all(mats):
    out = mats[0]
    for m in mats[1:]:
        out = out.kron(m)
    return out


def bar_complex(H: FinBialgebra, top: int) -> CosimplicialComplex:
    """Levels H^(x)n; d^0 = 1(x)-, d^n = -(x)1, inner cofaces apply Delta, s^i applies eps."""
    f, d = H.field, H.dim
    u = H.unit_column()
    levels = [H.algebra.tensor_power(n) for n in range(top + 1)]
    cof, cod = {}, {}
    for n in range(1, top + 1):
        for i in range(n + 1):
            if i == 0:
                mats = [u, _eye(d ** (n - 1), f)]
            elif i == n:
                mats = [_eye(d ** (n - 1), f), u]
            else:
                mats = [_eye(d ** (i - 1), f), H.comul, _eye(d ** (n - 1 - i), f)]
            cof[(n, i)] = _kron_all(mats)
    for n in range(top):
        for i in range(n + 1):
            cod[(n, i)] = _kron_all([_eye(d ** i, f), H.counit, _eye(d ** (n - i), f)])
    return CosimplicialComplex(levels, cof, cod, name=f"bar({H.name})")


def dual_algebra(H: FinBialgebra) -> Algebra:
    """Hom(H, k) with the convolution product; its unit is eps."""
    d, f = H.dim, H.field
    mult = H.comul.data.reshape(d, d, d)  # [i, j, k]: coefficient of e_i (x) e_j in Delta(e_k)
    return Algebra(f, mult, H.counit.data.reshape(-1), name=f"{H.name}*", check=False)


def cobar_complex(H: FinBialgebra, top: int) -> CosimplicialComplex:
    """Levels Hom(H^(x)n, k); cofaces and codegeneracies are transposes of the maps on H^(x)n.

    The cofaces come from d^0 = eps(x)I, inner d^i = multiply factors i and i+1, d^n = I(x)eps.
    The codegeneracies are dual to inserting 1 into slot i.
    """
    f, d = H.field, H.dim
    mu = Matrix._wrap(H.algebra.mult.reshape(d * d, d).T.copy(), f)  # H(x)H -> H
    u = H.unit_column()
    dual = dual_algebra(H)
    levels = [dual.tensor_power(n) for n in range(top + 1)]
    cof, cod = {}, {}
    for n in range(1, top + 1):
        for i in range(n + 1):
            if i == 0:
                mats = [H.counit, _eye(d ** (n - 1), f)]
            elif i == n:
                mats = [_eye(d ** (n - 1), f), H.counit]
            else:
                mats = [_eye(d ** (i - 1), f), mu, _eye(d ** (n - 1 - i), f)]
            cof[(n, i)] = _kron_all(mats).T
    for n in range(top):
        for i in range(n + 1):
            cod[(n, i)] = _kron_all([_eye(d ** i, f), u, _eye(d ** (n - i), f)]).T
    return CosimplicialComplex(levels, cof, cod, name=f"cobar({H.name})")


def amitsur_complex(R: Algebra, top: int) -> CosimplicialComplex:
    """Levels R^(x)(n+1); d^i inserts 1 in slot i, s^i multiplies slots i and i+1."""
    require_commutative(R)
    f, d = R.field, R.dim
    u = Matrix._wrap(R.unit.reshape(-1, 1), f)
    mu = Matrix._wrap(R.mult.reshape(d * d, d).T.copy(), f)
    levels = [R.tensor_power(n + 1) for n in range(top + 1)]
    cof, cod = {}, {}
    for n in range(1, top + 1):
        for i in range(n + 1):
            cof[(n, i)] = _kron_all([_eye(d ** i, f), u, _eye(d ** (n - i), f)])
    for n in range(top):
        for i in range(n + 1):
            cod[(n, i)] = _kron_all([_eye(d ** i, f), mu, _eye(d ** (n - i), f)])
    return CosimplicialComplex(levels, cof, cod, name=f"amitsur({R.name})")
