"""Unitary R-matrices, their symmetric-group actions and Hilbert series.

Tensor powers of V use the lexicographic basis, and R_i acts on factors i, i+1
(1-based) of V^(x)n.
"""
from __future__ import annotations

import math
import os
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from ._perm import check_perm, reduced_word, reduced_words  # noqa: F401
from .algebra import Algebra, TooLargeError, vec_equal
from .exact.fields import QQ, RationalField, scalar_from_json, scalar_to_json
from .exact.matrix import Matrix
from .exact.series import TruncatedSeries, exp_integral_transform

DEFAULT_TENSOR_CAP = 10**7


def tensor_cap() -> int:
    return int(os.environ.get("TWISTLAB_CAP", DEFAULT_TENSOR_CAP))


@dataclass(frozen=True)
class RMatrix:
    """Invertible operator on V(x)V with dim V = d, over QQ."""

    d: int
    R: Matrix
    unitary: bool = True

    def __post_init__(self):
        if self.R.shape != (self.d * self.d, self.d * self.d):
            raise ValueError(f"R must be {self.d ** 2} x {self.d ** 2}, got {self.R.shape}")
        if self.unitary:
            I = Matrix.identity(self.d ** 2, self.R.field)
            if self.R @ self.R != I:
                raise ValueError("R is flagged unitary but R^2 != 1")
        elif self.R.det() == 0:
            raise ValueError("R is not invertible")

    @property
    def field(self):
        return self.R.field

    @classmethod
    def flip(cls, d: int, sign=1) -> "RMatrix":
        P = QQ.zeros((d * d, d * d))
        for i in range(d):
            for j in range(d):
                P[j * d + i, i * d + j] = Fraction(sign)
        return cls(d, Matrix._wrap(P, QQ))

    def __neg__(self) -> "RMatrix":
        return RMatrix(self.d, -self.R, self.unitary)

    def to_json(self) -> dict:
        return {"d": self.d, "entries": [[scalar_to_json(x) for x in row] for row in self.R.data]}

    @classmethod
    def from_json(cls, obj: dict) -> "RMatrix":
        try:
            d = int(obj["d"])
            rows = obj["entries"]
        except (KeyError, TypeError, ValueError) as exc:
            raise ValueError(f"R-matrix JSON needs fields 'd' and 'entries': {exc}") from None
        vals = []
        for r, row in enumerate(rows):
            try:
                vals.append([Fraction(scalar_from_json(x)) for x in row])
            except (TypeError, ValueError) as exc:
                raise ValueError(f"entries[{r}]: {exc}") from None
        return cls(d, Matrix.from_rows(vals, QQ), bool(obj.get("unitary", True)))


def _guard(d: int, n: int, cap: int | None = None):
    cap = tensor_cap() if cap is None else cap
    if d ** (2 * n) > cap:
        raise TooLargeError(f"V^(x){n} operators have {d ** (2 * n)} entries, above the cap {cap}")


def local_operator(R: RMatrix, n: int, i: int) -> Matrix:
    """R_i = I^(x)(i-1) (x) R (x) I^(x)(n-i-1) on V^(x)n."""
    if not 1 <= i <= n - 1:
        raise ValueError(f"R_{i} is undefined on {n} factors")
    f = R.field
    return Matrix.identity(R.d ** (i - 1), f).kron(R.R).kron(Matrix.identity(R.d ** (n - i - 1), f))


def _integral(R: RMatrix) -> tuple[np.ndarray, int]:
    """(R', D) with R = R'/D and R' an object array of Python ints."""
    D = math.lcm(*(Fraction(x).denominator for x in R.R.data.reshape(-1)))
    out = np.empty(R.R.shape, dtype=object)
    for idx, x in np.ndenumerate(R.R.data):
        out[idx] = int(Fraction(x) * D)
    return out, D


def _int_eye(n: int, dtype=object) -> np.ndarray:
    out = np.zeros((n, n), dtype=dtype)
    if dtype is object:
        out[...] = 0
    for i in range(n):
        out[i, i] = 1
    return out


def _safe_dtype(Rm: np.ndarray, d: int, steps: int):
    """int64 when |entries| of a product of ``steps`` local operators provably fit, else object."""
    top = max((abs(int(x)) for x in Rm.reshape(-1)), default=0)
    return np.int64 if (max(top, 1) * d * d) ** steps < 2**62 else object


def _left_local(Rm: np.ndarray, d: int, n: int, i: int, X: np.ndarray) -> np.ndarray:
    """R_i @ X without forming R_i; X has d^n rows."""
    cols = X.shape[1]
    Y = X.reshape(d ** (i - 1), d * d, d ** (n - i - 1), cols)
    Z = np.tensordot(Rm, Y, axes=(1, 1))  # (d*d, pre, post, cols)
    return np.transpose(Z, (1, 0, 2, 3)).reshape(d ** n, cols)


def _right_local(Rm: np.ndarray, d: int, n: int, i: int, X: np.ndarray) -> np.ndarray:
    """X @ R_i."""
    rows = X.shape[0]
    Y = X.reshape(rows, d ** (i - 1), d * d, d ** (n - i - 1))
    Z = np.tensordot(Y, Rm, axes=(2, 0))  # (rows, pre, post, d*d)
    return np.transpose(Z, (0, 1, 3, 2)).reshape(rows, d ** n)


@dataclass
class QYBEVerdict:
    ok: bool
    witness: dict | None = None

    def __bool__(self):
        return self.ok


def _first_difference(A: Matrix, B: Matrix):
    diff = np.argwhere(np.array([[x != y for x, y in zip(ra, rb)] for ra, rb in zip(A.data, B.data)], dtype=bool))
    if len(diff) == 0:
        return None
    r, c = (int(x) for x in diff[0])
    return r, c, A.data[r, c], B.data[r, c]


def check_unitary_qybe(R: RMatrix) -> QYBEVerdict:
    """R1 R2 R1 = R2 R1 R2 on V^(x)3 and R^2 = 1 on V^(x)2, compared entrywise."""
    if R.R.shape != (R.d ** 2, R.d ** 2):
        raise ValueError("dimension mismatch")
    f = R.field
    sq = R.R @ R.R
    hit = _first_difference(sq, Matrix.identity(R.d ** 2, f))
    if hit:
        r, c, a, b = hit
        return QYBEVerdict(False, {"identity": "R^2 = 1", "entry": [r, c], "lhs": str(a), "rhs": str(b)})
    R1, R2 = local_operator(R, 3, 1), local_operator(R, 3, 2)
    hit = _first_difference(R1 @ R2 @ R1, R2 @ R1 @ R2)
    if hit:
        r, c, a, b = hit
        return QYBEVerdict(False, {"identity": "R1R2R1 = R2R1R2", "entry": [r, c], "lhs": str(a), "rhs": str(b)})
    return QYBEVerdict(True)


def _require_unitary(R: RMatrix):
    v = check_unitary_qybe(R)
    if not v.ok:
        raise ValueError(f"R fails the unitary QYBE: {v.witness}")


def word_action(R: RMatrix, n: int, word) -> Matrix:
    """R_{i_1} ... R_{i_m} on V^(x)n."""
    _guard(R.d, n)
    word = list(word)
    Rm, D = _integral(R)
    dtype = _safe_dtype(Rm, R.d, len(word))
    Rm = Rm.astype(dtype)
    X = _int_eye(R.d ** n, dtype)
    for i in reversed(word):
        X = _left_local(Rm, R.d, n, i, X)
    scale = D ** len(word)
    return Matrix._wrap(np.vectorize(lambda x: Fraction(int(x), scale), otypes=[object])(X), R.field)


def sn_action(R: RMatrix, n: int, sigma) -> Matrix:
    """Image of sigma (one-line notation on 1..n) under the functor defined by R."""
    _require_unitary(R)
    return word_action(R, n, reduced_word(check_perm(sigma, n)))


def _check_char_zero(R: RMatrix):
    if not isinstance(R.field, RationalField):
        raise ValueError(f"the antisymmetrizer needs characteristic zero, R is over {R.field}")


def _antisymmetrizer_traces(R: RMatrix, N: int) -> list[Fraction]:
    """tr sum_sigma sign(sigma) R_sigma on V^(x)n for n = 0..N, by coset recursion.

    A_n = (A_{n-1} (x) I) sum_j (-1)^j R_{n-1} ... R_{n-j}, run on the integer
    matrix D R with the powers of D tracked separately.
    """
    d = R.d
    Rm, D = _integral(R)
    traces = [Fraction(1)]
    A = _int_eye(1)
    scale = 0
    for n in range(1, N + 1):
        _guard(d, n)
        C = _int_eye(d ** n)
        S = C * D ** (n - 1)
        for j in range(1, n):
            C = _right_local(Rm, d, n, n - j, C)
            S = S + C * ((-1) ** j * D ** (n - 1 - j))
        A = np.kron(A, _int_eye(d)).dot(S)
        scale += n - 1
        traces.append(Fraction(sum(A[k, k] for k in range(d ** n)), D ** scale))
    return traces


def antisym_dim(R: RMatrix, n: int) -> int:
    """dim of the image of the antisymmetrizer of S_n acting through R."""
    _check_char_zero(R)
    if n < 0:
        raise ValueError("n must be nonnegative")
    tr = _antisymmetrizer_traces(R, n)[n] / math.factorial(n)
    if tr.denominator != 1 or tr < 0:
        raise ValueError(f"antisymmetrizer trace {tr} is not a nonnegative integer; R is not a valid datum")
    return int(tr)


def psi_series(R: RMatrix, N: int) -> TruncatedSeries:
    """psi_1 = d and psi_n = tr(R_1 ... R_{n-1}) for n <= N."""
    _require_unitary(R)
    _guard(R.d, N)
    Rm, D = _integral(R)
    coeffs = [Fraction(0)] * (N + 1)
    for n in range(1, N + 1):
        dtype = _safe_dtype(Rm, R.d, n - 1)
        X = _int_eye(R.d ** n, dtype)
        for i in range(n - 1, 0, -1):
            X = _left_local(Rm.astype(dtype), R.d, n, i, X)
        coeffs[n] = Fraction(int(sum(X[k, k] for k in range(R.d ** n))), D ** (n - 1))
    return TruncatedSeries(coeffs)


def hilbert_series(R: RMatrix, N: int, cross_check: bool = True) -> TruncatedSeries:
    """exp of the integrated psi series; each coefficient is checked against antisym_dim."""
    H = exp_integral_transform(psi_series(R, N))
    if cross_check:
        _check_char_zero(R)
        traces = _antisymmetrizer_traces(R, N)
        for n in range(N + 1):
            direct = traces[n] / math.factorial(n)
            if H[n] != direct:
                raise AssertionError(f"Hilbert coefficient {n}: transform gives {H[n]}, antisymmetrizer gives {direct}")
    return H


def negation_duality_check(R: RMatrix, N: int) -> bool:
    """H_{-R}(t) H_R(-t) = 1 up to t^N."""
    prod = hilbert_series(-R, N, cross_check=False) * hilbert_series(R, N, cross_check=False).substitute_scaled(-1)
    return prod == TruncatedSeries.one(N)


# -- commutative algebra construction ------------------------------------------------

@dataclass
class CommAlgebraDatum:
    """Commutative algebra A, a in A(x)A with a t(a) = 1, and an A-module M.

    ``action[i]`` is the matrix of e_i on M.
    """

    A: Algebra
    a: np.ndarray
    action: list[Matrix]
    problems: list[str] = field(default_factory=list, init=False)

    def __post_init__(self):
        self.a = self.A.field.array(self.a).reshape(-1)
        self.action = [m if isinstance(m, Matrix) else Matrix.from_rows(m, self.A.field) for m in self.action]
        self.problems = self.check()

    @property
    def dim_M(self) -> int:
        return self.action[0].shape[0]

    def check(self) -> list[str]:
        A, f = self.A, self.A.field
        bad = []
        if not A.is_commutative:
            bad.append("A is not commutative")
        m = A.dim
        if self.a.shape != (m * m,):
            bad.append("a must lie in A(x)A")
            return bad
        AA = A.tensor(A)
        ta = self.a.reshape(m, m).T.reshape(-1)
        if not vec_equal(f, AA.multiply(self.a, ta), AA.unit):
            bad.append("a t(a) != 1")
        if len(self.action) != m:
            bad.append("need one action matrix per basis element of A")
            return bad
        dM = self.dim_M
        unit_act = sum((self.action[i].data * A.unit[i] for i in range(m)), f.zeros((dM, dM)))
        if Matrix._wrap(unit_act, f) != Matrix.identity(dM, f):
            bad.append("1 does not act as the identity on M")
        for i in range(m):
            for j in range(m):
                lhs = self.action[i] @ self.action[j]
                rhs = sum((self.action[k].data * A.mult[i, j, k] for k in range(m)), f.zeros((dM, dM)))
                if lhs != Matrix._wrap(rhs, f):
                    bad.append(f"module axiom fails for e{i} e{j}")
                    return bad
        return bad


def split_algebra(m: int) -> Algebra:
    """k^m with orthogonal idempotent basis."""
    mult = QQ.zeros((m, m, m))
    for i in range(m):
        mult[i, i, i] = Fraction(1)
    return Algebra(QQ, mult, [Fraction(1)] * m, name=f"QQ^{m}")


def split_datum(sign: int, c=1, module_copies: int = 1) -> CommAlgebraDatum:
    """A = k x k, a = sign(e1(x)e1 + e2(x)e2) + c e1(x)e2 + c^-1 e2(x)e1, M = A^module_copies."""
    c = Fraction(c)
    A = split_algebra(2)
    a = [Fraction(sign), c, 1 / c, Fraction(sign)]
    acts = []
    for i in range(2):
        diag = QQ.zeros((2 * module_copies, 2 * module_copies))
        for k in range(module_copies):
            diag[2 * k + i, 2 * k + i] = Fraction(1)
        acts.append(Matrix._wrap(diag, QQ))
    return CommAlgebraDatum(A, a, acts)


def mu_invariant(datum: CommAlgebraDatum) -> int:
    """mu(a) in A, which must be +1 or -1."""
    if datum.problems:
        raise ValueError(f"invalid datum: {datum.problems}")
    A = datum.A
    m = A.dim
    mu = A.field.zeros(m)
    for i in range(m):
        for j in range(m):
            mu = mu + datum.a[i * m + j] * A.mult[i, j]
    for s in (1, -1):
        if vec_equal(A.field, mu, A.unit * s):
            return s
    raise ValueError(f"mu(a) = {list(mu)} is not +1 or -1")


def build_commutative_R(datum: CommAlgebraDatum) -> RMatrix:
    """R = L(a) t on M(x)M."""
    if datum.problems:
        raise ValueError(f"invalid datum: {datum.problems}")
    A, f = datum.A, datum.A.field
    m, dM = A.dim, datum.dim_M
    L = f.zeros((dM * dM, dM * dM))
    for i in range(m):
        for j in range(m):
            c = datum.a[i * m + j]
            if c != 0:
                L = L + datum.action[i].kron(datum.action[j]).data * c
    flip = RMatrix.flip(dM).R
    return RMatrix(dM, Matrix._wrap(L, f) @ flip)


def closed_form_hilbert(mu: int, dim_M: int, N: int) -> TruncatedSeries:
    """(1 + mu t)^(mu dim_M) up to t^N."""
    base = TruncatedSeries([1, mu] + [0] * max(N - 1, 0)).truncate(N)
    out = TruncatedSeries.one(N)
    for _ in range(dim_M):
        out = out * base
    return out if mu == 1 else out.inverse()
