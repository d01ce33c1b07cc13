"""Partitions and the free lambda-ring on one generator.

Only the Pieri rule x * s^mu is implemented; every Schur class is evaluated
through the dual Jacobi-Trudi determinant in the lambda^n x.
"""
from __future__ import annotations

import itertools
import math
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .exact.series import TruncatedSeries, expand_rational


@dataclass(frozen=True, order=True)
class Partition:
    parts: tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        if any(p <= 0 for p in parts):
            raise ValueError(f"partition parts must be positive: {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError(f"partition parts must be weakly decreasing: {parts}")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def of(cls, *parts: int) -> "Partition":
        return cls(tuple(parts))

    @property
    def weight(self) -> int:
        return sum(self.parts)

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def __str__(self):
        return "(" + ",".join(map(str, self.parts)) + ")"

    def to_json(self) -> list[int]:
        return list(self.parts)

    @classmethod
    def from_json(cls, obj) -> "Partition":
        return cls(tuple(obj))


@dataclass(frozen=True)
class HilbertHom:
    """A ring homomorphism K_0 -> Z recorded by its values on lambda^0 x .. lambda^N x."""

    values: tuple[int, ...]

    def __post_init__(self):
        vals = tuple(int(v) for v in self.values)
        if not vals or vals[0] != 1:
            raise ValueError("a Hilbert homomorphism sends lambda^0 x to 1")
        object.__setattr__(self, "values", vals)

    @property
    def order(self) -> int:
        return len(self.values) - 1

    def lam(self, m: int) -> int:
        if m < 0:
            return 0
        if m > self.order:
            raise ValueError(f"lambda^{m} x lies beyond the stored truncation N={self.order}")
        return self.values[m]

    @classmethod
    def binomial(cls, d: int, order: int) -> "HilbertHom":
        """The Hilbert homomorphism of a d-dimensional space: values C(d, m)."""
        return cls(tuple(math.comb(d, m) for m in range(order + 1)))

    @classmethod
    def from_series(cls, series: TruncatedSeries) -> "HilbertHom":
        vals = []
        for c in series:
            if c.denominator != 1:
                raise ValueError(f"non-integral coefficient {c}")
            vals.append(int(c))
        return cls(tuple(vals))

    def to_json(self) -> dict:
        return {"lambda_values": list(self.values)}

    @classmethod
    def from_json(cls, obj) -> "HilbertHom":
        return cls(tuple(obj["lambda_values"]))


def partitions(n: int, max_part: int | None = None) -> list[Partition]:
    """All partitions of n in reverse lexicographic order."""
    max_part = n if max_part is None else max_part
    if n == 0:
        return [Partition()]
    out = []
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions(n - first, first):
            out.append(Partition((first,) + rest.parts))
    return out


def dual_partition(mu: Partition) -> Partition:
    if not mu.parts:
        return Partition()
    return Partition(tuple(sum(1 for p in mu.parts if p >= i) for i in range(1, mu.parts[0] + 1)))


def pieri_multiply(mu: Partition) -> list[Partition]:
    """Shapes nu with one box more than mu; x * s^mu is their multiplicity-free sum."""
    parts = list(mu.parts)
    out = []
    for r in range(len(parts) + 1):
        if r == len(parts) or r == 0 or parts[r - 1] > parts[r]:
            new = parts.copy()
            if r == len(parts):
                new.append(1)
            else:
                new[r] += 1
            out.append(Partition(tuple(new)))
    return out


def power_decompose(n: int) -> dict[Partition, int]:
    """Multiplicities f^mu of s^mu x in x^n, by iterating the Pieri rule."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    current: Counter = Counter({Partition(): 1})
    for _ in range(n):
        nxt: Counter = Counter()
        for mu, mult in current.items():
            for nu in pieri_multiply(mu):
                nxt[nu] += mult
        current = nxt
    return dict(sorted(current.items(), reverse=True))


def _int_det(rows: Sequence[Sequence[int]]) -> int:
    """Fraction-free Bareiss elimination."""
    a = [list(map(int, r)) for r in rows]
    n = len(a)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def schur_value(mu: Partition, f: HilbertHom) -> int:
    """f(s^mu x) = det f(lambda^(mu'_i - i + j) x)."""
    conj = dual_partition(mu).parts
    k = len(conj)
    rows = [[f.lam(conj[i] - i + j) for j in range(k)] for i in range(k)]
    return _int_det(rows)


def cycle_census(mu: Mapping[int, int] | Sequence[int], n: int | None = None) -> int:
    """Number of permutations with mu_i cycles of length i.

    ``mu`` is either ``{i: mu_i}`` or the vector ``(mu_1, mu_2, ...)``.
    """
    counts = dict(mu) if isinstance(mu, Mapping) else {i + 1: m for i, m in enumerate(mu)}
    if any(i <= 0 or m < 0 for i, m in counts.items()):
        raise ValueError(f"invalid cycle type {counts}")
    total = sum(i * m for i, m in counts.items())
    if n is not None and total != n:
        raise ValueError(f"cycle type {counts} covers {total} points, not {n}")
    denom = 1
    for i, m in counts.items():
        denom *= math.factorial(m) * i ** m
    return math.factorial(total) // denom


def cycle_types(n: int) -> list[dict[int, int]]:
    return [dict(Counter(mu.parts)) for mu in partitions(n)]


@dataclass(frozen=True)
class MinorWitness:
    rows: tuple[int, ...]
    cols: tuple[int, ...]
    value: int


@dataclass(frozen=True)
class PositivityVerdict:
    ok: bool
    witness: MinorWitness | None = None

    def __bool__(self):
        return self.ok


def toeplitz_window(seq: Sequence[int]) -> list[list[int]]:
    """Visible L x L corner of the Toeplitz matrix T[i][j] = a_(j-i)."""
    L = len(seq)
    return [[int(seq[j - i]) if j >= i else 0 for j in range(L)] for i in range(L)]


def toeplitz_minors_nonneg(seq: Sequence[int], max_order: int) -> PositivityVerdict:
    """Check every minor of order <= max_order in the visible Toeplitz window."""
    T = toeplitz_window(seq)
    L = len(T)
    for k in range(1, min(max_order, L) + 1):
        for rows in itertools.combinations(range(L), k):
            for cols in itertools.combinations(range(L), k):
                val = _int_det([[T[r][c] for c in cols] for r in rows])
                if val < 0:
                    return PositivityVerdict(False, MinorWitness(rows, cols, val))
    return PositivityVerdict(True)


def verify_rational_form(series: TruncatedSeries, numer_roots: Iterable, denom_roots: Iterable) -> bool:
    """Does prod(1 + a_i t) / prod(1 - b_j t) reproduce the series up to its order?"""
    a = [Fraction(x) for x in numer_roots]
    b = [Fraction(x) for x in denom_roots]
    if any(x <= 0 for x in a + b):
        raise ValueError("candidate roots must be positive rationals")
    return tuple(expand_rational(a, b, series.order).coeffs) == tuple(series.coeffs)
