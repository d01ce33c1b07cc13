"""Truncated power series with exact rational coefficients."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

DEFAULT_ORDER = 8


@dataclass(frozen=True)
class TruncatedSeries:
    """c_0 + c_1 t + ... + c_N t^N, everything above t^N discarded."""

    coeffs: tuple

    def __init__(self, coeffs: Sequence):
        object.__setattr__(self, "coeffs", tuple(Fraction(c) for c in coeffs))
        if not self.coeffs:
            raise ValueError("a truncated series needs at least c_0")

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    @classmethod
    def zero(cls, order: int = DEFAULT_ORDER) -> "TruncatedSeries":
        return cls([0] * (order + 1))

    @classmethod
    def one(cls, order: int = DEFAULT_ORDER) -> "TruncatedSeries":
        return cls([1] + [0] * order)

    def __getitem__(self, n: int) -> Fraction:
        return self.coeffs[n]

    def __len__(self):
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def _align(self, other: "TruncatedSeries") -> int:
        return min(self.order, other.order)

    def truncate(self, order: int) -> "TruncatedSeries":
        c = list(self.coeffs[: order + 1])
        return TruncatedSeries(c + [0] * (order + 1 - len(c)))

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        n = self._align(other)
        return TruncatedSeries([self[i] + other[i] for i in range(n + 1)])

    def __neg__(self):
        return TruncatedSeries([-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, TruncatedSeries):
            return TruncatedSeries([c * Fraction(other) for c in self.coeffs])
        n = self._align(other)
        out = [Fraction(0)] * (n + 1)
        for i in range(n + 1):
            a = self[i]
            if a == 0:
                continue
            for j in range(n + 1 - i):
                out[i + j] += a * other[j]
        return TruncatedSeries(out)

    __rmul__ = __mul__

    def substitute_scaled(self, s) -> "TruncatedSeries":
        """f(s t); ``s = -1`` gives f(-t)."""
        s = Fraction(s)
        return TruncatedSeries([c * s ** i for i, c in enumerate(self.coeffs)])

    def inverse(self) -> "TruncatedSeries":
        if self[0] == 0:
            raise ZeroDivisionError("series with zero constant term is not invertible")
        inv = [Fraction(1) / self[0]]
        for n in range(1, self.order + 1):
            acc = sum((self[k] * inv[n - k] for k in range(1, n + 1)), Fraction(0))
            inv.append(-acc / self[0])
        return TruncatedSeries(inv)

    def __str__(self):
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mono = "" if i == 0 else ("t" if i == 1 else f"t^{i}")
            terms.append(f"{c}{'*' + mono if mono else ''}")
        return (" + ".join(terms) or "0") + f" + O(t^{self.order + 1})"


def exp_integral_transform(psi: TruncatedSeries) -> TruncatedSeries:
    """H(t) = exp(sum_{n>=1} (-1)^(n-1) psi_n t^n / n), truncated at psi's order.

    Computed with Newton's recurrence n h_n = sum_k (-1)^(k-1) psi_k h_{n-k}.
    """
    if psi[0] != 0:
        raise ValueError("psi must have zero constant term")
    h = [Fraction(1)]
    for n in range(1, psi.order + 1):
        acc = Fraction(0)
        for k in range(1, n + 1):
            term = psi[k] * h[n - k]
            acc += term if k % 2 else -term
        h.append(acc / n)
    return TruncatedSeries(h)


def expand_rational(numer_roots: Sequence, denom_roots: Sequence, order: int = DEFAULT_ORDER) -> TruncatedSeries:
    """Expansion of prod(1 + a_i t) / prod(1 - b_j t) up to t^order."""
    out = TruncatedSeries.one(order)
    for a in numer_roots:
        out = out * TruncatedSeries([1, Fraction(a)] + [0] * (order - 1) if order >= 1 else [1])
    for b in denom_roots:
        b = Fraction(b)
        out = out * TruncatedSeries([b ** i for i in range(order + 1)])
    return out
