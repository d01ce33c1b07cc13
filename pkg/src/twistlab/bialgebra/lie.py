"""Exterior algebra of a Lie algebra and its degree -1 bracket."""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction


@dataclass(frozen=True)
class LieAlgebraDatum:
    """Bracket [e_i, e_j] = sum_k c[i][j][k] e_k over QQ."""

    dim: int
    c: tuple
    names: tuple[str, ...] = ()

    def __post_init__(self):
        c = tuple(tuple(tuple(Fraction(x) for x in row) for row in plane) for plane in self.c)
        object.__setattr__(self, "c", c)
        if len(c) != self.dim or any(len(r) != self.dim or any(len(v) != self.dim for v in r) for r in c):
            raise ValueError("structure constants must be dim x dim x dim")
        if not self.names:
            object.__setattr__(self, "names", tuple(f"x{i}" for i in range(self.dim)))
        bad = self.check()
        if bad:
            raise ValueError(f"not a Lie algebra: {bad}")

    def bracket(self, u: dict, v: dict) -> dict:
        """Bracket of vectors given as {index: coefficient}."""
        out: dict[int, Fraction] = {}
        for i, a in u.items():
            for j, b in v.items():
                for k, ck in enumerate(self.c[i][j]):
                    if ck:
                        out[k] = out.get(k, Fraction(0)) + a * b * ck
        return {k: x for k, x in out.items() if x}

    def check(self) -> list[str]:
        bad = []
        n = self.dim
        for i, j in itertools.product(range(n), repeat=2):
            if any(self.c[i][j][k] != -self.c[j][i][k] for k in range(n)):
                bad.append(f"antisymmetry at ({i},{j})")
                return bad
        for i, j, k in itertools.combinations(range(n), 3):
            acc: dict[int, Fraction] = {}
            for a, b, cc in ((i, j, k), (j, k, i), (k, i, j)):
                for t, x in self.bracket({a: Fraction(1)}, self.bracket({b: Fraction(1)}, {cc: Fraction(1)})).items():
                    acc[t] = acc.get(t, Fraction(0)) + x
            if any(acc.values()):
                bad.append(f"Jacobi at ({i},{j},{k})")
                return bad
        return bad

    @classmethod
    def abelian(cls, n: int) -> "LieAlgebraDatum":
        return cls(n, tuple(tuple(tuple(0 for _ in range(n)) for _ in range(n)) for _ in range(n)))

    @classmethod
    def sl2(cls) -> "LieAlgebraDatum":
        """Basis (e, f, h): [e,f] = h, [h,e] = 2e, [h,f] = -2f."""
        c = [[[0] * 3 for _ in range(3)] for _ in range(3)]
        e, f, h = 0, 1, 2
        c[e][f][h], c[f][e][h] = 1, -1
        c[h][e][e], c[e][h][e] = 2, -2
        c[h][f][f], c[f][h][f] = -2, 2
        return cls(3, c, ("e", "f", "h"))

    def product(self, other: "LieAlgebraDatum") -> "LieAlgebraDatum":
        n = self.dim + other.dim
        c = [[[0] * n for _ in range(n)] for _ in range(n)]
        for i, j, k in itertools.product(range(self.dim), repeat=3):
            c[i][j][k] = self.c[i][j][k]
        s = self.dim
        for i, j, k in itertools.product(range(other.dim), repeat=3):
            c[s + i][s + j][s + k] = other.c[i][j][k]
        names = tuple(x + "1" for x in self.names) + tuple(x + "2" for x in other.names)
        return LieAlgebraDatum(n, c, names)


@dataclass(frozen=True)
class Wedge:
    """Homogeneous element of Lambda^degree g: {increasing index tuple: coefficient}."""

    degree: int
    terms: tuple  # sorted ((indices, coeff), ...)

    @classmethod
    def make(cls, degree: int, terms: dict) -> "Wedge":
        clean = {k: Fraction(v) for k, v in terms.items() if v}
        return cls(degree, tuple(sorted(clean.items())))

    @classmethod
    def basis(cls, *indices: int) -> "Wedge":
        return cls.make(len(indices), _normalise(list(indices), Fraction(1)))

    @classmethod
    def zero(cls, degree: int) -> "Wedge":
        return cls(degree, ())

    def as_dict(self) -> dict:
        return dict(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "Wedge") -> "Wedge":
        if self.degree != other.degree and not (self.is_zero() or other.is_zero()):
            raise ValueError("adding wedges of different degree")
        acc = self.as_dict()
        for k, v in other.terms:
            acc[k] = acc.get(k, Fraction(0)) + v
        return Wedge.make(max(self.degree, other.degree) if self.is_zero() or other.is_zero() else self.degree, acc)

    def scale(self, c) -> "Wedge":
        return Wedge.make(self.degree, {k: v * Fraction(c) for k, v in self.terms})

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + (-other)

    def __eq__(self, other):
        if not isinstance(other, Wedge):
            return NotImplemented
        if self.is_zero() and other.is_zero():
            return True
        return self.degree == other.degree and self.terms == other.terms

    def __hash__(self):
        return hash(self.terms)

    def render(self, names=None) -> str:
        if not self.terms:
            return "0"
        parts = []
        for idx, c in self.terms:
            mono = "^".join(names[i] if names else f"x{i}" for i in idx) or "1"
            parts.append(f"{c}*{mono}")
        return " + ".join(parts)


def _normalise(indices: list[int], coeff: Fraction) -> dict:
    """Sort a wedge monomial, tracking the sign; repeated factors give zero."""
    if len(set(indices)) != len(indices):
        return {}
    sign = 1
    arr = list(indices)
    for i in range(len(arr)):
        for j in range(len(arr) - 1 - i):
            if arr[j] > arr[j + 1]:
                arr[j], arr[j + 1] = arr[j + 1], arr[j]
                sign = -sign
    return {tuple(arr): coeff * sign}


def schouten_bracket(g: LieAlgebraDatum, alpha: Wedge, beta: Wedge) -> Wedge:
    """sum_{i,j} (-1)^(i+j) [x_i, y_j] ^ x_1..^x_i..x_s ^ y_1..^y_j..y_t, extended bilinearly."""
    s, t = alpha.degree, beta.degree
    deg = s + t - 1
    if deg > g.dim:
        raise ValueError(f"bracket degree {deg} exceeds dim g = {g.dim}")
    if s == 0 or t == 0:
        return Wedge.zero(max(deg, 0))
    acc: dict = {}
    for xs, a in alpha.terms:
        for ys, b in beta.terms:
            for i in range(s):
                for j in range(t):
                    br = g.bracket({xs[i]: Fraction(1)}, {ys[j]: Fraction(1)})
                    rest = list(xs[:i] + xs[i + 1:]) + list(ys[:j] + ys[j + 1:])
                    sign = -1 if (i + j) % 2 else 1  # (-1)^((i+1)+(j+1))
                    for k, ck in br.items():
                        for key, val in _normalise([k] + rest, a * b * ck * sign).items():
                            acc[key] = acc.get(key, Fraction(0)) + val
    return Wedge.make(deg, acc)


def first_approx_cone_check(g: LieAlgebraDatum, alpha: Wedge) -> bool:
    """alpha in Lambda^2 g lies in the first approximation iff [[alpha, alpha]] = 0."""
    if alpha.degree != 2 and not alpha.is_zero():
        raise ValueError("the cone equation is stated for Lambda^2 g")
    if alpha.is_zero():
        return True
    return schouten_bracket(g, alpha, alpha).is_zero()
