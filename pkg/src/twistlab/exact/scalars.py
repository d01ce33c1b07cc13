"""Exact scalar types: prime-field elements and rational functions in q.

Rationals are plain :class:`fractions.Fraction`.
"""
from __future__ import annotations

from fractions import Fraction
from functools import total_ordering


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


class GFElement:
    """Element of the prime field F_p, stored as a residue in ``0..p-1``."""

    __slots__ = ("p", "v")

    def __init__(self, p: int, v: int):
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "v", int(v) % p)

    def __setattr__(self, name, value):
        raise AttributeError("GFElement is immutable")

    def _other(self, other):
        if isinstance(other, GFElement):
            if other.p != self.p:
                raise ValueError(f"mixed prime fields F_{self.p} and F_{other.p}")
            return other.v
        if isinstance(other, int):
            return other
        if isinstance(other, Fraction) and other.denominator == 1:
            return int(other)
        return NotImplemented

    def __add__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return GFElement(self.p, self.v + o)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return GFElement(self.p, self.v - o)

    def __rsub__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return GFElement(self.p, o - self.v)

    def __mul__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return GFElement(self.p, self.v * o)

    __rmul__ = __mul__

    def inverse(self) -> "GFElement":
        if self.v == 0:
            raise ZeroDivisionError("inverse of 0 in F_%d" % self.p)
        return GFElement(self.p, pow(self.v, -1, self.p))

    def __truediv__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return self * GFElement(self.p, o).inverse()

    def __rtruediv__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return GFElement(self.p, o) * self.inverse()

    def __neg__(self):
        return GFElement(self.p, -self.v)

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        return GFElement(self.p, pow(self.v, e, self.p))

    def __eq__(self, other):
        if isinstance(other, GFElement):
            return self.p == other.p and self.v == other.v
        if isinstance(other, int):
            return self.v == other % self.p
        return NotImplemented

    def __hash__(self):
        return hash(("GF", self.p, self.v))

    def __bool__(self):
        return self.v != 0

    def __int__(self):
        return self.v

    def __repr__(self):
        return f"GF({self.p})({self.v})"


# -- dense univariate polynomials over Q, ascending coefficient tuples ------

def _trim(c):
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def padd(a, b):
    n = max(len(a), len(b))
    return _trim((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n))


def pneg(a):
    return tuple(-x for x in a)


def psub(a, b):
    return padd(a, pneg(b))


def pmul(a, b):
    if not a or not b:
        return ()
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            out[i + j] += x * y
    return _trim(out)


def pdivmod(a, b):
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    a = [Fraction(x) for x in a]
    quo = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    lead = Fraction(b[-1])
    while len(a) >= len(b) and a:
        shift = len(a) - len(b)
        f = a[-1] / lead
        quo[shift] = f
        for i, y in enumerate(b):
            a[i + shift] -= f * y
        a = list(_trim(a))
    return _trim(quo), _trim(a)


def pmonic(a):
    if not a:
        return a
    lead = a[-1]
    return tuple(Fraction(x) / lead for x in a)


def pgcd(a, b):
    a, b = _trim(a), _trim(b)
    while b:
        a, b = b, pdivmod(a, b)[1]
    return pmonic(a)


def peval(a, x):
    acc = Fraction(0)
    for c in reversed(a):
        acc = acc * x + c
    return acc


def pstr(a, var="q"):
    if not a:
        return "0"
    terms = []
    for i in range(len(a) - 1, -1, -1):
        c = a[i]
        if c == 0:
            continue
        mono = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
        if mono and c == 1:
            body = mono
        elif mono and c == -1:
            body = "-" + mono
        elif mono:
            body = f"{c}*{mono}"
        else:
            body = str(c)
        terms.append(body)
    out = terms[0]
    for t in terms[1:]:
        out += " - " + t[1:] if t.startswith("-") else " + " + t
    return out


@total_ordering
class RatFunc:
    """Rational function in one variable q over Q.

    Canonical form: coprime numerator/denominator, denominator monic; zero
    is ``0/1``. Equality is structural on the canonical form.
    """

    __slots__ = ("num", "den")

    def __init__(self, num=(), den=(1,)):
        num = _trim(Fraction(x) for x in num)
        den = _trim(Fraction(x) for x in den)
        if not den:
            raise ZeroDivisionError("zero denominator")
        if not num:
            object.__setattr__(self, "num", ())
            object.__setattr__(self, "den", (Fraction(1),))
            return
        if len(den) > 1:
            g = pgcd(num, den)
            if len(g) > 1:
                num = pdivmod(num, g)[0]
                den = pdivmod(den, g)[0]
        lead = den[-1]
        object.__setattr__(self, "num", tuple(x / lead for x in num))
        object.__setattr__(self, "den", tuple(x / lead for x in den))

    def __setattr__(self, name, value):
        raise AttributeError("RatFunc is immutable")

    @classmethod
    def _canonical(cls, num, den) -> "RatFunc":
        """Wrap a pair already known to be in canonical form."""
        out = object.__new__(cls)
        object.__setattr__(out, "num", num)
        object.__setattr__(out, "den", den)
        return out

    @classmethod
    def q(cls) -> "RatFunc":
        return cls((0, 1))

    @classmethod
    def const(cls, c) -> "RatFunc":
        return cls((Fraction(c),))

    @staticmethod
    def _coerce(x):
        if isinstance(x, RatFunc):
            return x
        if isinstance(x, (int, Fraction)):
            return RatFunc.const(x)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if self.den == o.den:
            return RatFunc(padd(self.num, o.num), self.den)
        return RatFunc(padd(pmul(self.num, o.den), pmul(o.num, self.den)), pmul(self.den, o.den))

    __radd__ = __add__

    def __neg__(self):
        return RatFunc._canonical(pneg(self.num), self.den)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if not self.num or not o.num:
            return RatFunc()
        if len(self.den) == 1 and len(o.den) == 1:
            return RatFunc._canonical(pmul(self.num, o.num), self.den)
        return RatFunc(pmul(self.num, o.num), pmul(self.den, o.den))

    __rmul__ = __mul__

    def inverse(self) -> "RatFunc":
        if not self.num:
            raise ZeroDivisionError("inverse of zero rational function")
        return RatFunc(self.den, self.num)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o * self.inverse()

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        out = RatFunc.const(1)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def __eq__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return False
        return self.num == o.num and self.den == o.den

    def __lt__(self, other):
        # only used for deterministic sorting
        o = self._coerce(other)
        return (self.num, self.den) < (o.num, o.den)

    def __hash__(self):
        if len(self.den) == 1 and len(self.num) <= 1:
            return hash(self.num[0] if self.num else Fraction(0))
        return hash((self.num, self.den))

    def __bool__(self):
        return bool(self.num)

    def __call__(self, value):
        """Evaluate at a rational ``value``; raises ZeroDivisionError at a pole."""
        d = peval(self.den, Fraction(value))
        if d == 0:
            raise ZeroDivisionError(f"denominator vanishes at q={value}")
        return peval(self.num, Fraction(value)) / d

    def is_constant(self) -> bool:
        return len(self.den) == 1 and len(self.num) <= 1

    def __str__(self):
        n = pstr(self.num)
        if self.den == (Fraction(1),):
            return n
        d = pstr(self.den)
        if len([c for c in self.num if c != 0]) > 1:
            n = f"({n})"
        return f"{n}/({d})"

    def __repr__(self):
        return f"RatFunc({self})"
