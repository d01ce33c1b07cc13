"""Acceptance battery behind ``twistlab suite``.

Each entry returns (ok, values) and raises only on internal errors.
"""
from __future__ import annotations

import itertools
import time
from fractions import Fraction

from . import crystal, hecke, rmatrix, symfunc
from .bialgebra import (FiniteGroup, amitsur_complex, bar_complex, cobar_complex, field_extension, group_algebra,
                        small_groups, sweedler_cohomology, unit_cohomology)
from .cosimplicial import differential
from .exact.fields import GF
from .exact.matrix import Matrix
from .exact.scalars import RatFunc


def hecke_invariant():
    res = hecke.compute_a_invariant()
    q = RatFunc.q()
    ok = res.value == q / (q + 1) ** 2 and res.proportional
    return ok, {"a": str(res.value)}


def crystal_invariant():
    vals = {N: crystal.a_invariant_crystal(N) for N in (2, 3, 4)}
    return all(v == 0 for v in vals.values()), {f"N={N}": str(v) for N, v in vals.items()}


def test_rmatrices() -> list[tuple[str, rmatrix.RMatrix, int]]:
    out = []
    for d, N in ((2, 6), (3, 4)):
        out.append((f"flip d={d}", rmatrix.RMatrix.flip(d), N))
        out.append((f"-flip d={d}", -rmatrix.RMatrix.flip(d), N))
    for sign in (1, -1):
        dat = rmatrix.split_datum(sign, Fraction(2))
        out.append((f"R(kxk, mu={sign:+d})", rmatrix.build_commutative_R(dat), 6))
    return out


def hilbert_two_route():
    values, ok = {}, True
    for name, R, N in test_rmatrices():
        H = rmatrix.hilbert_series(R, N)
        dims = [rmatrix.antisym_dim(R, n) for n in range(N + 1)]
        closed = None
        if name.startswith("R("):
            dat = rmatrix.split_datum(1 if "+1" in name else -1, Fraction(2))
            mu = rmatrix.mu_invariant(dat)
            closed = rmatrix.closed_form_hilbert(mu, dat.dim_M, N)
        else:
            mu = -1 if name.startswith("-") else 1
            closed = rmatrix.closed_form_hilbert(mu, R.d, N)
        good = list(H) == dims and H == closed
        ok &= good
        values[name] = [str(x) for x in H]
    return ok, values


def negation_duality():
    res = {name: rmatrix.negation_duality_check(R, 6) for name, R, _ in test_rmatrices()}
    res["d=1"] = rmatrix.negation_duality_check(rmatrix.RMatrix.flip(1), 6)
    return all(res.values()), res


def multiplicities():
    res = {n: multiplicity for n, multiplicity in ((n, crystal.multiplicity_compare(n, 4)) for n in range(1, 5))}
    sizes = crystal.multiplicity_compare(3, 3).sizes
    ok = all(v.ok for v in res.values()) and sizes == [10, 8, 8, 1]
    return ok, {"sizes n=3 N=3": sizes, **{f"n={n}": {str(k): m for k, m in v.crystal.items()} for n, v in res.items()}}


def sweedler():
    """Z/2 values plus agreement of the Smith route with direct unit enumeration on the cobar complex."""
    ok = all(str(sweedler_cohomology(FiniteGroup.cyclic(2), 3, n)) == "Z/2" for n in (1, 2))
    values = {}
    for G in small_groups(4):
        for p in (3, 5):
            C = cobar_complex(group_algebra(G, GF(p)), 3)
            for n in (1, 2):
                a = sweedler_cohomology(G, p, n)
                b = unit_cohomology(C, n).group
                values[f"{G.name} p={p} n={n}"] = str(a)
                ok &= a == b
    return ok, values


def amitsur():
    values, ok = {}, True
    for q, m in ((2, 2), (3, 2)):
        C = amitsur_complex(field_extension(q, m), 3)
        for n in (1, 2):
            g = unit_cohomology(C, n, method="enumerate").group
            values[f"F{q ** m}/F{q} n={n}"] = str(g)
            ok &= g.is_trivial
    return ok, values


def property_grid():
    failures = []
    for G, p in ((FiniteGroup.cyclic(2), 3), (FiniteGroup.cyclic(3), 2), (FiniteGroup.symmetric(3), 5)):
        H = group_algebra(G, GF(p))
        for C in (bar_complex(H, 3), cobar_complex(H, 3)):
            failures += C.check_identities()
            for n in range(C.top - 1):
                dd = differential(C, n + 1) @ differential(C, n)
                if dd != Matrix.zeros(*dd.shape, dd.field):
                    failures.append(f"{C.name}: d d != 0 at {n}")
    C = amitsur_complex(field_extension(2, 2), 3)
    failures += C.check_identities()
    for n in range(1, 5):
        try:
            hecke.q_antisymmetrizer(n)
        except AssertionError as exc:
            failures.append(f"hecke n={n}: {exc}")
    for name, R, _ in test_rmatrices():
        for n in (3, 4):
            for w in itertools.permutations(range(1, n + 1)):
                words = rmatrix.reduced_words(w)
                first = rmatrix.word_action(R, n, words[0])
                if any(rmatrix.word_action(R, n, v) != first for v in words[1:]):
                    failures.append(f"{name}: word dependence at {w}")
    X = crystal.standard_crystal(4)
    for n in range(1, 5):
        failures += crystal.tensor_power(X, n).check_axioms()
    return not failures, {"failures": failures[:10]}


def total_positivity():
    binomial_ok = all(symfunc.toeplitz_minors_nonneg(symfunc.HilbertHom.binomial(d, d).values, 4).ok
                      for d in range(1, 6))
    v = symfunc.toeplitz_minors_nonneg([1, 0, 1], 4)
    ok = binomial_ok and not v.ok and v.witness.value == -1
    return ok, {"binomials": binomial_ok, "1,0,1 witness": None if v.witness is None else v.witness.value}


CRITERIA = [
    ("1 hecke a-invariant", hecke_invariant),
    ("2 crystal a-invariant", crystal_invariant),
    ("3 hilbert two routes", hilbert_two_route),
    ("4 negation duality", negation_duality),
    ("5 crystal/schur multiplicities", multiplicities),
    ("6 sweedler cohomology", sweedler),
    ("7 amitsur cohomology", amitsur),
    ("8 property grid", property_grid),
    ("9 total positivity", total_positivity),
]


def run_suite():
    """Yield (name, ok, values, seconds) for every criterion."""
    for name, fn in CRITERIA:
        t0 = time.perf_counter()
        ok, values = fn()
        yield name, bool(ok), values, time.perf_counter() - t0
