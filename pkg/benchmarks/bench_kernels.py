"""Time the numba kernels against the pure-numpy fallback.

    python benchmarks/bench_kernels.py [--sizes 64 128 256] [--repeat 3]

The library picks its path from TWISTLAB_NUMBA (0 forces numpy); here both
paths are called explicitly so one run compares them. Results must agree.
"""
import argparse
import time

import numpy as np

from twistlab import _kernels
from twistlab.bialgebra import FiniteGroup
from twistlab.bialgebra.cohomology import _pullback_differential
from twistlab.bialgebra.complexes import cobar_complex
from twistlab.bialgebra.core import group_algebra
from twistlab.exact.fields import GF

P = 2_147_483_647


def best_of(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


def bench_rank(n, repeat, rng):
    a = rng.integers(-3, 4, size=(n, n // 2 * 3 // 2 + 1))
    t_nb, r_nb = best_of(lambda: _kernels.rank_mod_p(a, P, use_numba=True), repeat)
    t_np, r_np = best_of(lambda: _kernels.rank_mod_p(a, P, use_numba=False), repeat)
    assert r_nb == r_np
    return f"rank_mod_p      {str(a.shape):>12}  numba {t_nb:8.4f}s  numpy {t_np:8.4f}s  x{t_np / t_nb:6.1f}"


def bench_smith(D, label, repeat):
    t_nb, v_nb = best_of(lambda: _kernels.smith_local(D, 2, 3, use_numba=True), repeat)
    t_np, v_np = best_of(lambda: _kernels.smith_local(D, 2, 3, use_numba=False), repeat)
    assert v_nb == v_np
    return f"smith_local     {label:>12}  numba {t_nb:8.4f}s  numpy {t_np:8.4f}s  x{t_np / t_nb:6.1f}"


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sizes", type=int, nargs="+", default=[64, 128, 256])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    rng = np.random.default_rng(0)

    # warm the JIT so compile time is not counted
    _kernels.rank_mod_p(np.eye(2, dtype=np.int64), P, use_numba=True)
    _kernels.smith_local(np.eye(2, dtype=np.int64), 2, 2, use_numba=True)

    for n in args.sizes:
        print(bench_rank(n, args.repeat, rng))
    for G, n in ((FiniteGroup.cyclic(6), 2), (FiniteGroup.symmetric(3), 3)):
        D = _pullback_differential(cobar_complex(group_algebra(G, GF(7)), n + 1), n)
        print(bench_smith(D, f"{G.name} d_{n}", args.repeat))


if __name__ == "__main__":
    main()
