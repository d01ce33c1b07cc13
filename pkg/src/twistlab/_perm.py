"""Permutations in one-line notation on 1..n."""
from __future__ import annotations

import itertools


def permutations(n: int) -> list[tuple[int, ...]]:
    """All of S_n in lexicographic order."""
    return list(itertools.permutations(range(1, n + 1)))


def check_perm(sigma, n: int) -> tuple[int, ...]:
    w = tuple(int(x) for x in sigma)
    if sorted(w) != list(range(1, n + 1)):
        raise ValueError(f"{sigma} is not a permutation of 1..{n} in one-line notation")
    return w


def length(w) -> int:
    return sum(1 for i in range(len(w)) for j in range(i + 1, len(w)) if w[i] > w[j])


def left_mult(i: int, w) -> tuple[int, ...]:
    """s_i w: swap the values i and i+1."""
    return tuple(i + 1 if x == i else i if x == i + 1 else x for x in w)


def reduced_word(sigma) -> list[int]:
    """Bubble-sort reduced word [i_1, ..., i_m] with sigma = s_i1 ... s_im."""
    w = list(sigma)
    swaps = []
    changed = True
    while changed:
        changed = False
        for i in range(len(w) - 1):
            if w[i] > w[i + 1]:
                w[i], w[i + 1] = w[i + 1], w[i]
                swaps.append(i + 1)
                changed = True
    return swaps[::-1]


def reduced_words(sigma) -> list[list[int]]:
    """All reduced words of sigma (feasible for n <= 5)."""
    w = tuple(sigma)
    descents = [i + 1 for i in range(len(w) - 1) if w[i] > w[i + 1]]
    if not descents:
        return [[]]
    out = []
    for i in descents:
        v = list(w)
        v[i - 1], v[i] = v[i], v[i - 1]
        out.extend(word + [i] for word in reduced_words(v))
    return out
