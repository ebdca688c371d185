"""Helpers shared by the test modules."""
from __future__ import annotations

import random


def balanced_words(n: int, k: int, extra=None) -> list[tuple[int, ...]]:
    """All k-sum-balanced quaternary words of length n, by a pruned DFS.

    Both balance predicates are closed under taking prefixes, so any prefix
    that fails can be dropped.  ``extra(prefix)`` may prune further."""
    from dnacodes.cb import is_sum_balanced

    out = []
    w: list[int] = []

    def rec():
        if len(w) == n:
            out.append(tuple(w))
            return
        for s in range(4):
            w.append(s)
            if is_sum_balanced(w, k) and (extra is None or extra(w)):
                rec()
            w.pop()

    rec()
    return out


def naive_sum_balanced(x, k, lengths=None) -> bool:
    n = len(x)
    lengths = range(k, n + 1) if lengths is None else lengths
    return all(L < sum(x[i:i + L]) < 2 * L for L in lengths for i in range(n - L + 1))


def random_bits(rng: random.Random, m: int) -> tuple[int, ...]:
    return tuple(rng.getrandbits(1) for _ in range(m))
