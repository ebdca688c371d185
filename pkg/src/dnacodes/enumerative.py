"""Enumerative ranking of length-k quaternary windows that violate the
restricted sum constraint 5k/4 < sum < 7k/4.

Violating words fall into two classes: ``low`` (4 * sum <= 5k) and
``high`` (4 * sum >= 7k).  Ranks enumerate the low class in lexicographic
order, then the high class, so the overall index lies in [0, V_k).
"""
from __future__ import annotations

from functools import lru_cache
from typing import Sequence

LOW, HIGH = "low", "high"


_ROWS: list[tuple[int, ...]] = [(1,)]


def _sum_counts(k: int) -> list[tuple[int, ...]]:
    """rows[r][s] = number of quaternary words of length r with sum s, for
    r <= k.  The table is shared by every k and grown on demand."""
    while len(_ROWS) <= k:
        prev = _ROWS[-1]
        row = [0] * (len(prev) + 3)
        for s, v in enumerate(prev):
            for sym in range(4):
                row[s + sym] += v
        _ROWS.append(tuple(row))
    return _ROWS


@lru_cache(maxsize=None)
def _cumulative(k: int) -> tuple[tuple[int, ...], ...]:
    """cum[r][s] = number of words of length r with sum < s (s up to 3r + 1)."""
    out = []
    for row in _sum_counts(k)[:k + 1]:
        acc = [0]
        for v in row:
            acc.append(acc[-1] + v)
        out.append(tuple(acc))
    return tuple(out)


@lru_cache(maxsize=None)
def _single_row(k: int) -> tuple[int, ...]:
    """Coefficients of (1 + x + x^2 + x^3)^k via one big-integer power."""
    width = (2 * k + 8) // 8  # bytes per coefficient; each is below 4**k
    base = 1 << (8 * width)
    packed = (1 + base + base**2 + base**3) ** k
    raw = packed.to_bytes(width * (3 * k + 1), "little")
    return tuple(
        int.from_bytes(raw[i * width:(i + 1) * width], "little") for i in range(3 * k + 1)
    )


def low_bound(k: int) -> int:
    """Largest sum in the low class."""
    return 5 * k // 4


def high_bound(k: int) -> int:
    """Smallest sum in the high class."""
    return -(-7 * k // 4)


def window_class(w: Sequence[int]) -> str | None:
    k, s = len(w), sum(w)
    if 4 * s <= 5 * k:
        return LOW
    if 4 * s >= 7 * k:
        return HIGH
    return None


def _completions(k: int, r: int, need_lo: int, need_hi: int) -> int:
    """Words of length r whose sum lies in [need_lo, need_hi]."""
    cum = _cumulative(k)[r]
    top = len(cum) - 1
    lo = max(need_lo, 0)
    hi = min(need_hi, top - 1)
    if lo > hi:
        return 0
    return cum[hi + 1] - cum[lo]


def _class_range(k: int, cls: str) -> tuple[int, int]:
    if cls == LOW:
        return 0, low_bound(k)
    if cls == HIGH:
        return high_bound(k), 3 * k
    raise ValueError(f"unknown class {cls!r}")


def class_size(k: int, cls: str) -> int:
    lo, hi = _class_range(k, cls)
    return sum(_single_row(k)[lo:hi + 1])


def violating_count(k: int) -> int:
    """V_k: number of length-k words outside the restricted range."""
    return class_size(k, LOW) + class_size(k, HIGH)


def rank_sum_window(w: Sequence[int]) -> int:
    k = len(w)
    cls = window_class(w)
    if cls is None:
        raise ValueError("window satisfies the restricted sum constraint")
    lo, hi = _class_range(k, cls)
    index = 0
    prefix = 0
    for i, sym in enumerate(w):
        r = k - i - 1
        for smaller in range(sym):
            index += _completions(k, r, lo - prefix - smaller, hi - prefix - smaller)
        prefix += sym
    return index if cls == LOW else index + class_size(k, LOW)


def unrank_sum_window(index: int, k: int, cls: str | None = None) -> tuple[int, ...]:
    """Inverse of rank_sum_window.  With ``cls`` given, ``index`` counts
    within that class only."""
    if cls is None:
        n_low = class_size(k, LOW)
        cls, index = (LOW, index) if index < n_low else (HIGH, index - n_low)
    if not 0 <= index < class_size(k, cls):
        raise ValueError(f"index {index} out of range for k={k}, class {cls}")
    lo, hi = _class_range(k, cls)
    out = []
    prefix = 0
    for i in range(k):
        r = k - i - 1
        for sym in range(4):
            c = _completions(k, r, lo - prefix - sym, hi - prefix - sym)
            if index < c:
                break
            index -= c
        out.append(sym)
        prefix += sym
    return tuple(out)
