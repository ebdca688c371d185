"""Knuth balancing and the GC-balanced single-edit DNA codec.

The upper rail is a Knuth-balanced word z, which makes the DNA word
GC-balanced.  The lower rail is a Levenshtein codeword carrying the rest of
the message together with Syn(z) mod 2n and the balancing index, so the
upper rail can be decoded in L_d(n) once the lower one is known.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .binary import LevParams, dec_L_codeword, enc_L, project
from .errors import DecodeError, ParameterError
from .words import Word, ceil_log2, from_rails, int_repr, int_value, upper_lower, vt_syndrome


def knuth_balance(x: Sequence[int]) -> tuple[Word, int]:
    """Flip the shortest nonempty prefix that leaves exactly half ones."""
    n = len(x)
    if n % 2:
        raise ValueError("knuth_balance needs an even length")
    w = sum(x)
    for k in range(1, n + 1):
        w += 1 - 2 * x[k - 1]
        if 2 * w == n:
            return tuple(1 - v for v in x[:k]) + tuple(x[k:]), k
    raise AssertionError("unreachable: flipping all n bits always balances at some k")


def knuth_unbalance(z: Sequence[int], k: int) -> Word:
    return tuple(1 - v for v in z[:k]) + tuple(z[k:])


@dataclass(frozen=True)
class GcParams:
    n: int
    a: int = 0
    t: int = field(init=False)

    def __post_init__(self):
        if self.n < 2 or self.n % 2:
            raise ParameterError("GC-balanced codec needs an even n >= 2")
        object.__setattr__(self, "t", ceil_log2(self.n))
        object.__setattr__(self, "a", self.a % (2 * self.n))
        if self.m < self.n:
            raise ParameterError(
                f"n={self.n} is too short: the lower rail needs {3 * self.t + 2 - self.n} more bits"
            )

    @property
    def m(self) -> int:
        return 2 * self.n - 3 * self.t - 2

    @property
    def redundancy(self) -> int:
        return 2 * self.n - self.m

    def lev(self) -> LevParams:
        return LevParams(self.n, self.a)


def enc_gc(msg: Sequence[int], params: GcParams) -> str:
    n, t = params.n, params.t
    if len(msg) != params.m:
        raise ValueError(f"message must have {params.m} bits, got {len(msg)}")
    z, k = knuth_balance(msg[:n])
    d = vt_syndrome(z, 2 * n)
    # k = n wraps to 0 when n is a power of two
    payload = (*msg[n:], *int_repr(d, 2, t + 1), *int_repr(k % (1 << t), 2, t))
    return from_rails(z, enc_L(payload, params.lev()))


def dec_gc(s: str, params: GcParams) -> Word:
    n, t = params.n, params.t
    u, l = upper_lower(s)
    lev = params.lev()
    payload = project(dec_L_codeword(l, n, params.a), lev.I)
    y = payload[:-(2 * t + 1)]
    d = int_value(payload[-(2 * t + 1):-t], 2)
    k = int_value(payload[-t:], 2) or n
    if not 1 <= k <= n:
        raise DecodeError(f"balancing index {k} out of range")
    z = dec_L_codeword(u, n, d)
    return knuth_unbalance(z, k) + y
