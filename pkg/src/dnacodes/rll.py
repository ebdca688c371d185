"""One-bit-redundant runlength-limited encoder.

Record layout (bit-exact)
-------------------------
Let n be the output length, t = ceil(log2 n) and l = t + 3.  The encoder
works on the XOR-differential z = Phi(y) of the output y: a run of length
L in y is a block of L - 1 zeros in z, so z with no 0^l gives every run of
y at most t + 3.

1. z = x || 1 (the trailing 1 marks "no more records").
2. While z contains 0^l: take the leftmost occurrence starting at 0-based
   index p, delete those l bits and append the l-bit record

       1 | p as t bits, most significant first | 1 | 0

   The trailing 0 distinguishes a record from the terminating 1.
3. Output y = Phi^{-1}(z).

Records open with a 1 so a record can never extend a zero run on its left,
and every 0^l lies in the data part, whose length shrinks by l per
replacement, so the loop stops.  The decoder undoes records last-in first-out.
"""
from __future__ import annotations

from typing import Sequence

from .words import Word, ceil_log2, int_repr, int_value, phi_forward, phi_inverse


def rll_limit(n: int) -> int:
    """Maximum run length guaranteed for outputs of length n."""
    return ceil_log2(n) + 3


def _find_zero_run(z: list[int], length: int) -> int:
    run = 0
    for i, v in enumerate(z):
        run = run + 1 if v == 0 else 0
        if run == length:
            return i - length + 1
    return -1


def enc_rll(msg: Sequence[int]) -> Word:
    n = len(msg) + 1
    if n < 2:
        raise ValueError("enc_rll needs a message of at least one bit")
    t = ceil_log2(n)
    ell = t + 3
    z = [*msg, 1]
    while (p := _find_zero_run(z, ell)) >= 0:
        del z[p:p + ell]
        z.extend((1, *int_repr(p, 2, t), 1, 0))
    return phi_inverse(z)


def dec_rll(y: Sequence[int]) -> Word:
    n = len(y)
    t = ceil_log2(n)
    ell = t + 3
    z = list(phi_forward(y))
    while z[-1] == 0:
        rec = z[-ell:]
        del z[-ell:]
        p = int_value(rec[1:1 + t], 2)
        z[p:p] = [0] * ell
    return tuple(z[:-1])
