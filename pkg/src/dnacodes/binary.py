"""Binary constituent codes.

* ``L_a(n)``: Syn(x) = a (mod 2n), corrects one edit.  Systematic encoder
  with redundancy ceil(log n) + 1 and a linear-time decoder.
* ``SVT_{c,d,P}(n)``: Syn(x) = c (mod P) and weight = d (mod 2); corrects an
  indel whose position is known to within P consecutive indices.
* ``L^burst_a(n)``: Rsyn(0x) = a (mod 2n), corrects a burst of two indels.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import accumulate, product
from typing import Sequence

from .errors import Ambiguous, DecodeError, NoCandidate, ParameterError
from .words import Word, ceil_log2, run_bounds, run_syndrome_prefixed, vt_syndrome


def _check_binary(x: Sequence[int]) -> None:
    if any(v not in (0, 1) for v in x):
        raise ValueError("expected a binary word")


def redundancy_positions(t: int, last: int) -> tuple[int, ...]:
    """Sorted positions {2^(j-1) : j in [t]} plus ``last``."""
    pos = {1 << j for j in range(t)} | {last}
    if len(pos) != t + 1:
        raise ParameterError(f"redundancy positions collide: t={t}, last={last}")
    return tuple(sorted(pos))


def deletion_interval(longer: Sequence, shorter: Sequence) -> tuple[int, int]:
    """1-based interval of positions of ``longer`` whose removal gives ``shorter``.

    Raises DecodeError when ``shorter`` is not a single-deletion of ``longer``.
    """
    if len(longer) != len(shorter) + 1:
        raise ValueError("lengths must differ by one")
    f = 0
    while f < len(shorter) and longer[f] == shorter[f]:
        f += 1
    if tuple(longer[f + 1:]) != tuple(shorter[f:]):
        raise DecodeError("words are not one deletion apart")
    lo, _ = run_bounds(longer, f + 1)
    return lo, f + 1


# --- Levenshtein code L_a(n) ----------------------------------------------

@dataclass(frozen=True)
class LevParams:
    n: int
    a: int = 0
    t: int = field(init=False)
    m: int = field(init=False)
    S: tuple[int, ...] = field(init=False)

    def __post_init__(self):
        if self.n < 2:
            raise ParameterError("Levenshtein code needs n >= 2")
        t = ceil_log2(self.n)
        S = redundancy_positions(t, self.n)
        object.__setattr__(self, "a", self.a % (2 * self.n))
        object.__setattr__(self, "t", t)
        object.__setattr__(self, "S", S)
        object.__setattr__(self, "m", self.n - t - 1)
        if self.m < 0:
            raise ParameterError(f"message length n - t - 1 is negative for n={self.n}")

    @property
    def modulus(self) -> int:
        return 2 * self.n

    @cached_property
    def I(self) -> tuple[int, ...]:
        """Message positions: everything outside S, 1-based."""
        S = set(self.S)
        return tuple(i for i in range(1, self.n + 1) if i not in S)


def member_L(x: Sequence[int], n: int, a: int) -> bool:
    if len(x) != n:
        raise ValueError(f"expected length {n}, got {len(x)}")
    return vt_syndrome(x, 2 * n) == a % (2 * n)


def enc_L(msg: Sequence[int], params: LevParams) -> Word:
    """Systematic encoder into L_a(n); the message sits on the index set I."""
    n, t = params.n, params.t
    if len(msg) != params.m:
        raise ValueError(f"message must have {params.m} bits, got {len(msg)}")
    _check_binary(msg)
    c = [0] * (n + 1)  # 1-based
    for i, v in zip(params.I, msg):
        c[i] = v
    d = (params.a - vt_syndrome(c[1:])) % (2 * n)
    if d >= n:
        d -= n
        c[n] = 1
    for j in range(t):
        c[1 << j] = (d >> j) & 1
    return tuple(c[1:])


def project(c: Sequence[int], index_set: Sequence[int]) -> Word:
    return tuple(c[i - 1] for i in index_set)


def dec_L_codeword(y: Sequence[int], n: int, a: int) -> Word:
    """Correct up to one edit in y against L_a(n)."""
    _check_binary(y)
    mod = 2 * n
    a %= mod
    if len(y) == n:
        s = (vt_syndrome(y) - a) % mod
        if s == 0:
            return tuple(y)
        if s <= n and y[s - 1] == 1:
            j = s  # a 0 became 1 at position s
        elif s >= n and y[mod - s - 1] == 0:
            j = mod - s  # a 1 became 0
        else:
            raise NoCandidate("syndrome is inconsistent with one substitution")
        c = list(y)
        c[j - 1] ^= 1
        return tuple(c)
    if len(y) == n - 1:
        w = sum(y)
        delta = (a - vt_syndrome(y)) % mod
        if delta <= w:
            # a 0 was deleted with delta ones to its right
            ones_right = 0
            pos = len(y)
            while ones_right < delta:
                pos -= 1
                ones_right += y[pos]
            c = (*y[:pos], 0, *y[pos:])
        else:
            # a 1 was deleted with delta - w - 1 zeros to its left
            need = delta - w - 1
            zeros, pos = 0, 0
            while zeros < need and pos < len(y):
                zeros += 1 - y[pos]
                pos += 1
            if zeros < need:
                raise NoCandidate("deficiency exceeds the number of zeros")
            c = (*y[:pos], 1, *y[pos:])
        if vt_syndrome(c, mod) != a:
            raise NoCandidate("no single insertion restores the syndrome")
        return c
    if len(y) == n + 1:
        w = sum(y)
        delta = (vt_syndrome(y) - a) % mod
        cands = []
        # an inserted 0 has exactly delta ones to its right
        ones_right = 0
        for pos in range(len(y) - 1, -1, -1):
            if y[pos] == 0 and ones_right == delta:
                cands.append(pos)
                break
            ones_right += y[pos]
        # an inserted 1 has exactly delta - w zeros to its left
        zeros = 0
        for pos in range(len(y)):
            if y[pos] == 1 and zeros == delta - w:
                cands.append(pos)
                break
            zeros += 1 - y[pos]
        for pos in cands:
            c = tuple(y[:pos]) + tuple(y[pos + 1:])
            if vt_syndrome(c, mod) == a:
                return c
        raise NoCandidate("no single deletion restores the syndrome")
    raise NoCandidate(f"length {len(y)} is not within one of {n}")


def dec_L_message(y: Sequence[int], params: LevParams) -> Word:
    return project(dec_L_codeword(y, params.n, params.a), params.I)


def error_interval(codeword: Sequence, received: Sequence) -> tuple[int, int] | None:
    """Where a single edit happened, given the decoded codeword.

    Indels give the 1-based interval of equivalent positions (in the longer
    word); a substitution gives (j, j); no error gives None.
    """
    if len(received) == len(codeword):
        diff = [i + 1 for i, (u, v) in enumerate(zip(codeword, received)) if u != v]
        if not diff:
            return None
        if len(diff) > 1:
            raise DecodeError("more than one substitution")
        return diff[0], diff[0]
    if len(received) == len(codeword) - 1:
        return deletion_interval(codeword, received)
    return deletion_interval(received, codeword)


# --- shifted VT code ------------------------------------------------------

@dataclass(frozen=True)
class SvtParams:
    n: int
    P: int
    c: int = 0
    d: int = 0
    t: int = field(init=False)
    m: int = field(init=False)
    S: tuple[int, ...] = field(init=False)

    def __post_init__(self):
        if self.P < 2:
            raise ParameterError("SVT needs P >= 2")
        if self.P > self.n:
            raise ParameterError(f"SVT needs P <= n (P={self.P}, n={self.n})")
        t = ceil_log2(self.P)
        S = redundancy_positions(t, self.P)
        object.__setattr__(self, "c", self.c % self.P)
        object.__setattr__(self, "d", self.d % 2)
        object.__setattr__(self, "t", t)
        object.__setattr__(self, "S", S)
        object.__setattr__(self, "m", self.n - t - 1)

    @cached_property
    def I(self) -> tuple[int, ...]:
        """Message positions: everything outside S, 1-based."""
        S = set(self.S)
        return tuple(i for i in range(1, self.n + 1) if i not in S)


def member_svt(x: Sequence[int], n: int, P: int, c: int, d: int) -> bool:
    if len(x) != n:
        return False
    return vt_syndrome(x, P) == c % P and sum(x) % 2 == d % 2


def enc_svt(msg: Sequence[int], params: SvtParams) -> Word:
    n, P = params.n, params.P
    if len(msg) != params.m:
        raise ValueError(f"message must have {params.m} bits, got {len(msg)}")
    _check_binary(msg)
    c = [0] * (n + 1)
    for i, v in zip(params.I, msg):
        c[i] = v
    diff = (params.c - vt_syndrome(c[1:])) % P
    for j in range(params.t):
        c[1 << j] = (diff >> j) & 1
    # position P carries parity; it adds P * bit = 0 (mod P) to the syndrome
    c[P] = (params.d - sum(c[1:])) % 2
    return tuple(c[1:])


def dec_svt(y: Sequence[int], window: tuple[int, int], n: int, P: int, c: int, d: int) -> Word:
    """Correct one indel or substitution located inside ``window``.

    ``window`` is an inclusive 1-based interval. For a deletion it indexes the
    original codeword, for an insertion or substitution the received word.
    Uniqueness is guaranteed when the window spans at most P positions.
    """
    _check_binary(y)
    c %= P
    d %= 2
    if len(y) == n and member_svt(y, n, P, c, d):
        return tuple(y)
    lo, hi = window
    cands: set[Word] = set()
    if len(y) == n - 1:
        bit = (d - sum(y)) % 2
        # suffix[p] = sum of y_t for t >= p (1-based); inserting at p shifts them
        suffix = list(accumulate(reversed(y)))[::-1] + [0]
        base = vt_syndrome(y)
        for p in range(max(lo, 1), min(hi, n) + 1):
            if (base + p * bit + suffix[p - 1]) % P == c:
                cands.add((*y[:p - 1], bit, *y[p - 1:]))
    elif len(y) == n + 1:
        bit = (sum(y) - d) % 2
        suffix = list(accumulate(reversed(y)))[::-1] + [0]
        base = vt_syndrome(y)
        for p in range(max(lo, 1), min(hi, n + 1) + 1):
            if y[p - 1] != bit:
                continue
            if (base - p * bit - suffix[p]) % P == c:
                cands.add((*y[:p - 1], *y[p:]))
    elif len(y) == n:
        for p in range(max(lo, 1), min(hi, n) + 1):
            x = list(y)
            x[p - 1] ^= 1
            if member_svt(x, n, P, c, d):
                cands.add(tuple(x))
    else:
        raise NoCandidate(f"length {len(y)} is not within one of {n}")
    if not cands:
        raise NoCandidate("no correction inside the window satisfies the SVT constraints")
    if len(cands) > 1:
        raise Ambiguous("window admits several SVT codewords", sorted(cands))
    return cands.pop()


# --- 2-burst code L^burst_a(n) -------------------------------------------

def member_Lburst(x: Sequence[int], n: int, a: int) -> bool:
    if len(x) != n:
        raise ValueError(f"expected length {n}, got {len(x)}")
    return run_syndrome_prefixed(x, 2 * n) == a % (2 * n)


def _boundary_table(w: Sequence[int]) -> tuple[list[int], list[int], int]:
    """For w (1-based), bnd[k] = 1 iff w_k != w_{k+1}; prefix counts and Rsyn(w)."""
    L = len(w)
    bnd = [0] * (L + 1)
    for k in range(1, L):
        bnd[k] = int(w[k - 1] != w[k])
    pref = list(accumulate(bnd))  # pref[k] = boundaries at positions <= k
    # each boundary between positions k and k+1 adds (L - k) to Rsyn
    rsyn = sum(L - k for k in range(1, L) if bnd[k])
    return bnd, pref, rsyn


def dec_burst(y: Sequence[int], n: int, a: int) -> Word:
    """Correct one burst of two adjacent insertions or deletions in L^burst_a(n).

    Every candidate repair is scored in O(1) from boundary prefix counts of
    0y, so the scan over positions is linear.
    """
    _check_binary(y)
    mod = 2 * n
    a %= mod
    if len(y) == n:
        if run_syndrome_prefixed(y, mod) == a:
            return tuple(y)
        raise NoCandidate("length-n word is not a codeword")
    w = (0, *y)
    L = len(w)
    bnd, pref, rsyn = _boundary_table(w)
    cands: set[Word] = set()
    if len(y) == n - 2:
        # insert (u, v) after y_p, i.e. after w index p+1; new length L + 2
        for p in range(0, n - 1):
            k = p + 1
            left = w[k - 1]
            right = w[k] if k < L else None
            base = rsyn + 2 * pref[k - 1]
            if right is not None and bnd[k]:
                base -= L - k
            for u, v in product((0, 1), repeat=2):
                val = base
                if left != u:
                    val += n - p
                if u != v:
                    val += n - p - 1
                if right is not None and v != right:
                    val += n - p - 2
                if val % mod == a:
                    cands.add((*y[:p], u, v, *y[p:]))
    elif len(y) == n + 2:
        # delete y_{p+1}, y_{p+2}, i.e. w indices p+2 and p+3
        for p in range(0, n + 1):
            val = rsyn - 2 * pref[p]
            for k in (p + 1, p + 2, p + 3):
                if k < L and bnd[k]:
                    val -= L - k
            if p + 4 <= L and w[p] != w[p + 3]:
                val += n - p
            if val % mod == a:
                cands.add((*y[:p], *y[p + 2:]))
    else:
        raise NoCandidate(f"length {len(y)} is not n or n +/- 2 for n={n}")
    if not cands:
        raise NoCandidate("no 2-burst repair reaches the target run-syndrome")
    if len(cands) > 1:
        raise Ambiguous("several 2-burst repairs reach the target", sorted(cands))
    return cands.pop()
