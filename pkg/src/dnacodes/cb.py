"""Sum-balanced quaternary words, the restricted-sum-balanced encoder, the
single-edit code C^B and the order-optimal Encoder B built on it."""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import cached_property
from itertools import accumulate
from typing import Sequence

from .binary import dec_svt, member_svt
from .enumerative import rank_sum_window, unrank_sum_window, violating_count
from .errors import Ambiguous, DecodeError, EncodeError, NoCandidate, ParameterError
from .words import Word, ceil_log4, int_repr, int_value, signature, vt_syndrome


# --- balance predicates ------------------------------------------------------

def is_sum_balanced(x: Sequence[int], k: int) -> bool:
    """Every window of length L >= k has L < sum < 2L.

    Equivalently, for j - i >= k the prefix sums of (x - 1) must strictly
    increase and those of (x - 2) strictly decrease between i and j, so a
    running extremum over the prefixes ending k back suffices.
    """
    n = len(x)
    if k > n:
        return True
    p1 = [0, *accumulate(v - 1 for v in x)]
    p2 = [0, *accumulate(v - 2 for v in x)]
    best1, best2 = p1[0], p2[0]
    for j in range(max(k, 1), n + 1):
        i = j - k
        best1 = max(best1, p1[i])
        best2 = min(best2, p2[i])
        if p1[j] <= best1 or p2[j] >= best2:
            return False
    return True


def _first_violation(x: Sequence[int], k: int) -> int:
    """0-based start of the leftmost k-window outside (5k/4, 7k/4), or -1."""
    if k > len(x):
        return -1
    s = sum(x[:k])
    for p in range(len(x) - k + 1):
        if p:
            s += x[p + k - 1] - x[p - 1]
        if not 5 * k < 4 * s < 7 * k:
            return p
    return -1


def is_restricted_sum_balanced(x: Sequence[int], k: int) -> bool:
    return _first_violation(x, k) < 0


# --- restricted-sum-balanced encoder (sequence replacement) ------------------

PAD = 0   # last symbol of an unreplaced word
FLAG = 1  # last symbol of every record
FILL = (1, 2)  # neutral padding, average 3/2 per symbol


@dataclass(frozen=True)
class RsbParams:
    """Record layout: pointer (ptr digits) | window rank (rank digits) |
    FILL padding | FLAG.  Feasible iff a record is strictly shorter than k
    before padding, so at least one symbol of slack remains."""

    n: int
    k: int
    ptr_digits: int = field(init=False)
    rank_digits: int = field(init=False)

    def __post_init__(self):
        if self.n < 2 or self.k < 1:
            raise ParameterError("RSB needs n >= 2 and k >= 1")
        if self.vacuous:
            object.__setattr__(self, "ptr_digits", 0)
            object.__setattr__(self, "rank_digits", 0)
            return
        ptr = ceil_log4(self.n - self.k + 1)
        rank = ceil_log4(violating_count(self.k))
        object.__setattr__(self, "ptr_digits", ptr)
        object.__setattr__(self, "rank_digits", rank)
        if 1 + ptr + rank >= self.k:
            raise ParameterError(
                f"k={self.k} too small for n={self.n}: flag, pointer and rank "
                f"take 1 + {ptr} + {rank} symbols, which must be fewer than k"
            )

    @property
    def vacuous(self) -> bool:
        return self.k >= self.n

    @property
    def max_rounds(self) -> int:
        return 4 * self.n


def _record(p: int, window: Sequence[int], params: RsbParams) -> list[int]:
    body = [*int_repr(p, 4, params.ptr_digits),
            *int_repr(rank_sum_window(window), 4, params.rank_digits)]
    fill = params.k - 1 - len(body)
    body.extend(FILL[i % 2] for i in range(fill))
    body.append(FLAG)
    return body


def enc_rsb(msg: Sequence[int], params: RsbParams) -> Word:
    if len(msg) != params.n - 1:
        raise ValueError(f"message must have {params.n - 1} symbols, got {len(msg)}")
    x = [*msg, PAD]
    if params.vacuous:
        return tuple(x)
    k = params.k
    for _ in range(params.max_rounds):
        p = _first_violation(x, k)
        if p < 0:
            return tuple(x)
        window = x[p:p + k]
        del x[p:p + k]
        x.extend(_record(p, window, params))
    raise EncodeError(f"no balanced word after {params.max_rounds} replacements")


def dec_rsb(x: Sequence[int], params: RsbParams) -> Word:
    if len(x) != params.n:
        raise ValueError(f"expected {params.n} symbols, got {len(x)}")
    x = list(x)
    k = params.k
    rounds = 0
    while not params.vacuous and x[-1] != PAD:
        rounds += 1
        if rounds > params.max_rounds:
            raise DecodeError("record chain does not terminate")
        rec = x[-k:]
        del x[-k:]
        p = int_value(rec[:params.ptr_digits], 4)
        r = int_value(rec[params.ptr_digits:params.ptr_digits + params.rank_digits], 4)
        if p > len(x) or r >= violating_count(k):
            raise DecodeError("malformed replacement record")
        x[p:p] = unrank_sum_window(r, k)
    if x[-1] != PAD:
        raise DecodeError("missing pad symbol")
    return tuple(x[:-1])


# --- the code C^B ----------------------------------------------------------

@dataclass(frozen=True)
class CbParams:
    n: int
    k: int
    a: int = 0
    b: int = 0
    c: int = 0
    d: int = 0

    def __post_init__(self):
        if self.n < 3:
            raise ParameterError("C^B needs n >= 3")
        if self.k < 1:
            raise ParameterError("C^B needs k >= 1")
        object.__setattr__(self, "a", self.a % self.syn_modulus)
        object.__setattr__(self, "b", self.b % self.P)
        object.__setattr__(self, "c", self.c % 2)
        object.__setattr__(self, "d", self.d % 7)

    @property
    def P(self) -> int:
        return 5 * self.k

    @property
    def syn_modulus(self) -> int:
        return 4 * self.n + 1


def member_CB(x: Sequence[int], params: CbParams) -> bool:
    n = params.n
    if len(x) != n:
        return False
    return (
        is_sum_balanced(x, params.k)
        and vt_syndrome(x, params.syn_modulus) == params.a
        and member_svt(signature(x), n - 1, params.P, params.b, params.c)
        and sum(x) % 7 == params.d
    )


def cb_decode_substitution(y: Sequence[int], params: CbParams) -> Word:
    """Repair at most one substitution using the sum and syndrome checks."""
    n, mod = params.n, params.syn_modulus
    if len(y) != n:
        raise ValueError(f"expected length {n}, got {len(y)}")
    e = (sum(y) - params.d) % 7
    if e == 0:
        return tuple(y)
    if e > 3:
        e -= 7
    gap = (vt_syndrome(y, mod) - params.a) % mod
    # j * e for j in [1, n] are pairwise distinct mod 4n + 1
    hits = [j for j in range(1, n + 1) if (j * e - gap) % mod == 0]
    if len(hits) != 1:
        raise NoCandidate("syndrome gap matches no position")
    j = hits[0]
    v = y[j - 1] - e
    if not 0 <= v <= 3:
        raise NoCandidate("repaired symbol leaves the alphabet")
    x = list(y)
    x[j - 1] = v
    return tuple(x)


def _suffix_sums(y: Sequence[int]) -> list[int]:
    """suf[i] = sum of y[i:] for 0 <= i <= len(y)."""
    suf = [0] * (len(y) + 1)
    for i in range(len(y) - 1, -1, -1):
        suf[i] = suf[i + 1] + y[i]
    return suf


def _agreement(u: Sequence[int], v: Sequence[int]) -> tuple[int, int]:
    """Lengths of the longest common prefix and suffix of u and v."""
    pre = 0
    while pre < min(len(u), len(v)) and u[pre] == v[pre]:
        pre += 1
    suf = 0
    while suf < min(len(u), len(v)) and u[-1 - suf] == v[-1 - suf]:
        suf += 1
    return pre, suf


def _pick(cands: list, what: str):
    if not cands:
        raise NoCandidate(f"no {what} is consistent with the recovered signature")
    if len(set(cands)) > 1:
        raise Ambiguous(f"several {what}s are consistent", sorted(set(cands)))
    return cands[0]


def _decode_deletion(y: Sequence[int], params: CbParams) -> Word:
    n, mod = params.n, params.syn_modulus
    m = (params.d - sum(y)) % 7
    if m > 3:
        raise NoCandidate("sum check gives a symbol outside the alphabet")
    suf = _suffix_sums(y)
    base = vt_syndrome(y)
    # inserting m at 1-based position j of x
    J = [j for j in range(1, n + 1) if (base + j * m + suf[j - 1] - params.a) % mod == 0]
    if not J:
        raise NoCandidate("syndrome admits no deletion position")
    # a deletion at x_j deletes alpha position j-1 or j
    sig_pos = {q for j in J for q in (j - 1, j) if 1 <= q <= n - 1}
    window = (min(sig_pos), max(sig_pos))
    alpha_y = signature(y) if len(y) >= 2 else ()
    alpha_x = dec_svt(alpha_y, window, n - 1, params.P, params.b, params.c)
    pre, sfx = _agreement(alpha_x, alpha_y)
    hits = []
    for j in J:
        # alpha(y+) = alpha(y)[:j-2] + local(j-2, j-1) + alpha(y)[j-1:]
        lo = max(j - 2, 0)
        if pre < lo or sfx < (n - 1) - j:
            continue
        w = lambda i: m if i == j - 1 else y[i if i < j - 1 else i - 1]
        if all(alpha_x[i] == int(w(i + 1) >= w(i)) for i in range(lo, min(j, n - 1))):
            hits.append((*y[:j - 1], m, *y[j - 1:]))
    return _pick(hits, "deletion position")


def _decode_insertion(y: Sequence[int], params: CbParams) -> Word:
    n, mod = params.n, params.syn_modulus
    m = (sum(y) - params.d) % 7
    if m > 3:
        raise NoCandidate("sum check gives a symbol outside the alphabet")
    suf = _suffix_sums(y)
    base = vt_syndrome(y)
    # removing y_j (1-based) which must equal m
    J = [j for j in range(1, n + 2)
         if y[j - 1] == m and (base - j * m - suf[j] - params.a) % mod == 0]
    if not J:
        raise NoCandidate("syndrome admits no insertion position")
    sig_pos = {q for j in J for q in (j - 1, j) if 1 <= q <= n}
    window = (min(sig_pos), max(sig_pos))
    alpha_y = signature(y)
    alpha_x = dec_svt(alpha_y, window, n - 1, params.P, params.b, params.c)
    pre, sfx = _agreement(alpha_x, alpha_y)
    hits = []
    for j in J:
        # alpha(y-) = alpha(y)[:j-2] + local(j-2) + alpha(y)[j:]
        lo = max(j - 2, 0)
        if pre < lo or sfx < (n - 1) - (j - 1):
            continue
        if 2 <= j <= n and alpha_x[j - 2] != int(y[j] >= y[j - 2]):
            continue
        hits.append(j)
    hits = [(*y[:j - 1], *y[j:]) for j in hits]
    return _pick(hits, "insertion position")


def cb_decode_indel(y: Sequence[int], params: CbParams) -> Word:
    if len(y) == params.n - 1:
        return _decode_deletion(y, params)
    if len(y) == params.n + 1:
        return _decode_insertion(y, params)
    raise ValueError(f"expected length {params.n} +/- 1, got {len(y)}")


def cb_decode(y: Sequence[int], params: CbParams) -> Word:
    """Dispatch on length: substitution (or none), deletion or insertion."""
    if len(y) == params.n:
        return cb_decode_substitution(y, params)
    return cb_decode_indel(y, params)


# --- Encoder B ---------------------------------------------------------------

def default_k(n: int) -> int:
    return math.ceil(72 * math.log2(n))


@dataclass(frozen=True)
class EncBParams:
    """y = enc_rsb(msg) has length n; the transmitted word y M R1 R2 R3 R4
    has length N.  ``k`` defaults to ceil(72 log2 n).

    The balancing layer is built on first use, since its feasibility check
    needs V_k; ``validate`` forces it.
    """

    n: int
    k: int | None = None

    def __post_init__(self):
        if self.n < 3:
            raise ParameterError("Encoder B needs n >= 3")
        if self.k is None:
            object.__setattr__(self, "k", default_k(self.n))

    @cached_property
    def rsb(self) -> RsbParams:
        return RsbParams(self.n, self.k)

    def validate(self) -> "EncBParams":
        self.rsb
        return self

    @property
    def k_prime(self) -> int:
        return 4 * self.k

    @property
    def P(self) -> int:
        return 5 * self.k_prime

    @property
    def r1_len(self) -> int:
        return ceil_log4(4 * self.n + 1)

    @property
    def r2_len(self) -> int:
        return ceil_log4(self.P)

    @property
    def N(self) -> int:
        return self.n + self.r1_len + self.r2_len + 5

    @property
    def redundancy_bits(self) -> int:
        return 2 * (self.N - (self.n - 1))

    def cb(self, a: int, b: int, c: int, d: int) -> CbParams:
        return CbParams(self.n, self.k_prime, a, b, c, d)


def marker_symbol(last: int) -> int:
    """Smallest quaternary symbol different from ``last``."""
    return 1 if last == 0 else 0


def _tail(y: Sequence[int], params: EncBParams) -> tuple[int, ...]:
    alpha = signature(y)
    r1 = int_repr(vt_syndrome(y, 4 * params.n + 1), 4, params.r1_len)
    r2 = int_repr(vt_syndrome(alpha, params.P), 4, params.r2_len)
    r3 = (sum(alpha) % 2,)
    r4 = int_repr(sum(y) % 7, 4, 2)
    return (*r1, *r2, *r3, *r4)


def _parse_tail(r: Sequence[int], params: EncBParams) -> CbParams:
    i1, i2 = params.r1_len, params.r1_len + params.r2_len
    return params.cb(
        int_value(r[:i1], 4), int_value(r[i1:i2], 4), r[i2], int_value(r[i2 + 1:i2 + 3], 4)
    )


def enc_edit_B(msg: Sequence[int], params: EncBParams) -> Word:
    y = enc_rsb(msg, params.rsb)
    mark = marker_symbol(y[-1])
    return (*y, mark, mark, *_tail(y, params))


def dec_edit_B(z: Sequence[int], params: EncBParams) -> Word:
    n, N = params.n, params.N
    z = tuple(z)
    if len(z) == N:
        y = z[:n]
        if z[n] == z[n + 1]:
            cb = _parse_tail(z[n + 2:], params)
            if sum(y) % 7 != cb.d and vt_syndrome(y, cb.syn_modulus) != cb.a:
                y = cb_decode_substitution(y, cb)
    elif len(z) == N - 1:
        if z[n - 1] != z[n]:
            y = z[:n]
        else:
            y = cb_decode_indel(z[:n - 1], _parse_tail(z[n + 1:], params))
    elif len(z) == N + 1:
        if z[n] == z[n + 1]:
            y = z[:n]
        else:
            y = cb_decode_indel(z[:n + 1], _parse_tail(z[n + 3:], params))
    else:
        raise DecodeError(f"length {len(z)} is not within one of {N}")
    return dec_rsb(y, params.rsb)
