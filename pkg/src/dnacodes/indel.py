"""DNA codes correcting one indel, and the array code for a b-burst of indels."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .binary import (
    LevParams,
    SvtParams,
    dec_burst,
    dec_L_codeword,
    dec_svt,
    enc_L,
    enc_svt,
    error_interval,
    member_L,
    member_svt,
    project,
)
from .errors import DecodeError, ParameterError
from .rll import dec_rll, enc_rll
from .words import (
    Word,
    ceil_log2,
    max_run,
    phi_forward,
    phi_inverse,
    psi_forward,
    psi_inverse,
)


# --- single indel: C_a(n) -------------------------------------------------

@dataclass(frozen=True)
class IndelParams:
    """DNA length n; a is the run-syndrome target modulo 4n."""

    n: int
    a: int = 0
    lev: LevParams = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "a", self.a % (4 * self.n))
        # Rsyn(0c') = a  <=>  Syn(Phi(c')) = -a  (mod 4n)
        object.__setattr__(self, "lev", LevParams(2 * self.n, -self.a))

    @property
    def m(self) -> int:
        return self.lev.m

    @property
    def redundancy(self) -> int:
        return 2 * self.n - self.m


def enc_indel(msg: Sequence[int], params: IndelParams) -> str:
    c = enc_L(msg, params.lev)
    return psi_inverse(phi_inverse(c))


def dec_indel_codeword(s: str, params: IndelParams) -> str:
    if abs(len(s) - params.n) > 1:
        raise DecodeError(f"length {len(s)} is not within one of {params.n}")
    c_prime = dec_burst(psi_forward(s), 2 * params.n, params.a)
    return psi_inverse(c_prime)


def dec_indel(s: str, params: IndelParams) -> Word:
    c_prime = psi_forward(dec_indel_codeword(s, params))
    return project(phi_forward(c_prime), params.lev.I)


# --- b-burst indels: array construction ------------------------------------

def array_view(x: Sequence[int], rows: int) -> tuple[Word, ...]:
    """Rows of the column-major array: row i holds x_i, x_{rows+i}, ..."""
    if rows < 1 or len(x) % rows:
        raise ValueError(f"length {len(x)} is not a multiple of {rows}")
    return tuple(tuple(x[i::rows]) for i in range(rows))


def array_flatten(rows: Sequence[Sequence[int]]) -> Word:
    """Inverse of array_view: transmit the array column by column."""
    if len({len(r) for r in rows}) > 1:
        raise ValueError("rows must have equal length")
    return tuple(v for col in zip(*rows) for v in col)


@dataclass(frozen=True)
class BurstParams:
    b: int
    N: int
    a: int = 0
    c: int = 0
    d: int = 0
    r: int = field(init=False)
    P: int = field(init=False)
    t: int = field(init=False)
    m: int = field(init=False)

    def __post_init__(self):
        if self.b < 1:
            raise ParameterError("burst length b must be >= 1")
        logN = ceil_log2(self.N)
        r = 2 * logN + 4
        P = r + 1
        t = ceil_log2(P)
        object.__setattr__(self, "r", r)
        object.__setattr__(self, "P", P)
        object.__setattr__(self, "t", t)
        object.__setattr__(self, "a", self.a % (2 * self.N))
        object.__setattr__(self, "c", self.c % P)
        object.__setattr__(self, "d", self.d % 2)
        object.__setattr__(
            self, "m", 2 * self.b * self.N - logN - (2 * self.b - 1) * (t + 1) - 2
        )

    @property
    def n(self) -> int:
        return self.b * self.N

    @property
    def first_len(self) -> int:
        return self.N - ceil_log2(self.N) - 2

    @property
    def other_len(self) -> int:
        return self.N - self.t - 1

    @property
    def redundancy(self) -> int:
        return 2 * self.n - self.m

    def require_feasible(self) -> None:
        if self.P > self.N:
            raise ParameterError(f"P = {self.P} exceeds the row length N = {self.N}")
        if self.first_len < 1:
            raise ParameterError(f"row length N = {self.N} leaves no message bits")

    def lev(self) -> LevParams:
        return LevParams(self.N, self.a)

    def svt(self) -> SvtParams:
        return SvtParams(self.N, self.P, self.c, self.d)


def enc_burst_indel(msg: Sequence[int], params: BurstParams) -> str:
    params.require_feasible()
    if len(msg) != params.m:
        raise ValueError(f"message must have {params.m} bits, got {len(msg)}")
    k1 = params.first_len
    rows = [enc_L(enc_rll(msg[:k1]), params.lev())]
    svt = params.svt()
    pos = k1
    for _ in range(2 * params.b - 1):
        rows.append(enc_svt(msg[pos:pos + params.other_len], svt))
        pos += params.other_len
    return psi_inverse(array_flatten(rows))


def _rows_to_message(rows: Sequence[Word], params: BurstParams) -> Word:
    lev, svt = params.lev(), params.svt()
    out = list(dec_rll(project(rows[0], lev.I)))
    for row in rows[1:]:
        out.extend(project(row, svt.I))
    return tuple(out)


def is_burst_codeword(s: str, params: BurstParams) -> bool:
    if len(s) != params.n:
        return False
    rows = array_view(psi_forward(s), 2 * params.b)
    if not member_L(rows[0], params.N, params.a) or max_run(rows[0]) > params.r:
        return False
    return all(member_svt(r, params.N, params.P, params.c, params.d) for r in rows[1:])


def dec_burst_indel(s: str, params: BurstParams) -> Word:
    """Row 1 is decoded outright; its error interval, widened by one column
    to the left, localises the indel in every other row."""
    params.require_feasible()
    b, n = params.b, params.n
    if len(s) == n:
        if not is_burst_codeword(s, params):
            raise DecodeError("length-n word is not a codeword")
        return _rows_to_message(array_view(psi_forward(s), 2 * b), params)
    if len(s) not in (n - b, n + b):
        raise DecodeError(f"length {len(s)} is not n or n +/- b")
    received = array_view(psi_forward(s), 2 * b)
    first = dec_L_codeword(received[0], params.N, params.a)
    lo, hi = error_interval(first, received[0])
    window = (max(lo - 1, 1), hi)
    rows = [first]
    for row in received[1:]:
        rows.append(dec_svt(row, window, params.N, params.P, params.c, params.d))
    return _rows_to_message(rows, params)
