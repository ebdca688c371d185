"""Single-edit DNA codecs built from two binary rails: Encoder A and the
nucleotide-edit code C^nt."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .binary import (
    LevParams,
    SvtParams,
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
from .words import Word, ceil_log2, from_rails, max_run, upper_lower


# --- Encoder A: both rails in Levenshtein codes --------------------------------

@dataclass(frozen=True)
class EditAParams:
    n: int
    a1: int = 0
    a2: int = 0
    upper: LevParams = field(init=False)
    lower: LevParams = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "upper", LevParams(self.n, self.a1))
        object.__setattr__(self, "lower", LevParams(self.n, self.a2))

    @property
    def half(self) -> int:
        return self.upper.m

    @property
    def m(self) -> int:
        return 2 * self.half

    @property
    def redundancy(self) -> int:
        return 2 * self.n - self.m


def enc_edit_A(msg: Sequence[int], params: EditAParams) -> str:
    if len(msg) != params.m:
        raise ValueError(f"message must have {params.m} bits, got {len(msg)}")
    h = params.half
    return from_rails(enc_L(msg[:h], params.upper), enc_L(msg[h:], params.lower))


def dec_edit_A(s: str, params: EditAParams) -> Word:
    """A single DNA edit is a single edit of the same type on each rail."""
    u, l = upper_lower(s)
    cu = dec_L_codeword(u, params.n, params.upper.a)
    cl = dec_L_codeword(l, params.n, params.lower.a)
    return project(cu, params.upper.I) + project(cl, params.lower.I)


# --- nucleotide-edit code C^nt -------------------------------------------------

@dataclass(frozen=True)
class NtParams:
    n: int
    a: int = 0
    b: int = 0
    c: int = 0
    r: int = field(init=False)
    P: int = field(init=False)
    t: int = field(init=False)

    def __post_init__(self):
        logn = ceil_log2(self.n)
        object.__setattr__(self, "r", 2 * logn + 4)
        object.__setattr__(self, "P", self.r + 1)
        object.__setattr__(self, "t", ceil_log2(self.P) + 1)
        if self.P > self.n:
            raise ParameterError(f"n={self.n} is too short for P={self.P}")
        object.__setattr__(self, "a", self.a % (2 * self.n))
        object.__setattr__(self, "b", self.b % self.P)
        object.__setattr__(self, "c", self.c % 2)

    @property
    def m(self) -> int:
        return 2 * self.n - ceil_log2(self.n) - self.t - 2

    @property
    def upper_len(self) -> int:
        return self.n - ceil_log2(self.n) - 2

    @property
    def redundancy(self) -> int:
        return 2 * self.n - self.m

    def lev(self) -> LevParams:
        return LevParams(self.n, self.a)

    def svt(self) -> SvtParams:
        return SvtParams(self.n, self.P, self.b, self.c)


def member_Cnt(s: str, params: NtParams) -> bool:
    if len(s) != params.n:
        return False
    u, l = upper_lower(s)
    return (
        member_L(u, params.n, params.a)
        and max_run(u) <= params.r
        and member_svt(l, params.n, params.P, params.b, params.c)
    )


def enc_nt_edit(msg: Sequence[int], params: NtParams) -> str:
    if len(msg) != params.m:
        raise ValueError(f"message must have {params.m} bits, got {len(msg)}")
    k = params.upper_len
    y1 = enc_L(enc_rll(msg[:k]), params.lev())
    y2 = enc_svt(msg[k:], params.svt())
    return from_rails(y1, y2)


def dec_nt_edit(s: str, params: NtParams) -> Word:
    """The upper rail is decoded outright; where it was hit tells the lower
    rail decoder which positions to consider."""
    n = params.n
    u, l = upper_lower(s)
    y1 = dec_L_codeword(u, n, params.a)
    where = error_interval(y1, u)
    if where is None:
        if not member_svt(l, n, params.P, params.b, params.c):
            raise DecodeError("lower rail is hit without an upper-rail error")
        y2 = tuple(l)
    else:
        y2 = dec_svt(l, where, n, params.P, params.b, params.c)
    return dec_rll(project(y1, params.lev().I)) + project(y2, params.svt().I)
