"""A uniform face over every codec: binary message in, word out, and back.

Binary words (scheme ``lev``) are tuples of bits; every other scheme emits
DNA strings.  ``editB`` works on quaternary symbols internally and maps each
symbol to two message bits.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

from . import binary, cb, edit, gc, indel
from .channel import BINARY, DNA, ChannelKind
from .errors import DecodeError, ParameterError
from .words import (
    Word,
    bits_to_quats,
    dna_to_quats,
    psi_forward,
    quats_to_bits,
    quats_to_dna,
    upper_lower,
)

SCHEMES = ("lev", "indel", "burst", "editA", "editB", "nt", "gc")


@dataclass(frozen=True)
class Scheme:
    name: str
    params: object
    header: dict  # parameters echoed into record headers
    m: int  # message bits
    length: int  # codeword length in symbols
    redundancy: int  # bits
    kind: ChannelKind
    encode: Callable[[Sequence[int]], object]
    decode: Callable[[object], Word]
    is_codeword: Callable[[object], bool]

    @property
    def dna(self) -> bool:
        return self.kind.alphabet == DNA

    @property
    def rate(self) -> float:
        bits_per_symbol = 2 if self.dna else 1
        return self.m / (bits_per_symbol * self.length)


def _reencodes(encode, decode) -> Callable[[object], bool]:
    def check(w) -> bool:
        try:
            return encode(decode(w)) == w
        except (DecodeError, ValueError):
            return False
    return check


def build(name: str, n: int, a: int = 0, b: int = 0, c: int = 0, d: int = 0,
          k: int | None = None, burst: int = 1) -> Scheme:
    """Instantiate a scheme; infeasible parameters raise ParameterError."""
    if name == "lev":
        p = binary.LevParams(n, a)
        return Scheme(
            name, p, {"n": n, "a": p.a}, p.m, n, n - p.m, ChannelKind("edit", BINARY),
            lambda msg: binary.enc_L(msg, p),
            lambda y: binary.dec_L_message(y, p),
            lambda y: len(y) == n and binary.member_L(y, n, p.a),
        )
    if name == "indel":
        p = indel.IndelParams(n, a)
        return Scheme(
            name, p, {"n": n, "a": p.a}, p.m, n, p.redundancy, ChannelKind("indel", DNA),
            lambda msg: indel.enc_indel(msg, p),
            lambda s: indel.dec_indel(s, p),
            lambda s: len(s) == n and binary.member_Lburst(psi_forward(s), 2 * n, p.a),
        )
    if name == "burst":
        p = indel.BurstParams(burst, n, a, c, d)
        p.require_feasible()
        return Scheme(
            name, p, {"n": n, "burst": burst, "a": p.a, "c": p.c, "d": p.d},
            p.m, p.n, p.redundancy, ChannelKind("burst", DNA, burst),
            lambda msg: indel.enc_burst_indel(msg, p),
            lambda s: indel.dec_burst_indel(s, p),
            lambda s: indel.is_burst_codeword(s, p),
        )
    if name == "editA":
        p = edit.EditAParams(n, a, b)

        def member_A(s: str) -> bool:
            if len(s) != n:
                return False
            u, l = upper_lower(s)
            return binary.member_L(u, n, p.upper.a) and binary.member_L(l, n, p.lower.a)

        return Scheme(
            name, p, {"n": n, "a": p.a1 % (2 * n), "b": p.a2 % (2 * n)},
            p.m, n, p.redundancy, ChannelKind("edit", DNA),
            lambda msg: edit.enc_edit_A(msg, p),
            lambda s: edit.dec_edit_A(s, p),
            member_A,
        )
    if name == "editB":
        p = cb.EncBParams(n, k).validate()
        enc = lambda msg: quats_to_dna(cb.enc_edit_B(bits_to_quats(msg), p))
        dec = lambda s: quats_to_bits(cb.dec_edit_B(dna_to_quats(s), p))
        return Scheme(
            name, p, {"n": n, "k": p.k}, 2 * (n - 1), p.N, p.redundancy_bits,
            ChannelKind("edit", DNA), enc, dec, _reencodes(enc, dec),
        )
    if name == "nt":
        p = edit.NtParams(n, a, b, c)
        return Scheme(
            name, p, {"n": n, "a": p.a, "b": p.b, "c": p.c}, p.m, n, p.redundancy,
            ChannelKind("nt", DNA),
            lambda msg: edit.enc_nt_edit(msg, p),
            lambda s: edit.dec_nt_edit(s, p),
            lambda s: edit.member_Cnt(s, p),
        )
    if name == "gc":
        p = gc.GcParams(n, a)
        enc = lambda msg: gc.enc_gc(msg, p)
        dec = lambda s: gc.dec_gc(s, p)
        return Scheme(
            name, p, {"n": n, "a": p.a}, p.m, n, p.redundancy, ChannelKind("edit", DNA),
            enc, dec, _reencodes(enc, dec),
        )
    raise ParameterError(f"unknown scheme {name!r}; choose from {', '.join(SCHEMES)}")
