"""Error balls, seeded corruption and brute-force reference decoding.

These are deliberately naive: every production decoder is checked against
them, so they must not share its shortcuts.
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Callable, Iterable, Iterator, Sequence

from .errors import Ambiguous, NoCandidate

BINARY = (0, 1)
QUATERNARY = (0, 1, 2, 3)
DNA = tuple("ATCG")

# nucleotide substitutions allowed by the nucleotide-edit model
NT_SUBSTITUTIONS = {"A": "CG", "T": "CG", "C": "AT", "G": "AT"}

KINDS = ("indel", "edit", "burst", "nt")


@dataclass(frozen=True)
class ChannelKind:
    name: str
    alphabet: tuple = BINARY
    b: int = 1

    def __post_init__(self):
        if self.name not in KINDS:
            raise ValueError(f"unknown channel kind {self.name!r}")
        if self.b < 1:
            raise ValueError("burst length must be >= 1")
        if self.name == "nt" and tuple(self.alphabet) != DNA:
            raise ValueError("nucleotide-edit channel needs the DNA alphabet")


@dataclass(frozen=True)
class CorruptionRecord:
    """One channel event; ``position`` is 0-based, ``symbols`` are what was
    inserted or written (empty for deletions)."""

    kind: str
    op: str
    position: int
    symbols: tuple = ()
    length: int = 1
    seed: object = None

    def apply(self, w):
        return apply_op(w, self.op, self.position, self.symbols, self.length)

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "op": self.op,
            "position": self.position,
            "symbols": "".join(str(s) for s in self.symbols),
            "length": self.length,
            "seed": self.seed,
        }


def _cast(w, items):
    if isinstance(w, str):
        return "".join(items)
    return tuple(items)


def apply_op(w, op: str, position: int, symbols: Sequence = (), length: int = 1):
    items = list(w)
    if op == "del":
        del items[position:position + length]
    elif op == "ins":
        items[position:position] = list(symbols)
    elif op == "sub":
        items[position:position + len(symbols)] = list(symbols)
    else:
        raise ValueError(f"unknown op {op!r}")
    return _cast(w, items)


def operations(w, kind: ChannelKind) -> Iterator[tuple[str, int, tuple, int]]:
    """Every single channel event on w as (op, position, symbols, length)."""
    n = len(w)
    alpha = kind.alphabet
    b = kind.b if kind.name == "burst" else 1
    if n >= b:
        for i in range(n - b + 1):
            yield "del", i, (), b
    if b == 1:
        for i in range(n + 1):
            for s in alpha:
                yield "ins", i, (s,), 1
    else:
        for i in range(n + 1):
            for block in itertools.product(alpha, repeat=b):
                yield "ins", i, block, b
    if kind.name == "edit":
        for i in range(n):
            for s in alpha:
                if s != w[i]:
                    yield "sub", i, (s,), 1
    elif kind.name == "nt":
        for i in range(n):
            for s in NT_SUBSTITUTIONS[w[i]]:
                yield "sub", i, (s,), 1


def error_ball(w, kind: ChannelKind) -> set:
    """All words reachable from w by at most one event (w itself included)."""
    ball = {w if isinstance(w, str) else tuple(w)}
    for op, pos, sym, length in operations(w, kind):
        ball.add(apply_op(w, op, pos, sym, length))
    return ball


def corrupt(w, kind: ChannelKind, seed) -> tuple[object, CorruptionRecord]:
    """Apply one event drawn uniformly over the distinct non-identity outcomes."""
    outcomes = {}
    for op, pos, sym, length in operations(w, kind):
        out = apply_op(w, op, pos, sym, length)
        if out != w and out not in outcomes:
            outcomes[out] = (op, pos, sym, length)
    if not outcomes:
        raise ValueError("the error ball has no element besides the word itself")
    rng = random.Random(seed)
    out = rng.choice(sorted(outcomes, key=lambda v: (len(v), v)))
    op, pos, sym, length = outcomes[out]
    return out, CorruptionRecord(kind.name, op, pos, tuple(sym), length, seed)


def preimages(y, n: int, kind: ChannelKind) -> set:
    """All length-n words whose ball under ``kind`` contains y."""
    b = kind.b if kind.name == "burst" else 1
    alpha = kind.alphabet
    out = set()
    if len(y) == n:
        out.add(y if isinstance(y, str) else tuple(y))
        if kind.name in ("edit", "nt"):
            for i in range(n):
                for s in alpha:
                    if s == y[i]:
                        continue
                    x = apply_op(y, "sub", i, (s,))
                    # nt model: x -> y must be an allowed substitution
                    if kind.name == "nt" and y[i] not in NT_SUBSTITUTIONS[s]:
                        continue
                    out.add(x)
    elif len(y) == n - b:
        for i in range(len(y) + 1):
            for block in itertools.product(alpha, repeat=b):
                out.add(apply_op(y, "ins", i, block))
    elif len(y) == n + b:
        for i in range(len(y) - b + 1):
            out.add(apply_op(y, "del", i, (), b))
    return out


def brute_force_decode(y, n: int, is_codeword: Callable[[object], bool], kind: ChannelKind):
    """The unique codeword whose ball contains y, by exhaustive search."""
    hits = sorted(x for x in preimages(y, n, kind) if is_codeword(x))
    if not hits:
        raise NoCandidate("no codeword within one error")
    if len(hits) > 1:
        raise Ambiguous("several codewords within one error", hits)
    return hits[0]


@dataclass
class DisjointReport:
    ok: bool
    checked: int
    counterexample: tuple | None = None  # (x, z, shared word)

    def line(self, label: str) -> str:
        if self.ok:
            return f"PASS {label} codewords={self.checked}"
        x, z, y = self.counterexample
        fmt = lambda v: v if isinstance(v, str) else "".join(map(str, v))
        return f"FAIL {label} codewords={self.checked} x={fmt(x)} z={fmt(z)} witness={fmt(y)}"


def verify_disjoint(code: Iterable, kind: ChannelKind) -> DisjointReport:
    """Check that error balls of distinct codewords never meet (hash join).

    Balls are visited shortest word first, so the reported witness is
    deterministic."""
    owner: dict = {}
    count = 0
    for x in code:
        count += 1
        for y in sorted(error_ball(x, kind), key=lambda v: (len(v), v)):
            prev = owner.setdefault(y, x)
            if prev != x:
                return DisjointReport(False, count, (prev, x, y))
    return DisjointReport(True, count)


def ball_index(code: Iterable, kind: ChannelKind) -> dict:
    """Map every word in some ball to its codeword; assumes disjoint balls."""
    owner = {}
    for x in code:
        for y in error_ball(x, kind):
            owner[y] = x
    return owner
