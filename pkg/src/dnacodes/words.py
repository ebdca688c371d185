"""Word representations and the shared transforms used by every codec.

Binary and quaternary words are tuples of ints; DNA words are uppercase
strings over ``ATCG``. All positions in syndrome formulas are 1-based.
"""
from __future__ import annotations

from itertools import accumulate
from typing import Sequence

Word = tuple  # tuple[int, ...]

NUCLEOTIDES = "ATCG"
_PAIR = {"A": (0, 0), "T": (0, 1), "C": (1, 0), "G": (1, 1)}
_FROM_PAIR = {v: k for k, v in _PAIR.items()}


def ceil_log2(n: int) -> int:
    """Smallest t with 2**t >= n (0 for n <= 1)."""
    if n < 1:
        raise ValueError("ceil_log2 needs n >= 1")
    return (n - 1).bit_length()


def ceil_log4(n: int) -> int:
    if n < 1:
        raise ValueError("ceil_log4 needs n >= 1")
    e = 0
    while 4**e < n:
        e += 1
    return e


# --- text forms ---------------------------------------------------------

def bits(text: str) -> Word:
    """Parse a 0/1 string."""
    if any(ch not in "01" for ch in text):
        raise ValueError(f"not a binary word: {text!r}")
    return tuple(int(ch) for ch in text)


def quats(text: str) -> Word:
    if any(ch not in "0123" for ch in text):
        raise ValueError(f"not a quaternary word: {text!r}")
    return tuple(int(ch) for ch in text)


def to_str(word: Sequence[int]) -> str:
    return "".join(str(s) for s in word)


def check_dna(s: str) -> str:
    if any(ch not in _PAIR for ch in s):
        raise ValueError(f"not a DNA word: {s!r}")
    return s


def dna_to_quats(s: str) -> Word:
    """A, T, C, G -> 0, 1, 2, 3 (the integer value of each Psi pair)."""
    return tuple(NUCLEOTIDES.index(ch) for ch in check_dna(s))


def quats_to_dna(q: Sequence[int]) -> str:
    return "".join(NUCLEOTIDES[v] for v in q)


# --- Psi, upper/lower rails, interleaving ------------------------------

def psi_forward(s: str) -> Word:
    """Map a DNA word to the binary word of twice its length."""
    out: list[int] = []
    for ch in check_dna(s):
        out.extend(_PAIR[ch])
    return tuple(out)


def psi_inverse(x: Sequence[int]) -> str:
    if len(x) % 2:
        raise ValueError(f"psi_inverse needs an even length, got {len(x)}")
    return "".join(_FROM_PAIR[(x[i], x[i + 1])] for i in range(0, len(x), 2))


def interleave(u: Sequence[int], l: Sequence[int]) -> Word:
    if len(u) != len(l):
        raise ValueError(f"interleave needs equal lengths, got {len(u)} and {len(l)}")
    out: list[int] = []
    for a, b in zip(u, l):
        out.append(a)
        out.append(b)
    return tuple(out)


def deinterleave(x: Sequence[int]) -> tuple[Word, Word]:
    if len(x) % 2:
        raise ValueError("deinterleave needs an even length")
    return tuple(x[0::2]), tuple(x[1::2])


def upper_lower(s: str) -> tuple[Word, Word]:
    """Return the (upper, lower) rails: first and second Psi bit of each symbol."""
    return deinterleave(psi_forward(s))


def from_rails(upper: Sequence[int], lower: Sequence[int]) -> str:
    return psi_inverse(interleave(upper, lower))


def is_gc_balanced(s: str) -> bool:
    return len(s) % 2 == 0 and 2 * sum(ch in "CG" for ch in s) == len(s)


# --- syndromes and runs -------------------------------------------------

def vt_syndrome(w: Sequence[int], modulus: int | None = None) -> int:
    """Sum of i * w_i over 1-based positions, optionally reduced."""
    total = sum(i * v for i, v in enumerate(w, 1))
    if modulus is None:
        return total
    if modulus < 1:
        raise ValueError("modulus must be positive")
    return total % modulus


def run_decompose(x: Sequence[int]) -> tuple[int, ...]:
    if not x:
        raise ValueError("run_decompose needs a non-empty word")
    runs = [1]
    for prev, cur in zip(x, x[1:]):
        if cur == prev:
            runs[-1] += 1
        else:
            runs.append(1)
    return tuple(runs)


def max_run(x: Sequence) -> int:
    return max(run_decompose(x)) if len(x) else 0


def run_syndrome(x: Sequence[int], modulus: int | None = None) -> int:
    """Rsyn(x) = sum of i * r_i over the runs r_0, r_1, ... of x."""
    total = sum(i * r for i, r in enumerate(run_decompose(x))) if len(x) else 0
    return total if modulus is None else total % modulus


def run_syndrome_prefixed(x: Sequence[int], modulus: int | None = None) -> int:
    """Rsyn(0x): the run-syndrome of x with a zero prepended."""
    return run_syndrome((0, *x), modulus)


def run_bounds(x: Sequence, pos: int) -> tuple[int, int]:
    """1-based (start, end) of the run of x containing 1-based position pos."""
    i = pos - 1
    lo = i
    while lo > 0 and x[lo - 1] == x[i]:
        lo -= 1
    hi = i
    while hi + 1 < len(x) and x[hi + 1] == x[i]:
        hi += 1
    return lo + 1, hi + 1


# --- Phi and the signature ---------------------------------------------

def phi_forward(x: Sequence[int]) -> Word:
    if not x:
        raise ValueError("phi_forward needs a non-empty word")
    return tuple(a ^ b for a, b in zip(x, x[1:])) + (x[-1],)


def phi_inverse(y: Sequence[int]) -> Word:
    if not y:
        raise ValueError("phi_inverse needs a non-empty word")
    # suffix XOR accumulation from the last bit
    return tuple(accumulate(reversed(y), lambda acc, v: acc ^ v))[::-1]


def signature(x: Sequence[int]) -> Word:
    """alpha(x)_i = 1 iff x_{i+1} >= x_i."""
    if len(x) < 2:
        raise ValueError("signature needs length >= 2")
    return tuple(int(b >= a) for a, b in zip(x, x[1:]))


# --- fixed-width integer representations --------------------------------

def int_repr(v: int, base: int, width: int) -> Word:
    """Most-significant-symbol-first representation of v in ``width`` digits."""
    if base not in (2, 4):
        raise ValueError("base must be 2 or 4")
    if v < 0 or v >= base**width:
        raise ValueError(f"{v} does not fit in {width} base-{base} digits")
    out = []
    for _ in range(width):
        v, r = divmod(v, base)
        out.append(r)
    return tuple(reversed(out))


def int_value(digits: Sequence[int], base: int) -> int:
    v = 0
    for d in digits:
        v = v * base + d
    return v


def bits_to_quats(b: Sequence[int]) -> Word:
    if len(b) % 2:
        raise ValueError("need an even number of bits")
    return tuple(2 * b[i] + b[i + 1] for i in range(0, len(b), 2))


def quats_to_bits(q: Sequence[int]) -> Word:
    out: list[int] = []
    for v in q:
        out.extend((v >> 1, v & 1))
    return tuple(out)
