from __future__ import annotations

import itertools
import random

import pytest

from dnacodes.binary import member_svt
from dnacodes.cb import (
    CbParams,
    EncBParams,
    RsbParams,
    cb_decode,
    cb_decode_indel,
    cb_decode_substitution,
    dec_edit_B,
    dec_rsb,
    default_k,
    enc_edit_B,
    enc_rsb,
    is_restricted_sum_balanced,
    is_sum_balanced,
    marker_symbol,
    member_CB,
)
from dnacodes.channel import QUATERNARY, ChannelKind, brute_force_decode, error_ball, verify_disjoint
from dnacodes.enumerative import (
    HIGH,
    LOW,
    class_size,
    rank_sum_window,
    unrank_sum_window,
    violating_count,
    window_class,
)
from dnacodes.errors import DecodeError, ParameterError
from dnacodes.words import ceil_log4, max_run, signature, vt_syndrome
from support import balanced_words, naive_sum_balanced

EDIT4 = ChannelKind("edit", QUATERNARY)


# --- balance predicates ---------------------------------------------------------

def test_sum_balanced_basics():
    assert is_sum_balanced((0, 0, 0), 4)
    assert not is_sum_balanced((2, 2, 2, 2), 2)
    assert is_sum_balanced((1, 2, 1, 2, 1, 2), 2)
    assert not is_sum_balanced((1, 2, 1, 2, 2, 1), 2)  # window 2,2 sums to 2L
    assert not is_sum_balanced((0,) * 6, 3)


def test_sum_balanced_matches_naive_random():
    rng = random.Random(21)
    for _ in range(3000):
        # mostly 1s and 2s, so that balanced words are common
        x = [rng.choice((1, 2, 1, 2, 0, 3)) for _ in range(64)]
        assert is_sum_balanced(x, 8) == naive_sum_balanced(x, 8)


@pytest.mark.parametrize("n,k", [(12, 1), (12, 2), (12, 3), (12, 4), (10, 5), (10, 6)])
def test_window_length_reduction_exhaustive(n, k):
    """Checking lengths k..2k-1 only is equivalent to checking all lengths.

    Both predicates fail on every extension of a failing prefix, so a DFS
    over balanced prefixes, checking the windows that end at the newest
    symbol, covers every word of length <= n."""
    w: list[int] = []

    def new_windows_ok(lengths):
        end = len(w)
        return all(L < sum(w[end - L:]) < 2 * L for L in lengths if L <= end)

    def rec():
        for s in range(4):
            w.append(s)
            full = new_windows_ok(range(k, len(w) + 1))
            assert full == new_windows_ok(range(k, 2 * k))
            assert full == is_sum_balanced(w, k)
            if full and len(w) < n:
                rec()
            w.pop()

    rec()


def test_restricted_basics():
    assert is_restricted_sum_balanced((0, 0), 3)
    for k in (2, 4, 8, 10):
        assert is_restricted_sum_balanced((1, 2) * k, k)
    assert not is_restricted_sum_balanced((1, 1, 1, 1), 4)


def test_restricted_implies_balanced_4k():
    rng = random.Random(22)
    hits = 0
    for _ in range(3000):
        x = [1, 2] * 32
        for _ in range(rng.randrange(12)):
            x[rng.randrange(64)] = rng.randrange(4)
        if is_restricted_sum_balanced(x, 8):
            hits += 1
            assert is_sum_balanced(x, 32)
    assert hits > 100


@pytest.mark.parametrize("n,k", [(8, 2), (10, 3), (10, 4)])
def test_runs_of_balanced_words(n, k):
    for x in balanced_words(n, k):
        assert max_run(x) <= k - 1
        assert max_run(signature(x)) < 2 * (k - 1)


# --- enumerative ranking -------------------------------------------------------------

def test_violating_count_small():
    assert violating_count(2) == 12
    for k in range(1, 8):
        brute = sum(1 for w in itertools.product(range(4), repeat=k) if window_class(w))
        assert violating_count(k) == brute


def test_rank_unrank_k4_exhaustive():
    k = 4
    ranks = []
    for w in itertools.product(range(4), repeat=k):
        if window_class(w) is None:
            with pytest.raises(ValueError):
                rank_sum_window(w)
            continue
        r = rank_sum_window(w)
        assert unrank_sum_window(r, k) == w
        ranks.append((window_class(w), r))
    assert sorted(r for _, r in ranks) == list(range(violating_count(k)))
    # lexicographic order within a class (product order is lexicographic)
    for cls in (LOW, HIGH):
        seq = [r for c, r in ranks if c == cls]
        assert seq == sorted(seq)


def test_unrank_within_class():
    k = 5
    assert unrank_sum_window(0, k, HIGH) == unrank_sum_window(class_size(k, LOW), k)
    with pytest.raises(ValueError):
        unrank_sum_window(violating_count(k), k)


# --- sequence replacement ----------------------------------------------------------

def test_rsb_vacuous():
    p = RsbParams(512, default_k(512))
    assert p.vacuous
    rng = random.Random(23)
    for _ in range(200):
        msg = tuple(rng.randrange(4) for _ in range(511))
        y = enc_rsb(msg, p)
        assert y == msg + (0,)
        assert is_restricted_sum_balanced(y, p.k)
        assert dec_rsb(y, p) == msg


def test_rsb_rejects_small_k():
    with pytest.raises(ParameterError):
        RsbParams(64, 8)
    with pytest.raises(ParameterError):
        RsbParams(512, 200)


@pytest.mark.parametrize("n,k", [(512, 267), (1024, 330)])
def test_rsb_active_round_trip(n, k):
    p = RsbParams(n, k)
    assert 1 + p.ptr_digits + p.rank_digits < k
    rng = random.Random(n + k)
    active = 0
    for trial in range(150):
        msg = [rng.randrange(4) for _ in range(n - 1)]
        # plant skewed stretches so the replacement loop has work to do
        for _ in range(trial % 4):
            q = rng.randrange(n - k)
            sym = rng.choice((0, 1, 3))
            msg[q:q + k] = [sym if rng.random() < 0.8 else rng.randrange(4) for _ in range(k)]
        msg = tuple(msg)
        y = enc_rsb(msg, p)
        assert len(y) == n
        assert is_restricted_sum_balanced(y, k)
        assert dec_rsb(y, p) == msg
        active += y[-1] != 0
    assert active > 50


def test_rsb_malformed_record():
    p = RsbParams(512, 267)
    with pytest.raises(DecodeError):
        dec_rsb((3,) * 512, p)


# --- C^B -----------------------------------------------------------------------------

def _classes(n, k):
    out = {}
    for x in balanced_words(n, k):
        key = (vt_syndrome(x, 4 * n + 1), vt_syndrome(signature(x), 5 * k),
               sum(signature(x)) % 2, sum(x) % 7)
        out.setdefault(key, []).append(x)
    return out


def test_cb_partition_n6_k2():
    n, k = 6, 2
    bal = balanced_words(n, k)
    total = 0
    for a in range(4 * n + 1):
        for b in range(5 * k):
            for c in range(2):
                for d in range(7):
                    p = CbParams(n, k, a, b, c, d)
                    total += sum(member_CB(x, p) for x in bal)
    assert total == len(bal)
    classes = _classes(n, k)
    n_classes = (4 * n + 1) * (5 * k) * 2 * 7
    assert max(map(len, classes.values())) * n_classes >= len(bal)


def test_cb_all_zero_fails():
    assert not member_CB((0,) * 8, CbParams(8, 3))


def test_cb_found_codeword_n8_k3():
    x = balanced_words(8, 3)[0]
    key = (vt_syndrome(x, 33), vt_syndrome(signature(x), 15), sum(signature(x)) % 2, sum(x) % 7)
    p = CbParams(8, 3, *key)
    assert member_CB(x, p)
    assert is_sum_balanced(x, 3) and sum(x) % 7 == p.d
    assert member_svt(signature(x), 7, 15, p.b, p.c)


def test_substitution_locations_are_unique():
    for n in range(3, 40):
        mod = 4 * n + 1
        for e in (-3, -2, -1, 1, 2, 3):
            assert len({(j * e) % mod for j in range(1, n + 1)}) == n


@pytest.mark.parametrize("n,k", [(8, 3), (9, 3), (9, 4)])
def test_cb_decoders_exhaustive(n, k):
    for key, code in _classes(n, k).items():
        p = CbParams(n, k, *key)
        assert verify_disjoint(code, EDIT4).ok
        for x in code:
            assert cb_decode_substitution(x, p) == x
            for y in error_ball(x, EDIT4):
                if len(y) == n:
                    assert cb_decode_substitution(y, p) == x
                else:
                    assert cb_decode_indel(y, p) == x


def test_cb_agrees_with_oracle():
    n, k = 8, 3
    for key, code in list(_classes(n, k).items())[::7]:
        p = CbParams(n, k, *key)
        member = lambda w: member_CB(w, p)
        for x in code:
            for y in error_ball(x, EDIT4):
                assert cb_decode(y, p) == brute_force_decode(y, n, member, EDIT4)


def test_deletion_candidates_stay_within_k():
    for n, k in ((8, 3), (10, 4)):
        for x in balanced_words(n, k):
            a, d = vt_syndrome(x, 4 * n + 1), sum(x) % 7
            for i in range(n):
                y = x[:i] + x[i + 1:]
                m = (d - sum(y)) % 7
                J = [j for j in range(1, n + 1)
                     if (vt_syndrome(y) + j * m + sum(y[j - 1:]) - a) % (4 * n + 1) == 0]
                assert max(J) - min(J) <= k


def test_deletion_distance_between_balanced_words():
    """Balanced words sharing Syn and the sum mod 7 that share a deletion
    result are hit at positions at most k apart."""
    n, k = 8, 3
    groups = {}
    for x in balanced_words(n, k):
        groups.setdefault((vt_syndrome(x, 4 * n + 1), sum(x) % 7), []).append(x)
    for words in groups.values():
        hits = {}
        for x in words:
            for i in range(n):
                hits.setdefault(x[:i] + x[i + 1:], {}).setdefault(x, []).append(i)
        for owners in hits.values():
            for (_, pi), (_, pj) in itertools.combinations(owners.items(), 2):
                assert min(abs(i - j) for i in pi for j in pj) <= k


def test_cb_decode_failure():
    p = CbParams(8, 3)
    with pytest.raises(DecodeError):
        cb_decode_indel((0,) * 7, p)


# --- Encoder B -----------------------------------------------------------------------

def test_encB_params():
    p = EncBParams(64)
    assert p.k == 432 and p.k_prime == 1728 and p.P == 8640
    assert p.N - p.n == 2 + p.r1_len + p.r2_len + 1 + 2
    assert p.redundancy_bits == 2 * (1 + ceil_log4(4 * 64 + 1) + ceil_log4(p.P) + 5)


def test_encB_engineered_small_k_is_infeasible():
    # a record for k = 8 at n = 64 needs more than k symbols
    with pytest.raises(ParameterError):
        EncBParams(64, 8).validate()


def test_marker_symbol():
    assert [marker_symbol(s) for s in range(4)] == [1, 0, 0, 0]


@pytest.mark.parametrize("n,k", [(64, None), (16, None), (512, 300)])
def test_encB_round_trip_and_edits(n, k):
    p = EncBParams(n, k)
    rng = random.Random(n)
    for trial in range(20):
        msg = tuple(rng.randrange(4) for _ in range(n - 1))
        z = enc_edit_B(msg, p)
        assert len(z) == p.N
        assert z[n] == z[n + 1] != z[n - 1]
        assert dec_edit_B(z, p) == msg
        ball = sorted(error_ball(z, EDIT4))
        if n > 100:
            ball = rng.sample(ball, 200)
        for y in ball:
            assert dec_edit_B(y, p) == msg


def test_encB_bad_length():
    p = EncBParams(16)
    with pytest.raises(DecodeError):
        dec_edit_B((0,) * (p.N + 2), p)
