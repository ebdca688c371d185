"""Error-correcting codes for DNA storage: single indels, bursts of indels,
single edits, nucleotide edits and GC-balanced words."""
from __future__ import annotations

from .binary import (
    LevParams,
    SvtParams,
    dec_burst,
    dec_L_codeword,
    dec_L_message,
    dec_svt,
    enc_L,
    enc_svt,
    member_L,
    member_Lburst,
    member_svt,
)
from .cb import (
    CbParams,
    EncBParams,
    RsbParams,
    cb_decode,
    cb_decode_indel,
    cb_decode_substitution,
    dec_edit_B,
    dec_rsb,
    enc_edit_B,
    enc_rsb,
    is_restricted_sum_balanced,
    is_sum_balanced,
    member_CB,
)
from .channel import (
    ChannelKind,
    CorruptionRecord,
    brute_force_decode,
    corrupt,
    error_ball,
    verify_disjoint,
)
from .edit import EditAParams, NtParams, dec_edit_A, dec_nt_edit, enc_edit_A, enc_nt_edit, member_Cnt
from .enumerative import rank_sum_window, unrank_sum_window, violating_count
from .errors import Ambiguous, DecodeError, EncodeError, NoCandidate, ParameterError
from .gc import GcParams, dec_gc, enc_gc, knuth_balance, knuth_unbalance
from .indel import (
    BurstParams,
    IndelParams,
    array_flatten,
    array_view,
    dec_burst_indel,
    dec_indel,
    enc_burst_indel,
    enc_indel,
)
from .rll import dec_rll, enc_rll
from .schemes import SCHEMES, build

__version__ = "0.1.0"
