"""Command-line front end: encode, decode, corrupt, verify, rates.

Message files hold one record per line, either as 0/1 characters or as
``0x<hex>/<bits>`` with an explicit bit count.  Codeword files are
FASTA-like: a ``>idx key=value ...`` header followed by the word, so decode
can read the parameters back without extra flags.  Plain lines are accepted
too.
"""
from __future__ import annotations

import argparse
import itertools
import json
import sys
from dataclasses import dataclass, field
from typing import Iterator, TextIO

from .channel import BINARY, DNA, KINDS, ChannelKind, corrupt, error_ball, verify_disjoint
from .errors import DecodeError, EncodeError, ParameterError
from .schemes import SCHEMES, Scheme, build
from .words import bits, to_str

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

PARAM_KEYS = ("n", "a", "b", "c", "d", "k", "burst")


@dataclass
class Record:
    idx: str
    text: str
    header: dict = field(default_factory=dict)


def parse_header(line: str) -> tuple[str, dict]:
    fields = line[1:].split()
    idx = fields[0] if fields else ""
    meta = dict(f.split("=", 1) for f in fields[1:] if "=" in f)
    return idx, meta


def read_records(stream: TextIO) -> Iterator[Record]:
    pending: tuple[str, dict] | None = None
    count = 0
    for raw in stream:
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if line.startswith(">"):
            pending = parse_header(line)
            continue
        if pending is not None:
            idx, meta = pending
            pending = None
        else:
            idx, meta = str(count), {}
        count += 1
        yield Record(idx, line, meta)


def parse_message(text: str) -> tuple[int, ...]:
    if text.startswith("0x"):
        hexpart, _, width = text[2:].partition("/")
        if not width:
            raise ValueError("hex records need an explicit bit length: 0x<hex>/<bits>")
        nbits = int(width)
        value = int(hexpart, 16)
        if value >= 1 << nbits:
            raise ValueError(f"hex value does not fit in {nbits} bits")
        return tuple((value >> (nbits - 1 - i)) & 1 for i in range(nbits))
    return bits(text)


def format_header(idx: str, scheme: Scheme) -> str:
    meta = " ".join(f"{k}={v}" for k, v in scheme.header.items())
    return f">{idx} scheme={scheme.name} {meta}"


def word_text(word) -> str:
    return word if isinstance(word, str) else to_str(word)


def parse_word(text: str, scheme: Scheme):
    if scheme.dna:
        if any(ch not in "ATCG" for ch in text):
            raise ValueError("not a DNA word")
        return text
    return bits(text)


# --- parameter resolution ------------------------------------------------------

def _int_or_none(v):
    return None if v is None else int(v)


def scheme_from(args: argparse.Namespace, meta: dict | None = None) -> Scheme:
    """Flags win over header fields, header fields over scheme defaults."""
    meta = meta or {}
    name = args.scheme or meta.get("scheme")
    if name is None:
        raise ParameterError("no scheme given (use --scheme or a record header)")
    vals = {}
    for key in PARAM_KEYS:
        flag = getattr(args, key, None)
        vals[key] = flag if flag is not None else _int_or_none(meta.get(key))
    if vals["n"] is None:
        raise ParameterError("no length given (use --n or a record header)")
    opts = {key: vals[key] for key in ("a", "b", "c", "d") if vals[key] is not None}
    return build(name, vals["n"], k=vals["k"], burst=vals["burst"] or 1, **opts)


def parse_n_list(text: str) -> list[int]:
    """``8,16,32`` or ``4..8`` (inclusive) or a mix."""
    out: list[int] = []
    for part in text.split(","):
        if ".." in part:
            lo, hi = part.split("..")
            out.extend(range(int(lo), int(hi) + 1))
        else:
            out.append(int(part))
    return out


# --- commands --------------------------------------------------------------------

def cmd_encode(args, out: TextIO) -> int:
    scheme = scheme_from(args)
    status = EXIT_OK
    for rec in read_records(args.input):
        try:
            msg = parse_message(rec.text)
            if len(msg) != scheme.m:
                raise ValueError(f"message has {len(msg)} bits, scheme needs {scheme.m}")
            word = scheme.encode(msg)
        except (ValueError, EncodeError) as exc:
            print(f"FAIL {rec.idx} {exc}", file=sys.stderr)
            status = EXIT_FAIL
            continue
        if scheme.dna:
            print(format_header(rec.idx, scheme), file=out)
        print(word_text(word), file=out)
    return status


def cmd_decode(args, out: TextIO) -> int:
    status = EXIT_OK
    cache: dict = {}
    for rec in read_records(args.input):
        key = tuple(sorted(rec.header.items()))
        try:
            if key not in cache:
                cache[key] = scheme_from(args, rec.header)
            scheme = cache[key]
            msg = scheme.decode(parse_word(rec.text, scheme))
        except (DecodeError, ValueError) as exc:
            if isinstance(exc, ParameterError):
                raise
            print(f"FAIL {rec.idx} {exc or type(exc).__name__}", file=out)
            status = EXIT_FAIL
            continue
        print(to_str(msg), file=out)
    return status


def cmd_corrupt(args, out: TextIO) -> int:
    log = open(args.log, "w") if args.log else None
    try:
        for rec in read_records(args.input):
            dna = all(ch in "ATCG" for ch in rec.text)
            if dna:
                word = rec.text
                alphabet = DNA
            else:
                word = bits(rec.text)
                alphabet = BINARY
            kind = ChannelKind(args.kind, alphabet, args.burst or 1)
            seed = f"{args.seed}:{rec.idx}"
            bad, event = corrupt(word, kind, seed)
            if rec.header or dna:
                meta = " ".join(f"{k}={v}" for k, v in rec.header.items())
                print(f">{rec.idx} {meta}".rstrip(), file=out)
            print(word_text(bad), file=out)
            if log:
                print(json.dumps({"idx": rec.idx, "original": word_text(word), **event.to_dict()}),
                      file=log)
    finally:
        if log:
            log.close()
    return EXIT_OK


def _verify_scheme(scheme: Scheme, kind: ChannelKind, max_work: int, out: TextIO) -> bool:
    ball = (scheme.length + 1) * (len(kind.alphabet) ** kind.b + len(kind.alphabet) + 1)
    work = (1 << scheme.m) * ball
    if work > max_work:
        raise ParameterError(
            f"{scheme.name} n={scheme.header['n']}: about {work} ball words exceeds --max-work={max_work}"
        )
    label = f"{scheme.name} " + " ".join(f"{k}={v}" for k, v in scheme.header.items())
    codewords = []
    decode_fail = None
    checked = 0
    for msg in itertools.product((0, 1), repeat=scheme.m):
        word = scheme.encode(msg)
        codewords.append(word)
        if decode_fail:
            continue
        for y in error_ball(word, kind):
            checked += 1
            try:
                got = scheme.decode(y)
            except DecodeError as exc:
                got = exc
            if got != msg:
                decode_fail = (word, y, got)
                break
    rep = verify_disjoint(codewords, kind)
    print(rep.line(f"disjoint {label} kind={kind.name}"), file=out)
    if decode_fail:
        word, y, got = decode_fail
        shown = to_str(got) if isinstance(got, tuple) else repr(got)
        print(f"FAIL decode {label} kind={kind.name} x={word_text(word)} "
              f"witness={word_text(y)} got={shown}", file=out)
    else:
        print(f"PASS decode {label} kind={kind.name} corruptions={checked}", file=out)
    return rep.ok and not decode_fail


def cmd_verify(args, out: TextIO) -> int:
    ok = True
    if args.code:
        words = [r.text for r in read_records(args.code)]
        dna = all(ch in "ATCG" for w in words for ch in w)
        alphabet = DNA if dna else BINARY
        code = words if dna else [bits(w) for w in words]
        kind = ChannelKind(args.kind or "edit", alphabet, args.burst or 1)
        rep = verify_disjoint(code, kind)
        print(rep.line(f"disjoint file kind={kind.name}"), file=out)
        return EXIT_OK if rep.ok else EXIT_FAIL
    if not args.scheme or args.n_list is None:
        raise ParameterError("verify needs --scheme and --n, or --code")
    for n in args.n_list:
        args.n = n
        scheme = scheme_from(args)
        kind = scheme.kind
        if args.kind:
            kind = ChannelKind(args.kind, kind.alphabet, args.burst or 1)
        ok &= _verify_scheme(scheme, kind, args.max_work, out)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_rates(args, out: TextIO) -> int:
    if not args.scheme or args.n_list is None:
        raise ParameterError("rates needs --scheme and --n")
    rows = []
    for n in args.n_list:
        args.n = n
        rows.append((n, scheme_from(args)))
    print("scheme\tn\tlength\tm\tredundancy\trate", file=out)
    for n, s in rows:
        print(f"{s.name}\t{n}\t{s.length}\t{s.m}\t{s.redundancy}\t{s.rate:.4f}", file=out)
    return EXIT_OK


# --- argument parsing ---------------------------------------------------------------

def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dnacodes", description="Error-correcting codes for DNA storage."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, n_list=False):
        p.add_argument("--scheme", choices=SCHEMES)
        if n_list:
            p.add_argument("--n", dest="n_list", type=parse_n_list,
                           help="lengths, e.g. 8,16 or 4..8")
        else:
            p.add_argument("--n", type=int)
        for key in ("a", "b", "c", "d", "k"):
            p.add_argument(f"--{key}", type=int)
        p.add_argument("--burst", type=int, help="burst length b (scheme burst)")
        p.add_argument("--out", help="output file (default stdout)")

    def infile(p):
        p.add_argument("input", nargs="?", type=argparse.FileType("r"), default=sys.stdin)

    p = sub.add_parser("encode", help="encode message records")
    common(p)
    infile(p)
    p = sub.add_parser("decode", help="decode (possibly corrupted) records")
    common(p)
    infile(p)

    p = sub.add_parser("corrupt", help="apply one seeded channel event per record")
    p.add_argument("--kind", choices=KINDS, required=True)
    p.add_argument("--burst", type=int)
    p.add_argument("--seed", default="0")
    p.add_argument("--log", help="write one JSON event per record here")
    p.add_argument("--out")
    infile(p)

    p = sub.add_parser("verify", help="exhaustive ball-disjointness and decoder checks")
    common(p, n_list=True)
    p.add_argument("--kind", choices=KINDS)
    p.add_argument("--code", type=argparse.FileType("r"), help="verify a file of codewords")
    p.add_argument("--max-work", type=int, default=2_000_000)

    p = sub.add_parser("rates", help="message length, redundancy and rate per n")
    common(p, n_list=True)
    return parser


COMMANDS = {
    "encode": cmd_encode,
    "decode": cmd_decode,
    "corrupt": cmd_corrupt,
    "verify": cmd_verify,
    "rates": cmd_rates,
}


def main(argv: list[str] | None = None) -> int:
    args = make_parser().parse_args(argv)
    out = open(args.out, "w") if getattr(args, "out", None) else sys.stdout
    try:
        return COMMANDS[args.command](args, out)
    except ParameterError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    finally:
        if out is not sys.stdout:
            out.close()


if __name__ == "__main__":
    sys.exit(main())
