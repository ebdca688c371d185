from __future__ import annotations

import json
from pathlib import Path

import pytest

from dnacodes.channel import NT_SUBSTITUTIONS, CorruptionRecord
from dnacodes.cli import main, parse_message, read_records
from dnacodes.words import to_str

GOLDEN = Path(__file__).parent / "golden"

# scheme, golden stem, extra flags, corruption kind
CASES = [
    ("indel", "indel_n5", ["--n", "5", "--a", "0"], "indel"),
    ("gc", "gc_n16", ["--n", "16"], "edit"),
    ("editA", "editA_n16", ["--n", "16"], "edit"),
    ("editB", "editB_n16", ["--n", "16"], "edit"),
    ("nt", "nt_n16", ["--n", "16"], "nt"),
    ("burst", "burst_n16", ["--n", "16", "--burst", "2"], "burst"),
]


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    return code, capsys.readouterr()


def messages(stem):
    return [to_str(parse_message(r.text)) for r in read_records(open(GOLDEN / f"{stem}.msg"))]


def test_known_vectors(capsys, tmp_path):
    src = tmp_path / "m.txt"
    src.write_text("11000\n")
    code, out = run(capsys, "encode", "--scheme", "indel", "--n", 5, "--a", 0, src)
    assert code == 0 and out.out.splitlines() == [">0 scheme=indel n=5 a=0", "ACTGG"]
    src.write_text("111111110000111101\n")
    code, out = run(capsys, "encode", "--scheme", "gc", "--n", 16, src)
    assert out.out.splitlines()[1] == "TTATGGCGTAAAGCCG"
    src.write_text("11011\n")
    code, out = run(capsys, "encode", "--scheme", "lev", "--n", 10, "--a", 0, src)
    assert out.out == "0111101011\n"


@pytest.mark.parametrize("scheme,stem,flags,kind", CASES)
def test_encode_matches_golden(capsys, scheme, stem, flags, kind):
    code, out = run(capsys, "encode", "--scheme", scheme, *flags, GOLDEN / f"{stem}.msg")
    assert code == 0
    assert out.out == (GOLDEN / f"{stem}.fa").read_text()


def test_lev_golden(capsys):
    code, out = run(capsys, "encode", "--scheme", "lev", "--n", 10, GOLDEN / "lev_n10.msg")
    assert out.out == (GOLDEN / "lev_n10.txt").read_text()
    code, out = run(capsys, "decode", "--scheme", "lev", "--n", 10, GOLDEN / "lev_n10.txt")
    assert code == 0 and out.out.split() == messages("lev_n10")


@pytest.mark.parametrize("scheme,stem,flags,kind", CASES)
def test_decode_reads_parameters_from_headers(capsys, scheme, stem, flags, kind):
    code, out = run(capsys, "decode", GOLDEN / f"{stem}.fa")
    assert code == 0 and out.out.split() == messages(stem)


@pytest.mark.parametrize("scheme,stem,flags,kind", CASES)
def test_corrupt_is_reproducible_and_decodes(capsys, scheme, stem, flags, kind):
    extra = ["--burst", "2"] if kind == "burst" else []
    code, out = run(capsys, "corrupt", "--kind", kind, *extra, "--seed", 11, GOLDEN / f"{stem}.fa")
    assert code == 0 and out.out == (GOLDEN / f"{stem}.corrupt.fa").read_text()
    code, out = run(capsys, "decode", GOLDEN / f"{stem}.corrupt.fa")
    assert code == 0 and out.out.split() == messages(stem)


def test_corrupt_log_replays(capsys, tmp_path):
    log = tmp_path / "events.jsonl"
    code, out = run(capsys, "corrupt", "--kind", "nt", "--seed", "x", "--log", log,
                    GOLDEN / "nt_n16.fa")
    words = [r.text for r in read_records(iter(out.out.splitlines()))]
    events = [json.loads(line) for line in log.read_text().splitlines()]
    assert len(events) == len(words) == 4
    for ev, word in zip(events, words):
        rec = CorruptionRecord(ev["kind"], ev["op"], ev["position"], tuple(ev["symbols"]),
                               ev["length"], ev["seed"])
        assert rec.apply(ev["original"]) == word
        if ev["op"] == "sub":
            assert ev["symbols"] in NT_SUBSTITUTIONS[ev["original"][ev["position"]]]


def test_out_of_model_record_fails_without_crash(capsys, tmp_path):
    bad = tmp_path / "bad.fa"
    bad.write_text(">0 scheme=indel n=5 a=0\nACTGG\n>1 scheme=indel n=5 a=0\nAAAAAAA\n"
                   ">2 scheme=indel n=5 a=0\nACXGG\n")
    code, out = run(capsys, "decode", bad)
    lines = out.out.splitlines()
    assert code == 1
    assert lines[0] == "11000"
    assert lines[1].startswith("FAIL 1") and lines[2].startswith("FAIL 2")


def test_encode_length_mismatch(capsys, tmp_path):
    src = tmp_path / "m.txt"
    src.write_text("11000\n110\n")
    code, out = run(capsys, "encode", "--scheme", "indel", "--n", 5, src)
    assert code == 1
    assert "FAIL 1" in out.err and out.out.count("ACTGG") == 1


def test_hex_records():
    assert parse_message("0x1b/5") == (1, 1, 0, 1, 1)
    with pytest.raises(ValueError):
        parse_message("0x1b")
    with pytest.raises(ValueError):
        parse_message("0xff/4")


def test_verify_examples(capsys, tmp_path):
    code, out = run(capsys, "verify", "--scheme", "lev", "--kind", "edit", "--n", 8)
    assert code == 0 and out.out.count("PASS") == 2
    code, out = run(capsys, "verify", "--scheme", "indel", "--kind", "indel", "--n", 4)
    assert code == 0 and out.out.count("PASS") == 2
    bad = tmp_path / "code.txt"
    bad.write_text("00\n01\n")
    code, out = run(capsys, "verify", "--code", bad, "--kind", "indel")
    assert code == 1 and "FAIL" in out.out and "witness=0" in out.out


def test_verify_work_guard(capsys):
    code, out = run(capsys, "verify", "--scheme", "gc", "--n", 16, "--max-work", 1000)
    assert code == 2 and "max-work" in out.err


def test_rates(capsys):
    code, out = run(capsys, "rates", "--scheme", "indel", "--n", "8,16,1024")
    assert out.out == (GOLDEN / "rates_indel.tsv").read_text()
    for scheme, n, red in (("indel", 1024, 12), ("gc", 16, 14), ("lev", 10, 5)):
        code, out = run(capsys, "rates", "--scheme", scheme, "--n", n)
        assert code == 0 and out.out.splitlines()[1].split("\t")[4] == str(red)


def test_parameter_errors_exit_2(capsys):
    code, out = run(capsys, "rates", "--scheme", "editB", "--n", 64, "--k", 8)
    assert code == 2 and "too small" in out.err
    code, out = run(capsys, "rates", "--scheme", "nt", "--n", 8)
    assert code == 2
    with pytest.raises(SystemExit) as exc:
        main(["encode", "--scheme", "nope"])
    assert exc.value.code == 2
