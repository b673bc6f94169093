"""Command-line interface.

Exit codes: 0 success, 2 bad input or I/O failure, 3 cipher/key length
mismatch, 4 dictionary bucket empty, 5 cover too short, 6 malformed stego
file or wrong stego key, 7 metric error.
"""

from __future__ import annotations

import argparse
import logging
import random
import sys
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from . import bench, formats, missing_letter, paragraph, wordlist
from .dictionary import audit_coverage, load_dictionary, sample_dictionary
from .errors import StegoError
from .metrics import capacity_percent, stego_similarity_report
from .otp import decipher, encipher

log = logging.getLogger("textsteg")

METHODS = ("missing-letter", "wordlist", "paragraph")


@dataclass
class PipelineConfig:
    method: str
    dictionary_path: str | None = None
    cover_path: str | None = None
    seed: int | None = None
    in_path: str | None = None
    stego_path: str | None = None
    stego_key_path: str | None = None
    out_path: str | None = None

    def __post_init__(self):
        if self.method not in METHODS:
            raise ValueError(f"unknown method {self.method!r}")
        if self.method == "paragraph" and not self.cover_path:
            raise ValueError("the paragraph method needs --cover")

    def rng(self) -> random.Random:
        return random.Random(self.seed) if self.seed is not None else random.SystemRandom()

    def dictionary(self):
        if self.dictionary_path is None:
            return sample_dictionary()
        return load_dictionary(self.dictionary_path)


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    return Path(path).read_text(encoding="utf-8")


def _write_text(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
        sys.stdout.flush()
    else:
        Path(path).write_text(text, encoding="utf-8", newline="")


def cmd_encipher(args) -> int:
    data = sys.stdin.buffer.read() if args.inp == "-" else Path(args.inp).read_bytes()
    rng = random.Random(args.seed) if args.seed is not None else None
    cipher, key = encipher(data, rng)
    _write_text(args.key, formats.write_ints(key))
    _write_text(args.out, formats.write_ints(cipher))
    return 0


def cmd_decipher(args) -> int:
    cipher = formats.read_ints(_read_text(args.inp), what="cipher")
    key = formats.read_ints(_read_text(args.key), what="key")
    message = decipher(cipher, key)
    if args.out is None or args.out == "-":
        sys.stdout.buffer.write(message)
        sys.stdout.flush()
    else:
        Path(args.out).write_bytes(message)
    return 0


def cmd_hide(args) -> int:
    cfg = PipelineConfig(
        args.method, args.dict, args.cover, args.seed,
        in_path=args.inp, stego_path=args.stego, stego_key_path=args.stego_key,
    )
    cipher = formats.read_ints(_read_text(cfg.in_path), what="cipher")
    if cfg.method == "paragraph":
        bundle = paragraph.hide(cipher, _read_text(cfg.cover_path))
    else:
        module = missing_letter if cfg.method == "missing-letter" else wordlist
        bundle = module.hide(cipher, cfg.dictionary(), cfg.rng())
    _write_text(cfg.stego_path, bundle.stego_text)
    _write_text(cfg.stego_key_path, formats.write_stego_key(cfg.method, bundle.stego_key))
    st = bundle.stats
    pct = st.capacity_percent
    print(
        f"hidden_bytes={st.hidden_bytes} cover_bytes={st.cover_bytes} "
        f"capacity={'n/a' if pct is None else f'{pct:.2f}%'} reused_words={st.reuse_warnings}",
        file=sys.stderr,
    )
    return 0


def cmd_seek(args) -> int:
    stego = _read_text(args.stego)
    key = formats.read_stego_key(args.method, _read_text(args.stego_key))
    if args.method == "paragraph":
        cipher = paragraph.seek(stego, key)
    elif args.method == "missing-letter":
        cipher = missing_letter.seek(stego, key)
    else:
        cipher = wordlist.seek(stego, key)
    _write_text(args.out, formats.write_ints(cipher))
    return 0


def cmd_measure(args) -> int:
    if args.kind == "capacity":
        if args.hidden is not None:
            hidden = args.hidden
        elif args.inp is not None:
            hidden = len(Path(args.inp).read_bytes())
        else:
            raise SystemExit("measure capacity needs --hidden or --in")
        if args.cover_size is not None:
            size = args.cover_size
        elif args.cover is not None:
            size = len(Path(args.cover).read_bytes())
        else:
            raise SystemExit("measure capacity needs --cover-size or --cover")
        _write_text(args.out, f"{capacity_percent(hidden, size):.2f}\n")
        return 0
    if args.cover is None or args.stego is None:
        raise SystemExit("measure jaro needs --cover and --stego")
    report = stego_similarity_report(_read_text(args.cover), _read_text(args.stego))
    _write_text(args.out, report.format())
    return 0


def _bundled(name: str) -> str:
    return resources.files("textsteg.data").joinpath(name).read_text(encoding="utf-8")


def cmd_bench(args) -> int:
    dictionary = load_dictionary(args.dict) if args.dict else sample_dictionary()
    cover = _read_text(args.cover) if args.cover else _bundled("corpus.txt")
    result = bench.run_bench(dictionary, cover, args.seed)
    _write_text(args.out, bench.format_result(result, args.format))
    return 0


def cmd_dict_check(args) -> int:
    dictionary = load_dictionary(args.dict) if args.dict else sample_dictionary()
    report = audit_coverage(dictionary, args.method)
    _write_text(args.out, "".join(line + "\n" for line in report.lines()))
    print(f"{len(dictionary)} words, {len(report.missing)} missing buckets", file=sys.stderr)
    return 0 if report.ok else 4


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="textsteg", description="Text steganography toolkit.")
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("encipher", help="scramble a message with a one-time pad")
    sp.add_argument("--in", dest="inp", required=True)
    sp.add_argument("--key", required=True, help="OTP key output file")
    sp.add_argument("--out", required=True, help="cipher output file")
    sp.add_argument("--seed", type=int)
    sp.set_defaults(func=cmd_encipher)

    sp = sub.add_parser("decipher", help="recover a message from cipher and key")
    sp.add_argument("--in", dest="inp", required=True)
    sp.add_argument("--key", required=True)
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_decipher)

    sp = sub.add_parser("hide", help="embed a cipher file")
    sp.add_argument("--method", choices=METHODS, required=True)
    sp.add_argument("--in", dest="inp", required=True)
    sp.add_argument("--dict")
    sp.add_argument("--cover")
    sp.add_argument("--stego", required=True)
    sp.add_argument("--stego-key", required=True)
    sp.add_argument("--seed", type=int)
    sp.set_defaults(func=cmd_hide)

    sp = sub.add_parser("seek", help="extract a cipher file")
    sp.add_argument("--method", choices=METHODS, required=True)
    sp.add_argument("--stego", required=True)
    sp.add_argument("--stego-key", required=True)
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_seek)

    sp = sub.add_parser("measure", help="capacity or Jaro-Winkler similarity")
    sp.add_argument("kind", choices=("capacity", "jaro"))
    sp.add_argument("--hidden", type=int)
    sp.add_argument("--cover-size", type=int)
    sp.add_argument("--in", dest="inp")
    sp.add_argument("--cover")
    sp.add_argument("--stego")
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_measure)

    sp = sub.add_parser("bench", help="capacity and similarity tables over the sample messages")
    sp.add_argument("--dict")
    sp.add_argument("--cover")
    sp.add_argument("--out")
    sp.add_argument("--seed", type=int)
    sp.add_argument("--format", choices=("tsv", "md"), default="tsv")
    sp.set_defaults(func=cmd_bench)

    sp = sub.add_parser("dict-check", help="report dictionary buckets a method cannot fill")
    sp.add_argument("--dict")
    sp.add_argument("--method", choices=("missing-letter", "wordlist"), required=True)
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_dict_check)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.ERROR, format="%(levelname)s: %(message)s")
    try:
        return args.func(args)
    except StegoError as exc:
        print(f"textsteg: {exc}", file=sys.stderr)
        return exc.exit_code
    except (OSError, ValueError, UnicodeDecodeError) as exc:
        print(f"textsteg: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
