"""Line-oriented file formats for ciphers, keys and stego keys.

Cipher files, OTP key files and the two numeric stego keys hold one decimal
integer per line with a trailing newline; an empty sequence is an empty
file. Paragraph stego keys are lowercase letters wrapped at 72 columns.
"""

from __future__ import annotations

from collections.abc import Sequence

from .errors import FormatError

KEY_WIDTH = 72

BYTE_RANGE = (0, 255)
FLAG_RANGE = (0, 10)
DIGIT_RANGE = (0, 2)


def write_ints(values: Sequence[int]) -> str:
    return "".join(f"{v}\n" for v in values)


def read_ints(text: str, bounds: tuple[int, int] = BYTE_RANGE, what: str = "value") -> list[int]:
    lo, hi = bounds
    out = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        token = line.strip()
        if not token.isdigit() or not token.isascii():
            raise FormatError(f"{what} file line {lineno}: not a decimal integer: {line!r}")
        v = int(token)
        if not lo <= v <= hi:
            raise FormatError(f"{what} file line {lineno}: {v} outside {lo}-{hi}")
        out.append(v)
    return out


def write_letter_key(key: str) -> str:
    return "".join(key[i : i + KEY_WIDTH] + "\n" for i in range(0, len(key), KEY_WIDTH))


def read_letter_key(text: str) -> str:
    key = "".join(text.split())
    bad = [c for c in key if not c.isalpha()]
    if bad:
        raise FormatError(f"stego key contains non-letters: {''.join(bad[:5])!r}")
    return key.lower()


def write_stego_key(method: str, key) -> str:
    return write_letter_key(key) if method == "paragraph" else write_ints(key)


def read_stego_key(method: str, text: str):
    if method == "paragraph":
        return read_letter_key(text)
    if method == "missing-letter":
        return read_ints(text, FLAG_RANGE, "stego key")
    if method == "wordlist":
        return read_ints(text, DIGIT_RANGE, "stego key")
    raise ValueError(f"unknown method: {method}")
