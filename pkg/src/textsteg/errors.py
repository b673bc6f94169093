"""Exception hierarchy shared by every hide/seek method and the CLI."""

from __future__ import annotations


class StegoError(Exception):
    """Base class for all toolkit errors."""

    exit_code = 1


class LengthMismatch(StegoError):
    exit_code = 3

    def __init__(self, cipher_len: int, key_len: int):
        super().__init__(f"cipher has {cipher_len} units but key has {key_len}")
        self.cipher_len = cipher_len
        self.key_len = key_len


class ParseError(StegoError):
    exit_code = 2

    def __init__(self, line: int, reason: str):
        super().__init__(f"line {line}: {reason}")
        self.line = line
        self.reason = reason


class EmptyBucket(StegoError):
    exit_code = 4

    def __init__(self, length: int, initial: str | None = None, needs_gloss: bool = False):
        what = f"{length}-letter"
        if initial is not None:
            what += f" '{initial}'-initial"
        if needs_gloss:
            what += " glossed"
        super().__init__(f"dictionary has no {what} word")
        self.length = length
        self.initial = initial
        self.needs_gloss = needs_gloss


class CoverTooShort(StegoError):
    exit_code = 5

    def __init__(self, needed: int, found: int):
        super().__init__(f"cover has {found} usable words, {needed} needed")
        self.needed = needed
        self.found = found


class MalformedStego(StegoError):
    exit_code = 6


class KeyMismatch(StegoError):
    """A key letter matches neither end of its cover word (wrong key or tampering)."""

    exit_code = 6

    def __init__(self, token_index: int, letter: str = "", start: str = "", end: str = ""):
        super().__init__(
            f"key letter {token_index} ({letter!r}) matches neither "
            f"start {start!r} nor end {end!r} of its cover word"
        )
        self.token_index = token_index


class BadBitCount(StegoError):
    exit_code = 6

    def __init__(self, count: int):
        super().__init__(f"bit count {count} is not a multiple of 8")
        self.count = count


class MetricError(StegoError):
    exit_code = 7


class ZeroCover(MetricError):
    def __init__(self, cover_bytes: int = 0):
        super().__init__(f"cover size must be positive, got {cover_bytes}")


class LineCountMismatch(MetricError):
    def __init__(self, cover_lines: int, stego_lines: int):
        super().__init__(f"cover has {cover_lines} lines but stego has {stego_lines}")
        self.cover_lines = cover_lines
        self.stego_lines = stego_lines


class FormatError(StegoError):
    """A cipher, key, or stego-key file does not follow its line format."""

    exit_code = 2
