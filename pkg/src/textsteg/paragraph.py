"""Paragraph method: hide bits in the first/last letters of cover words.

The cover is never modified. For every bit the next usable word is taken;
its first letter goes to the key for a 0 bit and its last letter for a 1 bit.
Words whose first and last letters agree (or that have no letters at all)
are skipped by both sides.
"""

from __future__ import annotations

import re
from functools import lru_cache
from collections.abc import Iterable, Sequence
from dataclasses import dataclass

from .bundle import EmbedStats, StegoBundle
from .errors import BadBitCount, CoverTooShort, KeyMismatch

_TOKEN_RE = re.compile(r"\S+")


@dataclass(frozen=True)
class CoverToken:
    raw: str
    start: str | None
    end: str | None
    offset: int = 0

    @property
    def usable(self) -> bool:
        return self.start is not None and self.start != self.end

    @property
    def stop(self) -> int:
        return self.offset + len(self.raw)


def _fold(ch: str) -> str:
    return ch.lower()[0]


def make_token(raw: str, offset: int = 0) -> CoverToken:
    letters = [c for c in raw if c.isalpha()]
    if not letters:
        return CoverToken(raw, None, None, offset)
    return CoverToken(raw, _fold(letters[0]), _fold(letters[-1]), offset)


def tokenize(cover: str) -> list[CoverToken]:
    """Split on whitespace; start/end are the first/last letters, lowercased."""
    return [make_token(m.group(), m.start()) for m in _TOKEN_RE.finditer(cover)]


@lru_cache(maxsize=8)
def usable_tokens(cover: str) -> tuple[CoverToken, ...]:
    return tuple(t for t in tokenize(cover) if t.usable)


def to_bits(cipher: Iterable[int]) -> list[int]:
    bits = []
    for n in cipher:
        if not 0 <= n <= 255:
            raise ValueError(f"cipher unit out of range: {n}")
        bits.extend((n >> shift) & 1 for shift in range(7, -1, -1))
    return bits


def from_bits(bits: Sequence[int]) -> list[int]:
    if len(bits) % 8:
        raise BadBitCount(len(bits))
    out = []
    for i in range(0, len(bits), 8):
        n = 0
        for b in bits[i : i + 8]:
            n = (n << 1) | b
        out.append(n)
    return out


def hide(cipher: Sequence[int], cover: str) -> StegoBundle:
    bits = to_bits(cipher)
    tokens = usable_tokens(cover)
    if len(tokens) < len(bits):
        raise CoverTooShort(len(bits), len(tokens))
    key = "".join(tok.end if bit else tok.start for bit, tok in zip(bits, tokens))
    # Capacity is measured against the stretch of cover actually consumed.
    consumed = cover[: tokens[len(bits) - 1].stop] if bits else ""
    stats = EmbedStats(len(cipher), len(consumed.encode("utf-8")), len(bits))
    return StegoBundle("paragraph", cover, key, stats, cover)


def seek(stego_text: str, key: str) -> list[int]:
    letters = [c for c in key if not c.isspace()]
    tokens = usable_tokens(stego_text)
    if len(tokens) < len(letters):
        raise CoverTooShort(len(letters), len(tokens))
    bits = []
    for i, (c, tok) in enumerate(zip(letters, tokens)):
        c = _fold(c)
        if c == tok.start:
            bits.append(0)
        elif c == tok.end:
            bits.append(1)
        else:
            raise KeyMismatch(i, c, tok.start, tok.end)
    return from_bits(bits)

