"""Missing-letter puzzle method.

Each cipher unit becomes one dictionary word with one or two letters replaced
by ``?``. The word length and the ``?`` positions (1-based) carry the decimal
digits of the unit; a parenthesised hint after the word marks a zero last
digit. Units of 100 and above also set a flag in the stego key holding their
last digit plus one.
"""

from __future__ import annotations

import random
import re
from collections.abc import Sequence
from dataclasses import dataclass

from .bundle import EmbedStats, StegoBundle
from .dictionary import Dictionary, pick_word
from .errors import MalformedStego

MIN_LINES = 10
PAD_LENGTH = 10

_LINE_RE = re.compile(r"^(?P<word>[A-Za-z?]+)(?: \((?P<hint>[^()\r\n]+)\))?$")


@dataclass(frozen=True)
class PuzzleLine:
    masked_word: str
    source_word: str
    hint: str | None = None

    def __post_init__(self):
        if len(self.masked_word) != len(self.source_word):
            raise ValueError("masked word and source word differ in length")
        for m, s in zip(self.masked_word, self.source_word):
            if m != "?" and m != s:
                raise ValueError(f"{self.masked_word!r} does not mask {self.source_word!r}")
        holes = self.masked_word.count("?")
        if holes not in (1, 2):
            raise ValueError(f"expected 1 or 2 '?', got {holes}")
        if self.hint is not None and holes != 1:
            raise ValueError("a hinted line must have exactly one '?'")

    @property
    def positions(self) -> list[int]:
        return [i for i, c in enumerate(self.masked_word, start=1) if c == "?"]

    def render(self) -> str:
        if self.hint is None:
            return self.masked_word
        return f"{self.masked_word} ({self.hint})"


def mask(word: str, positions: Sequence[int]) -> str:
    chars = list(word)
    for p in positions:
        chars[p - 1] = "?"
    return "".join(chars)


def layout(n: int, rng: random.Random) -> tuple[int, list[int], bool, int]:
    """Work out (word_length, positions, needs_hint, flag) for unit ``n``."""
    if not 0 <= n <= 255:
        raise ValueError(f"cipher unit out of range: {n}")
    if n < 100:
        q, r = divmod(n, 10)
        length = 10 + q if q < 6 else q
        if r == 0:
            return length, [rng.randint(1, length)], True, 0
        if r <= q:
            return length, [r], False, 0
        first = r - q
        second = rng.randint(10, length) if q < 6 else rng.randint(4, length)
        if q < 6:
            assert first <= 9 < 10 <= second, (n, first, second)
        else:
            assert first <= 3 < 4 <= second, (n, first, second)
        return length, [first, second], False, 0
    flag = 1 + n % 10
    q, r = n // 100, (n // 10) % 10
    length = 10 + q
    if r == 0:
        return length, [rng.randint(10, length)], False, flag
    return length, [r], False, flag


def encode_unit(
    n: int,
    dictionary: Dictionary,
    rng: random.Random,
    used: set[str] | None = None,
) -> tuple[PuzzleLine, int]:
    length, positions, hinted, flag = layout(n, rng)
    entry = pick_word(dictionary, length, needs_gloss=hinted, used=used or frozenset(), rng=rng)
    if used is not None:
        used.add(entry.word)
    line = PuzzleLine(mask(entry.word, positions), entry.word, entry.gloss if hinted else None)
    return line, flag


def _pad_line(dictionary: Dictionary, rng: random.Random, used: set[str]) -> PuzzleLine:
    entry = pick_word(dictionary, PAD_LENGTH, used=used, rng=rng)
    used.add(entry.word)
    return PuzzleLine(mask(entry.word, [rng.randint(1, PAD_LENGTH)]), entry.word)


def hide(cipher: Sequence[int], dictionary: Dictionary, rng: random.Random | None = None) -> StegoBundle:
    rng = rng if rng is not None else random.SystemRandom()
    used: set[str] = set()
    reused = 0
    lines: list[PuzzleLine] = []
    flags: list[int] = []
    for n in cipher:
        before = len(used)
        line, flag = encode_unit(n, dictionary, rng, used)
        reused += len(used) == before
        lines.append(line)
        flags.append(flag)
    while len(lines) < MIN_LINES:
        before = len(used)
        lines.append(_pad_line(dictionary, rng, used))
        reused += len(used) == before

    stego_text = "".join(line.render() + "\n" for line in lines)
    cover_text = "".join(line.source_word + "\n" for line in lines)
    stats = EmbedStats(
        hidden_bytes=len(cipher),
        cover_bytes=len(cover_text.encode("utf-8")),
        words_used=len(lines),
        reuse_warnings=reused,
    )
    return StegoBundle("missing-letter", stego_text, flags, stats, cover_text)


def parse_line(text: str) -> tuple[str, str | None]:
    m = _LINE_RE.match(text)
    if m is None:
        raise MalformedStego(f"not a puzzle line: {text!r}")
    return m.group("word"), m.group("hint")


def decode_line(text: str, flag: int) -> int:
    word, hint = parse_line(text)
    holes = [i for i, c in enumerate(word, start=1) if c == "?"]
    if len(holes) not in (1, 2):
        raise MalformedStego(f"{len(holes)} missing letters in {word!r}")
    if hint is not None and len(holes) != 1:
        raise MalformedStego(f"hint on a two-gap line: {text!r}")
    if not 6 <= len(word) <= 15:
        raise MalformedStego(f"word length {len(word)} outside 6-15: {word!r}")

    if flag == 0:
        tens = len(word) - 10 if len(word) > 9 else len(word)
        if hint is not None:
            ones = 0
        elif len(holes) == 2:
            ones = tens + holes[0]
        else:
            ones = holes[0]
        if ones > 9:
            raise MalformedStego(f"line {text!r} decodes to a last digit of {ones}")
        return 10 * tens + ones

    if not 1 <= flag <= 10:
        raise MalformedStego(f"flag {flag} outside 0-10")
    if hint is not None or len(holes) != 1:
        raise MalformedStego(f"flagged line must have one gap and no hint: {text!r}")
    hundreds = len(word) - 10
    if hundreds < 1:
        raise MalformedStego(f"flagged line needs a word of 11+ letters: {word!r}")
    tens = holes[0] if holes[0] <= 9 else 0
    unit = 100 * hundreds + 10 * tens + (flag - 1)
    if unit > 255:
        raise MalformedStego(f"line {text!r} decodes to {unit}")
    return unit


def seek(stego_text: str, flags: Sequence[int]) -> list[int]:
    lines = [ln for ln in stego_text.splitlines() if ln.strip()]
    if len(lines) < len(flags):
        raise MalformedStego(f"stego has {len(lines)} lines but key has {len(flags)} flags")
    return [decode_line(line, k) for line, k in zip(lines, flags)]
