"""Wordlist method: hide each cipher unit in an unmodified dictionary word.

For a unit written as three digits ``k m r`` the word has ``m`` letters
(``m + 10`` when ``m < 6``) and starts with the letter whose 1-based alphabet
index is ``k + m + r``. ``k`` goes to the stego key. Unit 0 has digit sum 0,
which names no letter, so it is sent as a 10-letter word starting with
``z``; no other unit can reach ``z`` since the largest digit sum is 19 (``s``).
"""

from __future__ import annotations

import random
import string
from collections.abc import Sequence

from .bundle import EmbedStats, StegoBundle
from .dictionary import Dictionary, pick_word
from .errors import EmptyBucket, MalformedStego

MIN_WORDS = 10
PAD_LENGTH = 10
SENTINEL_INITIAL = "z"
SENTINEL_BUCKET = (10, SENTINEL_INITIAL)
# Highest initial a legitimate unit can need: digit sum 19 -> 's'.
LAST_INITIAL = "s"
PAD_INITIALS = string.ascii_lowercase[: string.ascii_lowercase.index(LAST_INITIAL) + 1]


def digits(n: int) -> tuple[int, int, int]:
    if not 0 <= n <= 255:
        raise ValueError(f"cipher unit out of range: {n}")
    return n // 100, (n // 10) % 10, n % 10


def unit_bucket(n: int) -> tuple[int, str]:
    """The (word length, initial) a unit is hidden under."""
    if n == 0:
        return SENTINEL_BUCKET
    k, m, r = digits(n)
    length = m + 10 if m < 6 else m
    return length, string.ascii_lowercase[k + m + r - 1]


def hide(cipher: Sequence[int], dictionary: Dictionary, rng: random.Random | None = None) -> StegoBundle:
    rng = rng if rng is not None else random.SystemRandom()
    used: set[str] = set()
    reused = 0
    words: list[str] = []
    key: list[int] = []
    for n in cipher:
        length, initial = unit_bucket(n)
        entry = pick_word(dictionary, length, initial, used=used, rng=rng)
        reused += entry.word in used
        used.add(entry.word)
        words.append(entry.word)
        key.append(digits(n)[0])
    pad_initials = [c for c in PAD_INITIALS if dictionary.bucket(PAD_LENGTH, c)]
    while len(words) < MIN_WORDS:
        if not pad_initials:
            raise EmptyBucket(PAD_LENGTH)
        entry = pick_word(dictionary, PAD_LENGTH, rng.choice(pad_initials), used=used, rng=rng)
        reused += entry.word in used
        used.add(entry.word)
        words.append(entry.word)

    text = "".join(w + "\n" for w in words)
    stats = EmbedStats(len(cipher), len(text.encode("utf-8")), len(words), reused)
    # The generated list is both cover and stego file.
    return StegoBundle("wordlist", text, key, stats, text)


def decode_word(word: str, k: int) -> int:
    if not (word.isascii() and word.isalpha()):
        raise MalformedStego(f"not a word: {word!r}")
    if not 6 <= len(word) <= 15:
        raise MalformedStego(f"word length {len(word)} outside 6-15: {word!r}")
    if not 0 <= k <= 2:
        raise MalformedStego(f"key digit {k} outside 0-2")
    initial = word[0].lower()
    if initial == SENTINEL_INITIAL:
        if len(word) != PAD_LENGTH or k != 0:
            raise MalformedStego(f"sentinel word {word!r} with length {len(word)} and key {k}")
        return 0
    if initial > LAST_INITIAL:
        raise MalformedStego(f"initial {initial!r} cannot carry a digit sum")
    m = len(word) - 10 if len(word) > 9 else len(word)
    s = string.ascii_lowercase.index(initial) + 1
    r = s - (m + k)
    if not 0 <= r <= 9:
        raise MalformedStego(f"word {word!r} with key {k} gives last digit {r}")
    unit = 100 * k + 10 * m + r
    if unit > 255:
        raise MalformedStego(f"word {word!r} with key {k} decodes to {unit}")
    return unit


def seek(stego_text: str, key: Sequence[int]) -> list[int]:
    words = stego_text.split()
    if len(words) < len(key):
        raise MalformedStego(f"stego has {len(words)} words but key has {len(key)} digits")
    return [decode_word(w, k) for w, k in zip(words, key)]
