"""Word store for the generated-cover methods.

Dictionary files are line oriented: ``word`` or ``word<TAB>gloss``. Lines
starting with ``#`` are comments and blank lines are skipped. Only words of
6 to 15 ASCII letters are accepted.
"""

from __future__ import annotations

import logging
import random
from collections.abc import Iterable
from dataclasses import dataclass, field
from importlib import resources
from types import MappingProxyType
from typing import Mapping

from .errors import EmptyBucket, ParseError

log = logging.getLogger(__name__)

MIN_LEN = 6
MAX_LEN = 15
LENGTHS = range(MIN_LEN, MAX_LEN + 1)

# Rejection-sampling attempts before falling back to an explicit scan.
_DRAW_ATTEMPTS = 16


@dataclass(frozen=True)
class WordEntry:
    word: str
    gloss: str | None = None

    def __post_init__(self):
        if not (self.word.isascii() and self.word.isalpha()):
            raise ValueError(f"word must be ASCII letters only: {self.word!r}")
        if not MIN_LEN <= len(self.word) <= MAX_LEN:
            raise ValueError(f"word length {len(self.word)} outside {MIN_LEN}-{MAX_LEN}: {self.word!r}")
        if self.gloss is not None:
            if not self.gloss or any(c in self.gloss for c in "()\n\r"):
                raise ValueError(f"bad gloss for {self.word!r}: {self.gloss!r}")

    @property
    def initial(self) -> str:
        return self.word[0].lower()


@dataclass(frozen=True)
class Dictionary:
    entries: tuple[WordEntry, ...] = ()
    by_length: Mapping[int, tuple[WordEntry, ...]] = field(init=False, repr=False)
    by_length_and_initial: Mapping[tuple[int, str], tuple[WordEntry, ...]] = field(init=False, repr=False)
    glossed_by_length: Mapping[int, tuple[WordEntry, ...]] = field(init=False, repr=False)

    def __post_init__(self):
        by_len: dict[int, list[WordEntry]] = {}
        by_li: dict[tuple[int, str], list[WordEntry]] = {}
        glossed: dict[int, list[WordEntry]] = {}
        for e in self.entries:
            n = len(e.word)
            by_len.setdefault(n, []).append(e)
            by_li.setdefault((n, e.initial), []).append(e)
            if e.gloss is not None:
                glossed.setdefault(n, []).append(e)

        def freeze(d):
            return MappingProxyType({k: tuple(v) for k, v in d.items()})

        object.__setattr__(self, "by_length", freeze(by_len))
        object.__setattr__(self, "by_length_and_initial", freeze(by_li))
        object.__setattr__(self, "glossed_by_length", freeze(glossed))

    def __len__(self) -> int:
        return len(self.entries)

    def bucket(self, length: int, initial: str | None = None, needs_gloss: bool = False) -> tuple[WordEntry, ...]:
        if initial is None:
            pool = (self.glossed_by_length if needs_gloss else self.by_length).get(length, ())
        else:
            pool = self.by_length_and_initial.get((length, initial.lower()), ())
            if needs_gloss:
                pool = tuple(e for e in pool if e.gloss is not None)
        return pool


def parse_dictionary(lines: Iterable[str]) -> Dictionary:
    entries: list[WordEntry] = []
    seen: set[str] = set()
    for lineno, raw in enumerate(lines, start=1):
        line = raw.rstrip("\r\n")
        if not line.strip() or line.startswith("#"):
            continue
        word, sep, gloss = line.partition("\t")
        word = word.strip()
        gloss = gloss.strip() if sep else None
        if sep and not gloss:
            raise ParseError(lineno, "empty gloss after tab")
        if not (word.isascii() and word.isalpha()):
            raise ParseError(lineno, f"word contains non-letters: {word!r}")
        if not MIN_LEN <= len(word) <= MAX_LEN:
            raise ParseError(lineno, f"word length {len(word)} outside {MIN_LEN}-{MAX_LEN}: {word!r}")
        if gloss is not None and any(c in gloss for c in "()"):
            raise ParseError(lineno, "gloss may not contain parentheses")
        if word in seen:
            continue
        seen.add(word)
        entries.append(WordEntry(word, gloss))
    return Dictionary(tuple(entries))


def load_dictionary(source) -> Dictionary:
    """Load from a path or an open text stream."""
    if hasattr(source, "read"):
        return parse_dictionary(source.read().splitlines())
    with open(source, encoding="utf-8") as fh:
        return parse_dictionary(fh.read().splitlines())


def sample_dictionary() -> Dictionary:
    """The dictionary bundled with the package."""
    text = resources.files("textsteg.data").joinpath("sample_dictionary.txt").read_text(encoding="utf-8")
    return parse_dictionary(text.splitlines())


def pick_word(
    dictionary: Dictionary,
    length: int,
    initial: str | None = None,
    needs_gloss: bool = False,
    used: set[str] | frozenset[str] = frozenset(),
    rng: random.Random | None = None,
) -> WordEntry:
    """Draw a random word from the matching bucket, avoiding ``used`` if possible.

    When every qualifying word has been used already, one is reused and a
    warning is logged. Raises :class:`EmptyBucket` if nothing qualifies.
    """
    if not MIN_LEN <= length <= MAX_LEN:
        raise ValueError(f"length {length} outside {MIN_LEN}-{MAX_LEN}")
    rng = rng if rng is not None else random.SystemRandom()
    pool = dictionary.bucket(length, initial, needs_gloss)
    if not pool:
        raise EmptyBucket(length, initial, needs_gloss)
    for _ in range(_DRAW_ATTEMPTS):
        e = rng.choice(pool)
        if e.word not in used:
            return e
    fresh = [e for e in pool if e.word not in used]
    if fresh:
        return rng.choice(fresh)
    log.debug("reusing a %d-letter word: bucket exhausted", length)
    return rng.choice(pool)


@dataclass
class CoverageReport:
    method: str
    missing: list[tuple] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.missing

    def lines(self) -> list[str]:
        out = []
        for item in self.missing:
            if self.method == "wordlist":
                length, initial = item
                out.append(f"missing\t{length}\t{initial}")
            else:
                length, kind = item
                out.append(f"missing\t{length}\t{kind}")
        return out


def wordlist_required_buckets() -> set[tuple[int, str]]:
    """Every (length, initial) bucket some byte value needs in the wordlist method."""
    from .wordlist import SENTINEL_BUCKET, unit_bucket

    need = {unit_bucket(n) for n in range(1, 256)}
    need.add(SENTINEL_BUCKET)
    return need


def audit_coverage(dictionary: Dictionary, method: str) -> CoverageReport:
    report = CoverageReport(method)
    if method == "wordlist":
        for b in sorted(wordlist_required_buckets()):
            if not dictionary.bucket(*b):
                report.missing.append(b)
    elif method == "missing-letter":
        for n in LENGTHS:
            if not dictionary.bucket(n):
                report.missing.append((n, "any"))
            if not dictionary.bucket(n, needs_gloss=True):
                report.missing.append((n, "glossed"))
    else:
        raise ValueError(f"unknown method: {method}")
    return report
