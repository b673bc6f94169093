"""Capacity and similarity benchmark over fixed sample messages."""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from . import missing_letter, paragraph, wordlist
from .dictionary import Dictionary
from .metrics import capacity_percent, stego_similarity_report
from .otp import encipher

# Embedded-data samples for the capacity table. Byte sizes are
# 3, 6, 12, 24, 50, 63, 100, 202, 349 and 508.
CAPACITY_SAMPLES = (
    "Ego",
    "Minute",
    "Hello World!",
    "Failure is never final !",
    "Smile is an inexpensive way to improve your looks.",
    "Its not the load that breaks you down, its the way you carry it",
    "Don't find hundred reasons why you can't do a thing, but just find one reason why you can and do it.",
    "Tide recedes and leaves behind bright sea shells on sand\r\n"
    "Sun sets but its warmth lingers on land\r\n"
    "Music stops and its echoes on in sweet refrains\r\n"
    "For every joy that passes, something beautiful remains",
    "Steganography is not a new area. It dates back to 5th century BC. Harpagus used hare to send his "
    "message by killing it and hiding the message inside its belly. A person disguised as hunter carried "
    "the hare to the destination. Another incident was of King Darius of Susa. Histiaeus was assigned the "
    "duty of shaving the head of his most trusted slave.",
    "Steganography is not a new area. It dates back to 5th century BC. Harpagus used hare to send his "
    "message by killing it and hiding the message inside its belly. A person disguised as hunter carried "
    "the hare to the destination. Another incident was of King Darius of Susa. Histiaeus, prisoner of "
    "Darius, was assigned the duty of shaving the head of his most trusted slave and then the message was "
    "tattooed on his shaved scalp. After some time, when the hairs of the slave grew back, his head was "
    "shaved again.\n",
)
CAPACITY_SIZES = (3, 6, 12, 24, 50, 63, 100, 202, 349, 508)

# Short samples used for the missing-letter similarity table.
SIMILARITY_SAMPLES = (
    "A",
    "try",
    "smile",
    "silence",
    "Happiness",
    "possibility",
    "Steganography",
    "glimmer of hope",
    "the art of living",
    "outstanding success",
)

METHODS = ("missing-letter", "wordlist", "paragraph")

# Reference average capacities, shown for comparison only; not recomputed.
REPORTED_OWN = {"missing-letter": 7.833, "wordlist": 7.898, "paragraph": 2.075}
REPORTED_EXTERNAL = {
    "White Steg": 1.874,
    "SMS Texting": 1.71,
    "Feature Coding": 1.479,
    "Word Map": 1.464,
    "Spam Text": 1.164,
    "Word Shift": 1.03,
}
REPORTED_JARO_AVERAGE = 0.95


@dataclass
class BenchResult:
    capacity: dict[str, list[float]] = field(default_factory=dict)
    jaro: list[float] = field(default_factory=list)
    identity: dict[str, bool] = field(default_factory=dict)

    def average_capacity(self, method: str) -> float:
        row = self.capacity[method]
        return sum(row) / len(row)

    @property
    def average_jaro(self) -> float:
        return sum(self.jaro) / len(self.jaro)


def _rng(seed: int | None, *parts) -> random.Random:
    if seed is None:
        return random.SystemRandom()
    return random.Random(":".join(str(p) for p in (seed, *parts)))


def hide_with(method: str, cipher, dictionary: Dictionary, cover: str, rng: random.Random):
    if method == "missing-letter":
        return missing_letter.hide(cipher, dictionary, rng)
    if method == "wordlist":
        return wordlist.hide(cipher, dictionary, rng)
    if method == "paragraph":
        return paragraph.hide(cipher, cover)
    raise ValueError(f"unknown method: {method}")


def run_bench(dictionary: Dictionary, cover: str, seed: int | None = None) -> BenchResult:
    result = BenchResult()
    for method in METHODS:
        row = []
        identical = True
        for i, text in enumerate(CAPACITY_SAMPLES):
            cipher, _ = encipher(text.encode("utf-8"), _rng(seed, "otp", i))
            bundle = hide_with(method, cipher, dictionary, cover, _rng(seed, method, i))
            row.append(capacity_percent(bundle.stats.hidden_bytes, bundle.stats.cover_bytes))
            identical &= bundle.stego_text == bundle.cover_text
        result.capacity[method] = row
        result.identity[method] = identical
    for i, text in enumerate(SIMILARITY_SAMPLES):
        cipher, _ = encipher(text.encode("utf-8"), _rng(seed, "otp-sim", i))
        bundle = missing_letter.hide(cipher, dictionary, _rng(seed, "sim", i))
        result.jaro.append(stego_similarity_report(bundle.cover_text, bundle.stego_text).average)
    return result


def _table(header: list[str], rows: list[list[str]], fmt: str) -> list[str]:
    if fmt == "md":
        out = ["| " + " | ".join(header) + " |", "|" + "---|" * len(header)]
        out += ["| " + " | ".join(r) + " |" for r in rows]
        return out
    return ["\t".join(header)] + ["\t".join(r) for r in rows]


def format_result(result: BenchResult, fmt: str = "tsv") -> str:
    numerals = ["I", "II", "III", "IV", "V", "VI", "VII", "VIII", "IX", "X"]
    lines = ["Percentage capacity per sample"]
    lines += _table(
        ["method"] + numerals,
        [[m] + [f"{v:.2f}" for v in result.capacity[m]] for m in METHODS],
        fmt,
    )
    lines += ["", "Average percentage capacity (external methods: reported, not recomputed)"]
    ext = list(REPORTED_EXTERNAL)
    lines += _table(
        ["row"] + list(METHODS) + ext,
        [
            ["measured"] + [f"{result.average_capacity(m):.3f}" for m in METHODS] + ["-"] * len(ext),
            ["reported"] + [f"{REPORTED_OWN[m]:.3f}" for m in METHODS] + [f"{REPORTED_EXTERNAL[e]}" for e in ext],
        ],
        fmt,
    )
    lines += ["", "Missing-letter Jaro-Winkler score per sample"]
    lines += _table(
        ["samples"] + numerals + ["average"],
        [["score"] + [f"{v:.3f}" for v in result.jaro] + [f"{result.average_jaro:.3f}"]],
        fmt,
    )
    lines += ["", "Cover/stego byte identity"]
    lines += _table(["method", "identical"], [[m, str(v).lower()] for m, v in result.identity.items()], fmt)
    return "\n".join(lines) + "\n"
