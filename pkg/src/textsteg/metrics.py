"""Capacity ratio and Jaro / Jaro-Winkler similarity."""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import LineCountMismatch, ZeroCover


def capacity_percent(hidden_bytes: int, cover_bytes: int) -> float:
    if cover_bytes <= 0:
        raise ZeroCover(cover_bytes)
    if hidden_bytes < 0:
        raise ValueError(f"hidden byte count must be non-negative, got {hidden_bytes}")
    return 100.0 * hidden_bytes / cover_bytes


@dataclass
class CapacityReport:
    hidden_bytes: int
    cover_bytes: int
    percent: float = field(init=False)

    def __post_init__(self):
        self.percent = capacity_percent(self.hidden_bytes, self.cover_bytes)


@dataclass(frozen=True)
class SimilarityParams:
    prefix_scale: float = 0.1
    max_prefix: int = 4

    def __post_init__(self):
        if not 0 <= self.prefix_scale <= 0.25:
            raise ValueError(f"prefix_scale must lie in [0, 0.25], got {self.prefix_scale}")
        if self.max_prefix < 0:
            raise ValueError(f"max_prefix must be non-negative, got {self.max_prefix}")
        if self.prefix_scale * self.max_prefix > 1:
            raise ValueError("prefix_scale * max_prefix must not exceed 1")


DEFAULT_PARAMS = SimilarityParams()


def match_counts(s1: str, s2: str) -> tuple[int, float]:
    """Return (matching characters, transpositions) as used by :func:`jaro`.

    Characters match when equal and at most ``max(len) // 2 - 1`` positions
    apart; each character of ``s1`` claims the first free match in ``s2``.
    Transpositions are half the number of out-of-order matched characters.
    """
    n1, n2 = len(s1), len(s2)
    window = max(0, max(n1, n2) // 2 - 1)
    taken = [False] * n2
    matched1 = []
    for i, ch in enumerate(s1):
        for j in range(max(0, i - window), min(n2, i + window + 1)):
            if not taken[j] and s2[j] == ch:
                taken[j] = True
                matched1.append(ch)
                break
    matched2 = [s2[j] for j in range(n2) if taken[j]]
    return len(matched1), sum(a != b for a, b in zip(matched1, matched2)) / 2


def jaro(s1: str, s2: str) -> float:
    if s1 == s2:
        return 1.0
    n1, n2 = len(s1), len(s2)
    if not n1 or not n2:
        return 0.0
    m, t = match_counts(s1, s2)
    if m == 0:
        return 0.0
    return (m / n1 + m / n2 + (m - t) / m) / 3


def common_prefix(s1: str, s2: str, limit: int) -> int:
    n = 0
    for a, b in zip(s1[:limit], s2[:limit]):
        if a != b:
            break
        n += 1
    return n


def jaro_winkler(s1: str, s2: str, params: SimilarityParams = DEFAULT_PARAMS) -> float:
    j = jaro(s1, s2)
    prefix = common_prefix(s1, s2, params.max_prefix)
    return j + prefix * params.prefix_scale * (1 - j)


@dataclass
class SimilarityReport:
    per_pair: list[tuple[int, float]]

    @property
    def average(self) -> float:
        if not self.per_pair:
            return 1.0
        return sum(score for _, score in self.per_pair) / len(self.per_pair)

    def format(self) -> str:
        rows = [f"{i}\t{score:.4f}" for i, score in self.per_pair]
        rows.append(f"average\t{self.average:.2f}")
        return "\n".join(rows) + "\n"


def stego_similarity_report(
    cover: str, stego: str, params: SimilarityParams = DEFAULT_PARAMS
) -> SimilarityReport:
    """Score cover and stego line by line; hint text on stego lines is kept."""
    c_lines = cover.splitlines()
    s_lines = stego.splitlines()
    if len(c_lines) != len(s_lines):
        raise LineCountMismatch(len(c_lines), len(s_lines))
    return SimilarityReport(
        [(i, jaro_winkler(c, s, params)) for i, (c, s) in enumerate(zip(c_lines, s_lines), start=1)]
    )
