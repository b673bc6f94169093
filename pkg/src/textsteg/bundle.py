from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class EmbedStats:
    hidden_bytes: int
    cover_bytes: int
    words_used: int
    reuse_warnings: int = 0

    @property
    def capacity_percent(self) -> float | None:
        if self.cover_bytes <= 0:
            return None
        return 100.0 * self.hidden_bytes / self.cover_bytes


@dataclass
class StegoBundle:
    """Result of a hide call.

    ``stego_key`` is a list of ints for the word-list methods and a string of
    letters for the paragraph method. ``cover_text`` is the text the stego
    file should be compared against when measuring degradation.
    """

    method: str
    stego_text: str
    stego_key: list[int] | str
    stats: EmbedStats
    cover_text: str = field(default="", repr=False)
