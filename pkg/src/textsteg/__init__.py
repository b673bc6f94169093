"""Text steganography: one-time-pad scrambling plus three word-based hiding methods."""

from . import metrics, missing_letter, otp, paragraph, wordlist
from .bundle import EmbedStats, StegoBundle
from .dictionary import Dictionary, WordEntry, load_dictionary, pick_word, sample_dictionary
from .errors import (
    BadBitCount,
    CoverTooShort,
    EmptyBucket,
    KeyMismatch,
    LengthMismatch,
    LineCountMismatch,
    MalformedStego,
    ParseError,
    StegoError,
    ZeroCover,
)

__version__ = "0.1.0"
