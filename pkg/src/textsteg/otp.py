"""One-time-pad scrambling of message bytes.

Each byte ``n`` is combined with a random key unit ``r``::

    s = sum of squared decimal digits of r
    e = (n - (s // 10) * (s % 10) + r) mod 256

Key units come from a 1000-slot pool of random bytes; every draw picks a
random slot and refills it. Reducing modulo 256 keeps cipher units inside a
byte so the hide methods can rely on three-digit values.
"""

from __future__ import annotations

import random
from collections.abc import Iterable, Sequence

from .errors import LengthMismatch

POOL_SIZE = 1000


def digit_square_sum(r: int) -> int:
    if not 0 <= r <= 255:
        raise ValueError(f"key unit out of range: {r}")
    return sum(int(d) ** 2 for d in str(r))


def _offset(r: int) -> int:
    s = digit_square_sum(r)
    return (s // 10) * (s % 10)


def encipher(
    message: bytes | Iterable[int], rng: random.Random | None = None
) -> tuple[list[int], list[int]]:
    """Scramble ``message`` and return ``(cipher, key)``, both as lists of ints.

    ``rng`` defaults to the OS entropy source; pass a seeded
    ``random.Random`` for reproducible output.
    """
    rng = rng if rng is not None else random.SystemRandom()
    data = bytes(message)
    if not data:
        return [], []
    pool = [rng.randrange(256) for _ in range(POOL_SIZE)]
    cipher: list[int] = []
    key: list[int] = []
    for n in data:
        i = rng.randrange(POOL_SIZE)
        r = pool[i]
        pool[i] = rng.randrange(256)
        key.append(r)
        cipher.append((n - _offset(r) + r) % 256)
    return cipher, key


def decipher(cipher: Sequence[int], key: Sequence[int]) -> bytes:
    if len(cipher) != len(key):
        raise LengthMismatch(len(cipher), len(key))
    out = bytearray()
    for e, r in zip(cipher, key):
        if not 0 <= e <= 255:
            raise ValueError(f"cipher unit out of range: {e}")
        out.append((e - r + _offset(r)) % 256)
    return bytes(out)
