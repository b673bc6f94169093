"""Independent reference implementations used to freeze expected values.

These are written from the definitions, not from the package code, and are
deliberately slow and literal.
"""

from fractions import Fraction


def digit_square_sum(r):
    total = 0
    while r:
        r, d = divmod(r, 10)
        total += d * d
    return total


def scramble(n, r):
    s = digit_square_sum(r)
    x, y = s // 10, s % 10
    return (n - x * y + r) % 256


def unscramble(e, r):
    s = digit_square_sum(r)
    x, y = s // 10, s % 10
    return (e - r + x * y) % 256


def jaro_parts(a, b):
    """Brute-force (m, 2t) for the Jaro definition."""
    limit = max(max(len(a), len(b)) // 2 - 1, 0)
    claimed = set()
    pairs = []
    for i in range(len(a)):
        candidates = [j for j in range(len(b)) if abs(i - j) <= limit and j not in claimed and b[j] == a[i]]
        if candidates:
            j = min(candidates)
            claimed.add(j)
            pairs.append((i, j))
    seq_a = [a[i] for i, _ in pairs]
    seq_b = [b[j] for j in sorted(claimed)]
    half_t2 = 0
    for x, y in zip(seq_a, seq_b):
        if x != y:
            half_t2 += 1
    return len(pairs), half_t2


def jaro(a, b):
    if a == b:
        return Fraction(1)
    m, t2 = jaro_parts(a, b)
    if m == 0:
        return Fraction(0)
    t = Fraction(t2, 2)
    return (Fraction(m, len(a)) + Fraction(m, len(b)) + (m - t) / m) / 3


def jaro_winkler(a, b, p=Fraction(1, 10), max_prefix=4):
    j = jaro(a, b)
    prefix = 0
    while prefix < min(len(a), len(b), max_prefix) and a[prefix] == b[prefix]:
        prefix += 1
    return j + prefix * p * (1 - j)
