"""GF(2) linear algebra on rows packed into Python ints (bit j = column j)."""

from __future__ import annotations

from typing import Iterable, Sequence

__all__ = ["rank", "is_independent", "compose", "span"]


def rank(rows: Iterable[int]) -> int:
    """Rank over GF(2) by elimination on the lowest set bit of each pivot."""
    pivots: dict[int, int] = {}  # lowest set bit -> reduced row
    for r in rows:
        while r:
            low = r & -r
            p = pivots.get(low)
            if p is None:
                pivots[low] = r
                break
            r ^= p
    return len(pivots)


def is_independent(vectors: Sequence[int]) -> bool:
    return rank(vectors) == len(vectors)


def compose(outer: Sequence[int], inner: Sequence[int]) -> list[int]:
    """Rows of ``inner`` followed by ``outer``: row r maps to XOR of outer[j] over bits j of inner[r]."""
    out = []
    for r in inner:
        acc = 0
        while r:
            low = r & -r
            acc ^= outer[low.bit_length() - 1]
            r ^= low
        out.append(acc)
    return out


def span(vectors: Iterable[int]) -> frozenset[int]:
    s = {0}
    for v in vectors:
        if v not in s:
            s |= {x ^ v for x in s}
    return frozenset(s)
