"""Integer weight tuples and the combinatorics of the staircase sort.

A weight is a plain tuple of ints of some fixed length n.  Dominant means
weakly decreasing.  Trailing zeros are significant: weights are fixed-length
tuples, and only the display helper may trim them.

The exponent string format is ``"2,1^3,0^2"``: comma-separated terms, each a
value ``v`` or ``v^k`` meaning v repeated k times.  Whitespace is ignored and
negative values are allowed.
"""

from __future__ import annotations

from typing import NamedTuple, Optional

Weight = tuple[int, ...]


class SortResult(NamedTuple):
    sorted: Weight
    swaps: int
    has_repeats: bool


def staircase(n: int) -> Weight:
    """Return (n-1, n-2, ..., 1, 0)."""
    if n < 1:
        raise ValueError(f"staircase needs n >= 1, got {n}")
    return tuple(range(n - 1, -1, -1))


def is_dominant(w: Weight) -> bool:
    return all(a >= b for a, b in zip(w, w[1:]))


def sort_with_inversions(w: Weight) -> SortResult:
    """Sort into non-increasing order, counting the adjacent swaps needed.

    ``swaps`` is the number of pairs (i, j) with i < j and w[i] < w[j],
    which is exactly the number of adjacent transpositions a bubble sort
    performs to reach non-increasing order.  Equal entries are never swapped.
    """
    swaps = sum(1 for i in range(len(w)) for j in range(i + 1, len(w)) if w[i] < w[j])
    srt = tuple(sorted(w, reverse=True))
    has_repeats = len(set(w)) < len(w)
    return SortResult(srt, swaps, has_repeats)


def tilde(gamma: Weight, n: int) -> Optional[Weight]:
    """sort(gamma + staircase) - staircase, or None when the sum has repeats."""
    if len(gamma) != n:
        raise ValueError(f"weight has length {len(gamma)}, expected {n}")
    delta = staircase(n)
    shifted = add(gamma, delta)
    res = sort_with_inversions(shifted)
    if res.has_repeats:
        return None
    return tuple(a - b for a, b in zip(res.sorted, delta))


def add(w1: Weight, w2: Weight) -> Weight:
    if len(w1) != len(w2):
        raise ValueError(f"length mismatch: {len(w1)} vs {len(w2)}")
    return tuple(a + b for a, b in zip(w1, w2))


def concat(w1: Weight, w2: Weight) -> Weight:
    return tuple(w1) + tuple(w2)


def negate_reverse(w: Weight) -> Weight:
    """(w_1, ..., w_k) -> (-w_k, ..., -w_1), the dual-weight involution."""
    return tuple(-a for a in reversed(w))


def add_constant(w: Weight, c: int) -> Weight:
    return tuple(a + c for a in w)


def parse_weight(s: str) -> Weight:
    """Parse exponent notation, e.g. "2,1^3,0^2" -> (2, 1, 1, 1, 0, 0)."""
    text = "".join(s.split())
    if not text:
        raise ValueError("empty weight string")
    out: list[int] = []
    for term in text.split(","):
        if not term:
            raise ValueError(f"empty term in weight string {s!r}")
        if "^" in term:
            value_s, _, count_s = term.partition("^")
            value, count = int(value_s), int(count_s)
            if count < 1:
                raise ValueError(f"exponent must be >= 1 in {term!r}")
        else:
            value, count = int(term), 1
        out.extend([value] * count)
    return tuple(out)


def render_weight(w: Weight, trim_trailing_zeros: bool = False) -> str:
    """Render in exponent notation; inverse of parse_weight when not trimmed."""
    entries = list(w)
    if trim_trailing_zeros:
        while len(entries) > 1 and entries[-1] == 0:
            entries.pop()
    if not entries:
        raise ValueError("cannot render an empty weight")
    parts: list[str] = []
    i = 0
    while i < len(entries):
        j = i
        while j < len(entries) and entries[j] == entries[i]:
            j += 1
        run = j - i
        parts.append(f"{entries[i]}^{run}" if run > 1 else f"{entries[i]}")
        i = j
    return ",".join(parts)
