"""Exact sparse linear algebra over the rationals (and optionally mod p).

Vectors are dicts mapping hashable column keys to nonzero integers; row
operations are fraction-free (cross-multiplied and gcd-reduced), so every
intermediate entry stays an exact integer.  Ranks are therefore certified,
not probabilistic.  A two-prime modular mode exists as a fast path; callers
must promote to exact arithmetic if the primes ever disagree.
"""

from __future__ import annotations

from math import gcd
from typing import Hashable, Iterable, Optional

Vector = dict[Hashable, int]

_PRIMES = (2_305_843_009_213_693_951, 4_611_686_018_427_387_847)


def _normalize(row: Vector) -> Vector:
    g = 0
    for v in row.values():
        g = gcd(g, v)
        if g == 1:
            return row
    if g > 1:
        return {k: v // g for k, v in row.items()}
    return row


def _eliminate(row: Vector, pivots: dict[Hashable, Vector], modulus: Optional[int]) -> Vector:
    """Reduce row against the pivot rows; returns the (possibly empty) residue."""
    row = dict(row)
    while row:
        hit = None
        for key in row:
            if key in pivots:
                hit = key
                break
        if hit is None:
            break
        piv = pivots[hit]
        a, b = piv[hit], row[hit]
        if modulus is None:
            new: Vector = {}
            for k, v in row.items():
                new[k] = v * a
            for k, v in piv.items():
                new[k] = new.get(k, 0) - v * b
            row = _normalize({k: v for k, v in new.items() if v})
        else:
            factor = (b * pow(a, -1, modulus)) % modulus
            new = dict(row)
            for k, v in piv.items():
                val = (new.get(k, 0) - factor * v) % modulus
                if val:
                    new[k] = val
                else:
                    new.pop(k, None)
            row = new
    return row


class Eliminator:
    """Incremental row reduction; feeds rows, tracks rank and pivot rows."""

    def __init__(self, modulus: Optional[int] = None):
        self.pivots: dict[Hashable, Vector] = {}
        self.modulus = modulus

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def add(self, row: Vector) -> bool:
        """Insert a row; True if it increased the rank."""
        if self.modulus is not None:
            row = {k: v % self.modulus for k, v in row.items() if v % self.modulus}
        residue = _eliminate(row, self.pivots, self.modulus)
        if not residue:
            return False
        # pivot on the sparsest-reachable key: min key keeps things canonical
        key = min(residue)
        self.pivots[key] = residue
        return True

    def reduce(self, row: Vector) -> Vector:
        return _eliminate(row, self.pivots, self.modulus)


def rank_of_rows(rows: Iterable[Vector], modulus: Optional[int] = None) -> int:
    elim = Eliminator(modulus)
    for row in rows:
        elim.add(row)
    return elim.rank


def rank_two_prime(rows: list[Vector]) -> int:
    """Modular fast path: equal ranks mod two large primes, else exact rerun."""
    r0 = rank_of_rows(rows, _PRIMES[0])
    r1 = rank_of_rows(rows, _PRIMES[1])
    if r0 == r1:
        return r0
    return rank_of_rows(rows)


def kernel_of_rows(rows: list[Vector]) -> list[dict[int, int]]:
    """Basis of the left kernel: combinations sum_i c_i rows[i] = 0.

    Returned as dicts {row index: integer coefficient}, gcd-reduced.
    """
    elim = Eliminator()
    kernel: list[dict[int, int]] = []
    tracked: dict[Hashable, Vector] = {}
    for i, row in enumerate(rows):
        # carry bookkeeping keys ("#", i) alongside the data keys
        aug = dict(row)
        aug[("#", i)] = 1
        residue = _eliminate(aug, tracked, None)
        data = {k: v for k, v in residue.items() if not _is_marker(k)}
        combo = {k[1]: v for k, v in residue.items() if _is_marker(k)}
        if data:
            tracked[min(data)] = residue
        else:
            kernel.append(_normalize(combo))
    return kernel


def _is_marker(key: Hashable) -> bool:
    return isinstance(key, tuple) and len(key) == 2 and key[0] == "#"


def independent_subset(rows: list[Vector]) -> list[int]:
    """Indices of a greedy maximal linearly independent subset."""
    elim = Eliminator()
    keep = []
    for i, row in enumerate(rows):
        if elim.add(row):
            keep.append(i)
    return keep


class SpanSolver:
    """Express vectors as rational combinations of a fixed independent basis."""

    def __init__(self, basis_rows: list[Vector]):
        self.tracked: dict[Hashable, Vector] = {}
        for i, row in enumerate(basis_rows):
            aug = dict(row)
            aug[("#", i)] = 1
            residue = _eliminate(aug, self.tracked, None)
            data = {k: v for k, v in residue.items() if not _is_marker(k)}
            if not data:
                raise ValueError("basis rows are linearly dependent")
            self.tracked[min(data)] = residue

    def coefficients(self, target: Vector) -> Optional[dict[int, tuple[int, int]]]:
        """{index: (num, den)} with den > 0, or None when outside the span."""
        aug = dict(target)
        aug[("#", -1)] = 1
        residue = _eliminate(aug, self.tracked, None)
        if any(not _is_marker(k) for k in residue):
            return None
        scale = residue[("#", -1)]
        out = {}
        for k, v in residue.items():
            if _is_marker(k) and k[1] >= 0:
                num, den = -v, scale
                if den < 0:
                    num, den = -num, -den
                g = gcd(abs(num), den)
                if g:
                    num, den = num // g, den // g
                out[k[1]] = (num, den)
        return out


def in_span_coefficients(basis_rows: list[Vector], target: Vector) -> Optional[dict[int, tuple[int, int]]]:
    return SpanSolver(basis_rows).coefficients(target)
