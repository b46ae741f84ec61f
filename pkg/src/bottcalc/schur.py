"""GL(n) Schur-functor combinatorics.

Dimensions via the Weyl product formula, Littlewood-Richardson coefficients
by direct enumeration of lattice-word skew tableaux, tensor-product
decompositions, the Cauchy decomposition of Sym^k(E (x) F), and the fixed
degree-two decompositions attached to a Grassmannian in its Pluecker
embedding (quadratic relation space, wedge-square of wedge^r, and the
degree-two socle complement).

Partitions and dominant weights are tuples of ints as in ``weights``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .weights import Weight, add_constant, is_dominant


def gl_dimension(lam: Weight, n: int) -> int:
    """dim of the irreducible GL(n) representation with highest weight lam.

    lam may have negative entries; it is padded with zeros to length n and
    must be weakly decreasing after padding.
    """
    if len(lam) > n:
        raise ValueError(f"weight of length {len(lam)} does not fit in GL({n})")
    w = tuple(lam) + (0,) * (n - len(lam))
    if not is_dominant(w):
        raise ValueError(f"{lam} is not dominant (after zero padding to length {n})")
    dim = Fraction(1)
    for i in range(n):
        for j in range(i + 1, n):
            dim *= Fraction(w[i] - w[j] + j - i, j - i)
    assert dim.denominator == 1
    return int(dim)


def partitions_of(k: int, max_length: int | None = None, max_part: int | None = None):
    """Yield the partitions of k as weakly decreasing tuples."""
    if max_length is None:
        max_length = k
    if max_part is None:
        max_part = k

    def rec(remaining: int, bound: int, slots: int, prefix: tuple[int, ...]):
        if remaining == 0:
            yield prefix
            return
        if slots == 0:
            return
        for part in range(min(bound, remaining), 0, -1):
            yield from rec(remaining - part, part, slots - 1, prefix + (part,))

    if k == 0:
        yield ()
        return
    yield from rec(k, max_part, max_length, ())


def _pad(p: Weight, length: int) -> tuple[int, ...]:
    return tuple(p) + (0,) * (length - len(p))


@lru_cache(maxsize=None)
def littlewood_richardson(lam: Weight, mu: Weight, nu: Weight, strict: bool = False) -> int:
    """The coefficient of S_nu in S_lam (x) S_mu.

    Counts semistandard skew tableaux of shape nu/lam and content mu whose
    reverse reading word (rows top to bottom, each read right to left) is a
    lattice word.  Size mismatches return 0, or raise in strict mode.
    """
    lam, mu, nu = tuple(lam), tuple(mu), tuple(nu)
    for p in (lam, mu, nu):
        if not is_dominant(p) or (p and p[-1] < 0):
            raise ValueError(f"{p} is not a partition")
    if sum(nu) != sum(lam) + sum(mu):
        if strict:
            raise ValueError(f"|nu| = {sum(nu)} != |lam| + |mu| = {sum(lam) + sum(mu)}")
        return 0
    rows = len(nu)
    lam_p = _pad(lam, rows)
    if any(nu[i] < lam_p[i] for i in range(rows)):
        return 0
    if not mu:
        return 1

    # Cells in reverse-reading order: rows top to bottom, right to left.
    cells = [(i, c) for i in range(rows) for c in range(nu[i] - 1, lam_p[i] - 1, -1)]
    nletters = len(mu)
    counts = [0] * (nletters + 1)
    entry: dict[tuple[int, int], int] = {}
    total = 0

    def place(pos: int) -> None:
        nonlocal total
        if pos == len(cells):
            total += 1
            return
        i, c = cells[pos]
        right = entry.get((i, c + 1))
        above = entry.get((i - 1, c)) if i > 0 and c >= lam_p[i - 1] else None
        hi = nletters if right is None else right
        for v in range(1, hi + 1):
            if counts[v] >= mu[v - 1]:
                continue
            if v > 1 and counts[v] >= counts[v - 1]:
                continue
            if above is not None and v <= above:
                continue
            counts[v] += 1
            entry[(i, c)] = v
            place(pos + 1)
            counts[v] -= 1
            del entry[(i, c)]

    place(0)
    return total


@dataclass(frozen=True)
class SchurDecomposition:
    """A multiplicity-graded sum of irreducible GL(n) pieces."""

    n: int
    terms: tuple[tuple[Weight, int], ...]

    def dimension(self) -> int:
        return sum(mult * gl_dimension(w, self.n) for w, mult in self.terms)

    def weights(self) -> tuple[Weight, ...]:
        return tuple(w for w, _ in self.terms)

    def to_jsonable(self) -> list[dict]:
        return [
            {"weight": list(w), "multiplicity": m, "dimension": gl_dimension(w, self.n)}
            for w, m in self.terms
        ]


def _canonical(n: int, terms: dict[Weight, int]) -> SchurDecomposition:
    ordered = tuple(sorted(((w, m) for w, m in terms.items() if m), reverse=True))
    return SchurDecomposition(n, ordered)


def tensor_decompose(lam: Weight, mu: Weight, n: int) -> SchurDecomposition:
    """Decompose S_lam (x) S_mu inside GL(n); lam may have negative entries.

    Negative entries are handled by twisting with a power of the determinant
    before the Littlewood-Richardson count and shifting back afterwards.
    """
    if len(lam) > n:
        raise ValueError(f"lam has {len(lam)} parts, exceeds n = {n}")
    if not is_dominant(lam) or not is_dominant(mu) or (mu and mu[-1] < 0):
        raise ValueError("lam must be dominant and mu a partition")
    lam_full = _pad(lam, n)
    shift = -min(lam_full) if min(lam_full) < 0 else 0
    lam_pos = tuple(x + shift for x in lam_full)
    lam_part = tuple(x for x in lam_pos if x > 0)
    total = sum(lam_pos) + sum(mu)
    out: dict[Weight, int] = {}
    for nu in partitions_of(total, max_length=n):
        c = littlewood_richardson(lam_part, tuple(mu), nu)
        if c:
            out[add_constant(_pad(nu, n), -shift)] = c
    return _canonical(n, out)


def cauchy(k: int, n: int, p: int) -> list[tuple[Weight, Weight]]:
    """Diagonal pairs (lam, lam) in Sym^k of a product of spaces of dims n, p."""
    if k < 0:
        raise ValueError("k must be >= 0")
    return [(lam, lam) for lam in partitions_of(k, max_length=min(n, p))]


def _two_column_weight(r: int, i: int) -> Weight:
    # (2^(r-i), 1^(2i)), the shape with column lengths r+i, r-i.
    return (2,) * (r - i) + (1,) * (2 * i)


def plucker_relation_space(r: int, n: int) -> SchurDecomposition:
    """Degree-two relation space of the Pluecker embedding of G(r, n).

    The kernel of Sym^2(wedge^r E*) -> (degree-two coordinate ring), as a sum
    of S_(2^(r-i), 1^(2i)) E* over even i with 2 <= i <= min(r, n-r).
    """
    _check_grassmannian(r, n)
    terms = {
        _pad(_two_column_weight(r, i), n): 1
        for i in range(2, min(r, n - r) + 1, 2)
    }
    return _canonical(n, terms)


def wedge2_of_wedge_r(r: int, n: int) -> SchurDecomposition:
    """wedge^2(wedge^r E*) as a sum of S_(2^(r-i), 1^(2i)) E* over odd i."""
    _check_grassmannian(r, n)
    terms = {
        _pad(_two_column_weight(r, i), n): 1
        for i in range(1, min(r, n - r) + 1, 2)
    }
    return _canonical(n, terms)


def h0_omega_degree2(r: int, n: int) -> SchurDecomposition:
    """The odd-i summands with i >= 3: wedge2_of_wedge_r minus its i = 1 term.

    Empty exactly when min(r, n-r) < 3, in particular for r = 2 or r = n - 2.
    """
    _check_grassmannian(r, n)
    terms = {
        _pad(_two_column_weight(r, i), n): 1
        for i in range(3, min(r, n - r) + 1, 2)
    }
    return _canonical(n, terms)


def _check_grassmannian(r: int, n: int) -> None:
    if not 1 <= r < n:
        raise ValueError(f"need 1 <= r < n, got r = {r}, n = {n}")
