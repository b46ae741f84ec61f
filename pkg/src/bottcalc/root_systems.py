"""Root data for the classical families A, B, C, D.

Roots and weights live in an orthogonal epsilon-coordinate space (dimension
rank for B/C/D, rank+1 for A) with the standard conventions:

  A_n : e_i - e_j                      (i < j <= n+1)
  B_n : e_i +- e_j (i < j), e_i        (alpha_n = e_n short)
  C_n : e_i +- e_j (i < j), 2 e_i      (alpha_n = 2 e_n long)
  D_n : e_i +- e_j (i < j)             (alpha_n = e_(n-1) + e_n)

Every positive root also carries its coordinates in the simple-root basis;
the two descriptions are cross-checked at construction time.  Weights are
given in fundamental-weight coordinates (integer tuples); the pairing with a
coroot is computed in epsilon coordinates, so no Cartan-matrix inversion is
ever trusted blindly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Optional

Eps = tuple[Fraction, ...]


@dataclass(frozen=True)
class Root:
    simple: tuple[int, ...]  # coordinates in the simple-root basis
    eps: tuple[int, ...]     # epsilon coordinates (integral for all roots here)

    def __str__(self) -> str:
        return render_root(self.simple)


@dataclass(frozen=True)
class RootSystem:
    family: str  # one of "A", "B", "C", "D"
    rank: int

    def __post_init__(self) -> None:
        if self.family not in "ABCD":
            raise ValueError(f"unknown family {self.family!r}")
        min_rank = {"A": 1, "B": 2, "C": 2, "D": 3}[self.family]
        if self.rank < min_rank:
            raise ValueError(f"{self.family}_{self.rank} is not supported (rank too small)")

    @property
    def eps_dim(self) -> int:
        return self.rank + 1 if self.family == "A" else self.rank


def _unit(dim: int, i: int, value: int = 1) -> tuple[int, ...]:
    v = [0] * dim
    v[i] = value
    return tuple(v)


def _evec(dim: int, coeffs: dict[int, int]) -> tuple[int, ...]:
    v = [0] * dim
    for i, c in coeffs.items():
        v[i] = c
    return tuple(v)


@lru_cache(maxsize=None)
def simple_roots(rs: RootSystem) -> tuple[Root, ...]:
    n, d = rs.rank, rs.eps_dim
    roots = []
    for i in range(n - 1):
        roots.append(_evec(d, {i: 1, i + 1: -1}))
    if rs.family == "A":
        roots.append(_evec(d, {n - 1: 1, n: -1}))
    elif rs.family == "B":
        roots.append(_unit(d, n - 1))
    elif rs.family == "C":
        roots.append(_unit(d, n - 1, 2))
    else:
        roots.append(_evec(d, {n - 2: 1, n - 1: 1}))
    return tuple(
        Root(simple=_unit(n, i), eps=eps) for i, eps in enumerate(roots)
    )


@lru_cache(maxsize=None)
def positive_roots(rs: RootSystem) -> tuple[Root, ...]:
    """All positive roots, ordered lexicographically by simple coordinates."""
    n, d = rs.rank, rs.eps_dim
    fam = rs.family
    out: list[Root] = []

    def rng(i: int, j: int) -> dict[int, int]:
        return {k: 1 for k in range(i, j)}

    if fam == "A":
        for i in range(n + 1):
            for j in range(i + 1, n + 1):
                out.append(Root(_evec(n, rng(i, j)), _evec(d, {i: 1, j: -1})))
    elif fam == "B":
        for i in range(n):
            for j in range(i + 1, n):
                out.append(Root(_evec(n, rng(i, j)), _evec(d, {i: 1, j: -1})))
            out.append(Root(_evec(n, rng(i, n)), _unit(d, i)))
            for j in range(i + 1, n):
                simple = {k: 1 for k in range(i, j)}
                simple.update({k: 2 for k in range(j, n)})
                out.append(Root(_evec(n, simple), _evec(d, {i: 1, j: 1})))
    elif fam == "C":
        for i in range(n):
            for j in range(i + 1, n):
                out.append(Root(_evec(n, rng(i, j)), _evec(d, {i: 1, j: -1})))
            for j in range(i + 1, n):
                if j == n - 1:
                    simple = {k: 1 for k in range(i, n)}
                else:
                    simple = {k: 1 for k in range(i, j)}
                    simple.update({k: 2 for k in range(j, n - 1)})
                    simple[n - 1] = 1
                out.append(Root(_evec(n, simple), _evec(d, {i: 1, j: 1})))
            simple = {k: 2 for k in range(i, n - 1)}
            simple[n - 1] = 1
            out.append(Root(_evec(n, simple), _unit(d, i, 2)))
    else:  # D
        for i in range(n):
            for j in range(i + 1, n):
                out.append(Root(_evec(n, rng(i, j)), _evec(d, {i: 1, j: -1})))
            for j in range(i + 1, n):
                if j == n - 1:
                    simple = {k: 1 for k in range(i, n - 2)}
                    simple[n - 1] = 1
                elif j == n - 2:
                    simple = {k: 1 for k in range(i, n - 2)}
                    simple[n - 2] = 1
                    simple[n - 1] = 1
                else:
                    simple = {k: 1 for k in range(i, j)}
                    simple.update({k: 2 for k in range(j, n - 2)})
                    simple[n - 2] = 1
                    simple[n - 1] = 1
                out.append(Root(_evec(n, simple), _evec(d, {i: 1, j: 1})))

    _validate(rs, out)
    return tuple(sorted(out, key=lambda root: root.simple))


def _validate(rs: RootSystem, roots: list[Root]) -> None:
    n = rs.rank
    expected = {"A": n * (n + 1) // 2, "B": n * n, "C": n * n, "D": n * (n - 1)}[rs.family]
    assert len(roots) == len(set(r.eps for r in roots)) == expected
    simples = simple_roots(rs)
    for root in roots:
        combo = [0] * rs.eps_dim
        for coeff, simple in zip(root.simple, simples):
            for k in range(rs.eps_dim):
                combo[k] += coeff * simple.eps[k]
        assert tuple(combo) == root.eps, f"inconsistent coordinates for {root}"


@lru_cache(maxsize=None)
def fundamental_weights(rs: RootSystem) -> tuple[Eps, ...]:
    """Epsilon coordinates of the fundamental weights delta_1..delta_rank."""
    n, d = rs.rank, rs.eps_dim
    half = Fraction(1, 2)
    out: list[Eps] = []
    if rs.family == "A":
        for j in range(1, n + 1):
            frac = Fraction(j, n + 1)
            out.append(tuple(Fraction(1) - frac if i < j else -frac for i in range(d)))
    elif rs.family == "B":
        for j in range(1, n):
            out.append(tuple(Fraction(int(i < j)) for i in range(n)))
        out.append(tuple(half for _ in range(n)))
    elif rs.family == "C":
        for j in range(1, n + 1):
            out.append(tuple(Fraction(int(i < j)) for i in range(n)))
    else:
        for j in range(1, n - 1):
            out.append(tuple(Fraction(int(i < j)) for i in range(n)))
        out.append(tuple([half] * (n - 1) + [-half]))
        out.append(tuple(half for _ in range(n)))
    for j, delta in enumerate(out):
        for i, alpha in enumerate(simple_roots(rs)):
            assert _coroot_pair(delta, alpha) == (1 if i == j else 0)
    return tuple(out)


def weight_to_eps(rs: RootSystem, coords: tuple[int, ...]) -> Eps:
    if len(coords) != rs.rank:
        raise ValueError(f"expected {rs.rank} fundamental coordinates, got {len(coords)}")
    deltas = fundamental_weights(rs)
    return tuple(
        sum((c * delta[k] for c, delta in zip(coords, deltas)), Fraction(0))
        for k in range(rs.eps_dim)
    )


def _coroot_pair(v: Eps, root: Root) -> Fraction:
    dot = sum((a * b for a, b in zip(v, root.eps)), Fraction(0))
    norm = sum(b * b for b in root.eps)
    return 2 * dot / norm


def pairing(rs: RootSystem, root: Root, gamma: tuple[int, ...]) -> int:
    """Coroot pairing <gamma, root^vee> for gamma in fundamental coordinates."""
    if root not in positive_roots(rs):
        raise ValueError(f"{root} is not a positive root of {rs.family}_{rs.rank}")
    return pairing_eps(weight_to_eps(rs, gamma), root)


def pairing_eps(gamma_eps: Eps, root: Root) -> int:
    value = _coroot_pair(gamma_eps, root)
    if value.denominator != 1:
        raise ValueError(f"non-integral pairing {value} (weight not integral?)")
    return int(value)


def coefficient_pairing(root: Root, gamma: tuple[int, ...]) -> int:
    """Contract the root's simple-root coefficients with fundamental coordinates.

    This is <gamma, sum_i c_i alpha_i^vee> for root = sum_i c_i alpha_i.  It
    agrees with pairing() exactly when all simple roots occurring in the root
    have the same length as the root itself (always, in simply laced types).
    The bundled reference tables are recorded in this convention.
    """
    return sum(c * g for c, g in zip(root.simple, gamma))


def roots_through(rs: RootSystem, r: int) -> tuple[Root, ...]:
    """Positive roots whose alpha_r coefficient is nonzero (1-based r)."""
    if not 1 <= r <= rs.rank:
        raise ValueError(f"index {r} out of range for rank {rs.rank}")
    return tuple(root for root in positive_roots(rs) if root.simple[r - 1] != 0)


def index_and_singularity(rs: RootSystem, gamma: tuple[int, ...]) -> Optional[int]:
    """None when some positive root pairs to zero, else the number pairing < 0."""
    return index_of_eps(rs, weight_to_eps(rs, gamma))


def index_of_eps(rs: RootSystem, gamma_eps: Eps) -> Optional[int]:
    index = 0
    for root in positive_roots(rs):
        value = _coroot_pair(gamma_eps, root)
        if value == 0:
            return None
        if value < 0:
            index += 1
    return index


def weyl_dimension(rs: RootSystem, lam: tuple[int, ...]) -> int:
    """Dimension of the irreducible representation with highest weight lam.

    lam is given in fundamental coordinates and must be dominant, i.e. all
    coordinates >= 0.  Computed as the product over positive roots of
    <lam + rho, a^vee> / <rho, a^vee>.
    """
    if len(lam) != rs.rank:
        raise ValueError(f"expected {rs.rank} coordinates, got {len(lam)}")
    if any(c < 0 for c in lam):
        raise ValueError(f"{lam} is not dominant")
    lam_rho = weight_to_eps(rs, tuple(c + 1 for c in lam))
    rho = weight_to_eps(rs, (1,) * rs.rank)
    dim = Fraction(1)
    for root in positive_roots(rs):
        dim *= _coroot_pair(lam_rho, root) / _coroot_pair(rho, root)
    assert dim.denominator == 1
    return int(dim)


def render_root(simple: tuple[int, ...]) -> str:
    """Render simple-root coordinates as e.g. "a1+2a2+a3"."""
    parts = []
    for i, c in enumerate(simple, start=1):
        if c == 0:
            continue
        parts.append(f"a{i}" if c == 1 else f"{c}a{i}")
    return "+".join(parts) if parts else "0"
