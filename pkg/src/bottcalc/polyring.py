"""Polynomial functions on generic n x r matrices, with torus bidegrees.

Monomials are exponent tuples of length n*r over the variables x[i][j]
(row i in [0, n), column j in [0, r)); polynomials are dicts from monomial
to nonzero integer coefficient.  Every monomial carries two multidegrees:
row degrees (a length-n tuple, the GL(E) torus weight) and column degrees
(length r, the GL(W) torus weight).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, permutations

Monomial = tuple[int, ...]
Poly = dict[Monomial, int]


@dataclass(frozen=True)
class MatrixRing:
    n: int
    r: int

    def var(self, i: int, j: int) -> int:
        return i * self.r + j

    def one(self) -> Monomial:
        return (0,) * (self.n * self.r)

    def monomial(self, *vars_: int) -> Monomial:
        m = [0] * (self.n * self.r)
        for v in vars_:
            m[v] += 1
        return tuple(m)

    def mono_mul(self, a: Monomial, b: Monomial) -> Monomial:
        return tuple(x + y for x, y in zip(a, b))

    def mul(self, p: Poly, q: Poly) -> Poly:
        out: Poly = {}
        for ma, ca in p.items():
            for mb, cb in q.items():
                key = self.mono_mul(ma, mb)
                val = out.get(key, 0) + ca * cb
                if val:
                    out[key] = val
                else:
                    out.pop(key, None)
        return out

    def mul_many(self, polys: list[Poly]) -> Poly:
        out: Poly = {self.one(): 1}
        for p in polys:
            out = self.mul(out, p)
        return out

    def scale_add(self, target: Poly, p: Poly, c: int) -> None:
        for m, v in p.items():
            val = target.get(m, 0) + c * v
            if val:
                target[m] = val
            else:
                target.pop(m, None)

    def derivative(self, p: Poly, var: int) -> Poly:
        out: Poly = {}
        for m, c in p.items():
            e = m[var]
            if e:
                lowered = list(m)
                lowered[var] -= 1
                out[tuple(lowered)] = c * e
        return out

    def substitute_derivation(self, p: Poly, rules: dict[int, list[tuple[int, int]]]) -> Poly:
        """Apply the derivation sending d/d(var) -> sum coeff * x[target]."""
        out: Poly = {}
        for var, targets in rules.items():
            d = self.derivative(p, var)
            for m, c in d.items():
                for target, coeff in targets:
                    lifted = list(m)
                    lifted[target] += 1
                    key = tuple(lifted)
                    val = out.get(key, 0) + c * coeff
                    if val:
                        out[key] = val
                    else:
                        out.pop(key, None)
        return out

    def row_degrees(self, m: Monomial) -> tuple[int, ...]:
        out = [0] * self.n
        for v, e in enumerate(m):
            if e:
                out[v // self.r] += e
        return tuple(out)

    def col_degrees(self, m: Monomial) -> tuple[int, ...]:
        out = [0] * self.r
        for v, e in enumerate(m):
            if e:
                out[v % self.r] += e
        return tuple(out)

    def minor(self, rows: tuple[int, ...]) -> Poly:
        """Maximal minor on the given r rows of the generic matrix."""
        assert len(rows) == self.r
        out: Poly = {}
        for perm in permutations(range(self.r)):
            sign = _perm_sign(perm)
            mono = self.monomial(*(self.var(rows[k], perm[k]) for k in range(self.r)))
            out[mono] = out.get(mono, 0) + sign
        return {m: c for m, c in out.items() if c}

    def monomials_with_col_degrees(self, cols: tuple[int, ...]):
        """All monomials whose column degrees equal the given tuple."""
        def per_column(j: int):
            return _multisets(self.n, cols[j])

        def rec(j: int, acc: list[int]):
            if j == self.r:
                yield tuple(acc)
                return
            for rows in per_column(j):
                for i in rows:
                    acc[self.var(i, j)] += 1
                yield from rec(j + 1, acc)
                for i in rows:
                    acc[self.var(i, j)] -= 1

        yield from rec(0, [0] * (self.n * self.r))


@lru_cache(maxsize=None)
def _multisets(n: int, k: int) -> tuple[tuple[int, ...], ...]:
    """Weakly increasing k-tuples over range(n)."""
    if k == 0:
        return ((),)
    out = []

    def rec(start: int, remaining: int, acc: tuple[int, ...]):
        if remaining == 0:
            out.append(acc)
            return
        for i in range(start, n):
            rec(i, remaining - 1, acc + (i,))

    rec(0, k, ())
    return tuple(out)


def _perm_sign(perm: tuple[int, ...]) -> int:
    sign = 1
    seen = [False] * len(perm)
    for i in range(len(perm)):
        if seen[i]:
            continue
        length = 0
        j = i
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def minor_row_sets(r: int, n: int) -> list[tuple[int, ...]]:
    return list(combinations(range(n), r))
