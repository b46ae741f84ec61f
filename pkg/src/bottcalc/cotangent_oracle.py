"""Exact verification of the four-term complex for a Pluecker algebra.

Let S be the polynomial ring on a generic n x r matrix, G = SL_r acting on
columns, and A = S^G the subalgebra generated by the maximal minors.  With
U* the span of the minors, F the quadratic relation space, and g = sl_r, the
complex

    (S (x) F)^G --d1--> (S (x) U*)^G --d2--> (Omega_S)^G --d3--> (S (x) g*)^G

has the degree-zero and degree-one local cohomology of Omega_A at the
irrelevant ideal as its homology at the second and third spots.  Everything
here is exact integer/rational arithmetic on explicit monomial bases.

Grading (t is the generator-degree of A):
    C1_t = A_(t-2) (x) F,  C2_t = A_(t-1) (x) U*,
    C3_t = (S_(tr-1) (x) V*)^G,  C4_t = (S_tr (x) g*)^G,
with d1 multiplication into the relations, d2 the Jacobian of the minors
(of S-degree r-1), and d3(f (x) dx_i)(X) = f * rho_i(X).

Invariant subspaces are cut out inside the SL_r-weight-zero slice (balanced
column degrees) by the raising operators.  All maps preserve the row
multidegree, so ranks are accumulated blockwise; the relation space is
computed as a kernel, never quoted, so the representation-theoretic
predictions stay independent of the linear algebra they certify.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from math import gcd, lcm
from typing import Hashable, Optional

from .linalg import Eliminator, SpanSolver, kernel_of_rows, rank_of_rows
from .polyring import MatrixRing, Monomial, Poly, minor_row_sets

Matrix = tuple[tuple[int, ...], ...]  # small dense r x r integer matrix
Vec = dict[Hashable, int]


def _matrix_unit(r: int, a: int, b: int) -> Matrix:
    return tuple(
        tuple(1 if (i, j) == (a, b) else 0 for j in range(r)) for i in range(r)
    )


def _diag_h(r: int, a: int) -> Matrix:
    return tuple(
        tuple((1 if i == j == a else -1 if i == j == a + 1 else 0) for j in range(r))
        for i in range(r)
    )


def _commutator(x: Matrix, y: Matrix) -> Matrix:
    r = len(x)
    return tuple(
        tuple(
            sum(x[i][k] * y[k][j] - y[i][k] * x[k][j] for k in range(r))
            for j in range(r)
        )
        for i in range(r)
    )


class PlueckerOracle:
    """Minors, relations, invariants and the four-term complex for G(r, n)."""

    def __init__(self, r: int, n: int):
        if not 1 <= r <= n:
            raise ValueError(f"need 1 <= r <= n, got r = {r}, n = {n}")
        self.r = r
        self.n = n
        self.ring = MatrixRing(n, r)
        self.row_sets = minor_row_sets(r, n)
        self.minors = [self.ring.minor(rows) for rows in self.row_sets]
        self._sg_cache: dict[int, list[Poly]] = {}
        self._solver_cache: dict[int, SpanSolver] = {}

    @property
    def N(self) -> int:
        return len(self.minors)

    # -- Lie algebra data ----------------------------------------------------

    @cached_property
    def sl_basis(self) -> tuple[Matrix, ...]:
        r = self.r
        off = [_matrix_unit(r, a, b) for a in range(r) for b in range(r) if a != b]
        diag = [_diag_h(r, a) for a in range(r - 1)]
        return tuple(off + diag)

    def sl_coefficients(self, m: Matrix) -> list[int]:
        r = self.r
        assert sum(m[i][i] for i in range(r)) == 0
        coeffs = [m[a][b] for a in range(r) for b in range(r) if a != b]
        partial = 0
        for a in range(r - 1):
            partial += m[a][a]
            coeffs.append(partial)
        return coeffs

    @cached_property
    def raising_matrices(self) -> tuple[Matrix, ...]:
        return tuple(_matrix_unit(self.r, j, j + 1) for j in range(self.r - 1))

    @cached_property
    def _coadjoint_raising(self) -> list[list[list[int]]]:
        # _coadjoint_raising[j][g][l]: coefficient of xi_l in e_j . xi_g
        out = []
        basis = self.sl_basis
        for e in self.raising_matrices:
            table = []
            for g_idx in range(len(basis)):
                row = [
                    self.sl_coefficients(_commutator(basis[l_idx], e))[g_idx]
                    for l_idx in range(len(basis))
                ]
                table.append(row)
            out.append(table)
        return out

    def _rho_rules(self, m: Matrix) -> dict[int, list[tuple[int, int]]]:
        # rho(X) = sum_(a,b) X[a][b] sum_i x[i,a] d/dx[i,b]
        ring = self.ring
        rules: dict[int, list[tuple[int, int]]] = {}
        for a in range(self.r):
            for b in range(self.r):
                if m[a][b]:
                    for i in range(self.n):
                        rules.setdefault(ring.var(i, b), []).append(
                            (ring.var(i, a), m[a][b])
                        )
        return rules

    @cached_property
    def _raising_rules(self) -> list[dict[int, list[tuple[int, int]]]]:
        return [self._rho_rules(e) for e in self.raising_matrices]

    def rho_apply(self, m: Matrix, p: Poly) -> Poly:
        return self.ring.substitute_derivation(p, self._rho_rules(m))

    # -- the invariant ring ----------------------------------------------------

    def sg_basis(self, k: int) -> list[Poly]:
        """Independent degree-k products of minors (a basis of A_k)."""
        if k < 0:
            return []
        if k not in self._sg_cache:
            if k == 0:
                self._sg_cache[k] = [{self.ring.one(): 1}]
            else:
                elim = Eliminator()
                basis: list[Poly] = []
                for combo in _multicombos(self.N, k):
                    p = self.ring.mul_many([self.minors[i] for i in combo])
                    if elim.add(dict(p)):
                        basis.append(p)
                self._sg_cache[k] = basis
        return self._sg_cache[k]

    def sg_dim(self, k: int) -> int:
        return len(self.sg_basis(k))

    def hilbert_dim(self, k: int) -> int:
        return self.sg_dim(k)

    def _sg_solver(self, k: int) -> SpanSolver:
        if k not in self._solver_cache:
            self._solver_cache[k] = SpanSolver([dict(p) for p in self.sg_basis(k)])
        return self._solver_cache[k]

    @cached_property
    def plucker_relations(self) -> list[dict[tuple[int, int], int]]:
        """Kernel of Sym^2 U* -> A_2, as coefficient dicts on minor pairs."""
        pairs = [(a, b) for a in range(self.N) for b in range(a, self.N)]
        rows = [dict(self.ring.mul(self.minors[a], self.minors[b])) for a, b in pairs]
        combos = kernel_of_rows(rows)
        return [{pairs[i]: c for i, c in combo.items()} for combo in combos]

    # -- differentials ---------------------------------------------------------

    @cached_property
    def _minor_differentials(self) -> list[dict[tuple[int, int], Poly]]:
        ring = self.ring
        out = []
        for minor in self.minors:
            entry = {}
            for p in range(self.n):
                for q in range(self.r):
                    d = ring.derivative(minor, ring.var(p, q))
                    if d:
                        entry[(p, q)] = d
            out.append(entry)
        return out

    def d2_row(self, poly: Poly, a: int) -> Vec:
        """Image of poly (x) d(minor_a) in coordinates (monomial, (p, q))."""
        ring = self.ring
        out: Vec = {}
        for (p, q), dpart in self._minor_differentials[a].items():
            for mono, c in ring.mul(poly, dpart).items():
                key = (mono, (p, q))
                val = out.get(key, 0) + c
                if val:
                    out[key] = val
                else:
                    out.pop(key, None)
        return out

    def d3_row(self, vec: Vec) -> Vec:
        """d3 on (monomial, (p, q)) coordinates, into (monomial, functional).

        (mono (x) dx[p,q]) evaluated on X is mono * sum_a X[a][q] x[p,a]; the
        output keys pair a monomial with an index into the dual basis of
        ``sl_basis``.
        """
        ring = self.ring
        out: Vec = {}
        for (mono, (p, q)), c in vec.items():
            for g_idx, mat in enumerate(self.sl_basis):
                for a in range(self.r):
                    coeff = mat[a][q]
                    if coeff:
                        lifted = list(mono)
                        lifted[ring.var(p, a)] += 1
                        key = (tuple(lifted), g_idx)
                        val = out.get(key, 0) + c * coeff
                        if val:
                            out[key] = val
                        else:
                            out.pop(key, None)
        return out

    def d1_rows(self, t: int) -> list[Vec]:
        """Images of A_(t-2) (x) F in (basis-index, minor) coordinates."""
        if t < 2:
            return []
        solver = self._sg_solver(t - 1)
        rows = []
        for f in self.sg_basis(t - 2):
            for rel in self.plucker_relations:
                image: dict[Hashable, list] = {}
                for (a, b), c in rel.items():
                    for left, right in ((a, b), (b, a)):
                        prod = dict(self.ring.mul(f, self.minors[left]))
                        coeffs = solver.coefficients(prod)
                        assert coeffs is not None, "product left the invariant ring"
                        for idx, (num, den) in coeffs.items():
                            if num:
                                entry = image.setdefault((idx, right), [0, 1])
                                _frac_add(entry, c * num, den)
                rows.append(_clear_denominators(image))
        return rows

    def d2_rows(self, t: int) -> list[Vec]:
        if t < 1:
            return []
        return [
            self.d2_row(poly, a)
            for poly in self.sg_basis(t - 1)
            for a in range(self.N)
        ]

    # -- weight-zero slices and invariants --------------------------------------

    def balanced(self, total: int) -> Optional[tuple[int, ...]]:
        if total % self.r:
            return None
        return (total // self.r,) * self.r

    def omega_slice(self, sdeg: int) -> list[tuple[Monomial, int, int]]:
        """Weight-zero basis of S_sdeg (x) V*: triples (mono, p, q)."""
        if sdeg < 0:
            return []
        ring = self.ring
        target = self.balanced(sdeg + 1)
        if target is None:
            return []
        out = []
        for q in range(self.r):
            cols = list(target)
            cols[q] -= 1
            if min(cols) < 0:
                continue
            for mono in ring.monomials_with_col_degrees(tuple(cols)):
                for p in range(self.n):
                    out.append((mono, p, q))
        return out

    def gstar_slice(self, sdeg: int) -> list[tuple[Monomial, int]]:
        """Weight-zero basis of S_sdeg (x) g*: pairs (mono, g_idx)."""
        ring = self.ring
        balanced = self.balanced(sdeg)
        if balanced is None:
            return []
        out = []
        for g_idx, mat in enumerate(self.sl_basis):
            offset = [0] * self.r
            for a in range(self.r):
                for b in range(self.r):
                    if mat[a][b] and a != b:
                        # the dual functional carries torus weight e_b - e_a
                        offset[b] += mat[a][b]
                        offset[a] -= mat[a][b]
            cols = tuple(balanced[j] - offset[j] for j in range(self.r))
            if min(cols) < 0:
                continue
            for mono in ring.monomials_with_col_degrees(cols):
                out.append((mono, g_idx))
        return out

    def _raising_on_omega(self, elem: tuple[Monomial, int, int], j: int) -> Vec:
        mono, p, q = elem
        out: Vec = {}
        for m2, c in self.ring.substitute_derivation({mono: 1}, self._raising_rules[j]).items():
            out[(m2, p, q)] = out.get((m2, p, q), 0) + c
        if q == j + 1:
            key = (mono, p, j)
            out[key] = out.get(key, 0) + 1
        return {k: v for k, v in out.items() if v}

    def _raising_on_gstar(self, elem: tuple[Monomial, int], j: int) -> Vec:
        mono, g_idx = elem
        out: Vec = {}
        for m2, c in self.ring.substitute_derivation({mono: 1}, self._raising_rules[j]).items():
            out[(m2, g_idx)] = out.get((m2, g_idx), 0) + c
        for l_idx, coeff in enumerate(self._coadjoint_raising[j][g_idx]):
            if coeff:
                key = (mono, l_idx)
                out[key] = out.get(key, 0) + coeff
        return {k: v for k, v in out.items() if v}

    def invariant_dim_omega(self, sdeg: int, with_d3: bool = False) -> int:
        """Invariant dimension of S_sdeg (x) V*, or of ker d3 inside it."""
        ring = self.ring
        blocks: dict[tuple[int, ...], list[tuple[Monomial, int, int]]] = {}
        for elem in self.omega_slice(sdeg):
            mono, p, q = elem
            row_deg = list(ring.row_degrees(mono))
            row_deg[p] += 1
            blocks.setdefault(tuple(row_deg), []).append(elem)
        total = 0
        for block in blocks.values():
            rows = []
            for elem in block:
                stacked: Vec = {}
                for j in range(self.r - 1):
                    for k, v in self._raising_on_omega(elem, j).items():
                        stacked[("e", j, *k)] = v
                if with_d3:
                    mono, p, q = elem
                    for k, v in self.d3_row({(mono, (p, q)): 1}).items():
                        stacked[("z", *k)] = v
                rows.append(stacked)
            total += len(block) - rank_of_rows(rows)
        return total

    def invariant_dim_gstar(self, sdeg: int) -> int:
        if self.r == 1:
            return 0
        ring = self.ring
        blocks: dict[tuple[int, ...], list[tuple[Monomial, int]]] = {}
        for elem in self.gstar_slice(sdeg):
            blocks.setdefault(ring.row_degrees(elem[0]), []).append(elem)
        total = 0
        for block in blocks.values():
            rows = []
            for elem in block:
                stacked: Vec = {}
                for j in range(self.r - 1):
                    for k, v in self._raising_on_gstar(elem, j).items():
                        stacked[("e", j, *k)] = v
                rows.append(stacked)
            total += len(block) - rank_of_rows(rows)
        return total

    # -- slices of the complex ---------------------------------------------------

    def build_complex_slice(self, t: int) -> "ComplexSlice":
        if t < 0:
            raise ValueError("slice degree must be nonnegative")
        dim_c1 = self.sg_dim(t - 2) * len(self.plucker_relations) if t >= 2 else 0
        dim_c2 = self.sg_dim(t - 1) * self.N if t >= 1 else 0

        d1 = self.d1_rows(t)
        d2 = self.d2_rows(t)
        rank_d1 = rank_of_rows(d1)
        rank_d2 = rank_of_rows(d2)
        dim_ker_d2 = dim_c2 - rank_d2

        composites_zero = self._composites_vanish(t, d1, d2)

        sdeg = t * self.r - 1
        dim_c3_inv = self.invariant_dim_omega(sdeg) if t >= 1 else 0
        dim_ker_d3 = self.invariant_dim_omega(sdeg, with_d3=True) if t >= 1 else 0
        dim_c4_inv = self.invariant_dim_gstar(t * self.r)

        return ComplexSlice(
            r=self.r, n=self.n, t=t,
            dim_c1=dim_c1, dim_c2=dim_c2,
            dim_c3_invariant=dim_c3_inv, dim_c4_invariant=dim_c4_inv,
            rank_d1=rank_d1, rank_d2=rank_d2,
            dim_ker_d2=dim_ker_d2, dim_ker_d3_invariant=dim_ker_d3,
            h1=dim_ker_d2 - rank_d1, h2=dim_ker_d3 - rank_d2,
            composites_zero=composites_zero,
        )

    def _composites_vanish(self, t: int, d1_rows: list[Vec], d2_rows_: list[Vec]) -> bool:
        if d1_rows and d2_rows_:
            index = {
                (k_idx, a): k_idx * self.N + a
                for k_idx in range(self.sg_dim(t - 1))
                for a in range(self.N)
            }
            for image in d1_rows:
                acc: Vec = {}
                for key, c in image.items():
                    for k2, v in d2_rows_[index[key]].items():
                        val = acc.get(k2, 0) + c * v
                        if val:
                            acc[k2] = val
                        else:
                            acc.pop(k2, None)
                if acc:
                    return False
        for row in d2_rows_:
            if self.d3_row(row):
                return False
        return True

    def local_cohomology_dims(self, t_max: int, max_slice: int = 250_000) -> list[dict]:
        """Rows (t, dim H^1, dim H^2) for t <= t_max, with truncation markers."""
        out = []
        for t in range(0, t_max + 1):
            size = len(self.omega_slice(t * self.r - 1))
            if size > max_slice:
                out.append({"t": t, "truncated": True, "weight_zero_size": size})
                continue
            s = self.build_complex_slice(t)
            out.append(
                {
                    "t": t,
                    "h1": s.h1,
                    "h2": s.h2,
                    "dims": [s.dim_c1, s.dim_c2, s.dim_c3_invariant, s.dim_c4_invariant],
                    "composites_zero": s.composites_zero,
                    "truncated": False,
                }
            )
        return out

    # -- distinguished elements ----------------------------------------------------

    def minor_index(self, rows: tuple[int, ...]) -> int:
        return self.row_sets.index(rows)

    def _vec_row_weights(self, vec: Vec) -> set[tuple[int, ...]]:
        ring = self.ring
        out = set()
        for (mono, (p, _q)), _c in vec.items():
            w = list(ring.row_degrees(mono))
            w[p] += 1
            out.add(tuple(w))
        return out

    def delta_form(self) -> Vec:
        """Determinant of rows x[0..r-2] with a final row of dx[0, *]."""
        from itertools import permutations

        r, ring = self.r, self.ring
        out: Vec = {}
        for perm in permutations(range(r)):
            sign = _perm_sign(perm)
            mono = [0] * (self.n * r)
            for k in range(r - 1):
                mono[ring.var(k, perm[k])] += 1
            key = (tuple(mono), (0, perm[r - 1]))
            out[key] = out.get(key, 0) + sign
        return {k: v for k, v in out.items() if v}

    def scale_vec(self, vec: Vec, poly: Poly) -> Vec:
        out: Vec = {}
        for (mono, pq), c in vec.items():
            for m2, c2 in self.ring.mul({mono: 1}, poly).items():
                key = (m2, pq)
                val = out.get(key, 0) + c * c2
                if val:
                    out[key] = val
                else:
                    out.pop(key, None)
        return out

    def witness_report(self, m: int) -> dict:
        """Nonvanishing and weight checks for the distinguished elements.

        u1 and u2 are the minors on rows 0..r-1 and on rows 0..r-2, r; delta
        is the invariant one-form obtained by replacing the last row of the
        leading r x r submatrix with differentials of the first row.
        """
        r, n = self.r, self.n
        if m < 1:
            raise ValueError("witness checks need m >= 1")
        u1_idx = self.minor_index(tuple(range(r)))
        u1_m = self.ring.mul_many([self.minors[u1_idx]] * m)

        d2_u1 = self.d2_row(u1_m, u1_idx)

        u2_image_ok = None
        if r < n:
            u2_idx = self.minor_index(tuple(range(r - 1)) + (r,))
            image = self.d2_row(u1_m, u2_idx)
            expected = ((m + 1,) * (r - 1) + (m, 1) + (0,) * (n - r - 1))
            u2_image_ok = bool(image) and self._vec_row_weights(image) == {expected}

        delta = self.delta_form()
        expected_delta = (2,) + (1,) * (r - 2) + (0,) * (n - r + 1)
        delta_weight_ok = self._vec_row_weights(delta) == {expected_delta}

        d3_delta = self.d3_row(delta)
        transvection = self.sl_basis.index(_matrix_unit(r, 0, r - 1)) if r > 1 else None
        d3_on_transvection = (
            {mono: c for (mono, g), c in d3_delta.items() if g == transvection}
            if transvection is not None
            else {}
        )

        u_delta = self.scale_vec(delta, self.ring.mul_many([self.minors[u1_idx]] * (m - 1)))
        expected_u_delta = (m + 1,) + (m,) * (r - 2) + (m - 1,) + (0,) * (n - r)
        u_delta_ok = self._vec_row_weights(u_delta) == {expected_u_delta}

        return {
            "r": r, "n": n, "m": m,
            "d2_u1_power_du1_nonzero": bool(d2_u1),
            "d2_u1_power_du2_weight_ok": u2_image_ok,
            "delta_weight_ok": delta_weight_ok,
            "d3_delta_nonzero": bool(d3_delta),
            "d3_delta_on_transvection_nonzero": bool(d3_on_transvection),
            "u_delta_weight_ok": u_delta_ok,
        }

    def dump_slice(self, t: int, directory) -> None:
        """Write the slice differentials as sparse-triplet text files.

        Lines are "row_index<TAB>column_key<TAB>value"; row order follows the
        basis order used by the rank computations, and a header records the
        slice parameters.
        """
        import os

        os.makedirs(directory, exist_ok=True)
        for name, rows in (("d1", self.d1_rows(t)), ("d2", self.d2_rows(t))):
            path = os.path.join(directory, f"{name}_t{t}.txt")
            with open(path, "w") as fh:
                fh.write(f"# {name} slice t={t} r={self.r} n={self.n} rows={len(rows)}\n")
                for i, row in enumerate(rows):
                    for key, value in sorted(row.items(), key=repr):
                        fh.write(f"{i}\t{key}\t{value}\n")


@dataclass(frozen=True)
class ComplexSlice:
    r: int
    n: int
    t: int
    dim_c1: int
    dim_c2: int
    dim_c3_invariant: int
    dim_c4_invariant: int
    rank_d1: int
    rank_d2: int
    dim_ker_d2: int
    dim_ker_d3_invariant: int
    h1: int
    h2: int
    composites_zero: bool


def slice_predictions(r: int, n: int, t: int) -> dict:
    """Representation-theoretic dimensions the slice must reproduce.

    C1: A_(t-2) times the relation space; C2: A_(t-1) times the number of
    minors (whose decomposition carries one extra wedge column per step);
    C3: the invariant one-forms, irreducible content S_(t^(r-1), t-1) (x) E*;
    C4: the single constituent S_(t+1, t^(r-2), t-1).
    """
    from .schur import gl_dimension, plucker_relation_space

    f_dim = plucker_relation_space(r, n).dimension() if r < n else 0
    c1 = gl_dimension((t - 2,) * r, n) * f_dim if t >= 2 else 0
    from math import comb

    c2 = gl_dimension((t - 1,) * r, n) * comb(n, r) if t >= 1 else 0
    c3 = gl_dimension((t,) * (r - 1) + (t - 1,), n) * n if t >= 1 else 0
    if r >= 2 and t >= 1:
        c4 = gl_dimension((t + 1,) + (t,) * (r - 2) + (t - 1,), n)
    else:
        c4 = 0
    return {"c1": c1, "c2": c2, "c3": c3, "c4": c4}


def _multicombos(n: int, k: int):
    def rec(start: int, remaining: int, acc: tuple[int, ...]):
        if remaining == 0:
            yield acc
            return
        for i in range(start, n):
            yield from rec(i, remaining - 1, acc + (i,))

    yield from rec(0, k, ())


def _perm_sign(perm) -> int:
    sign = 1
    seen = [False] * len(perm)
    for i in range(len(perm)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def _frac_add(acc: list, num: int, den: int) -> None:
    a_num, a_den = acc
    new_num = a_num * den + num * a_den
    new_den = a_den * den
    g = gcd(abs(new_num), new_den) or 1
    acc[0], acc[1] = new_num // g, new_den // g


def _clear_denominators(image: dict[Hashable, list]) -> Vec:
    entries = {k: (num, den) for k, (num, den) in image.items() if num}
    if not entries:
        return {}
    scale = 1
    for _, den in entries.values():
        scale = lcm(scale, den)
    return {k: num * (scale // den) for k, (num, den) in entries.items()}
