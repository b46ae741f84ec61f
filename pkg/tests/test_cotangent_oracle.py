from math import comb

import pytest

from bottcalc.cotangent_oracle import PlueckerOracle, slice_predictions
from bottcalc.linalg import rank_of_rows
from bottcalc.schur import gl_dimension


def oracle(r, n, _cache={}):
    if (r, n) not in _cache:
        _cache[(r, n)] = PlueckerOracle(r, n)
    return _cache[(r, n)]


def test_minors():
    o = oracle(2, 4)
    assert o.N == 6
    assert rank_of_rows([dict(m) for m in o.minors]) == 6
    assert oracle(1, 4).N == 4
    assert all(len(m) == 1 for m in oracle(1, 4).minors)
    single = PlueckerOracle(3, 3)
    assert single.N == 1 and len(single.minors[0]) == 6


def test_relation_counts():
    assert len(oracle(2, 4).plucker_relations) == 1
    assert len(oracle(2, 5).plucker_relations) == 5
    assert len(oracle(3, 6).plucker_relations) == 35
    assert len(oracle(1, 5).plucker_relations) == 0


def test_classic_three_term_relation():
    rel = oracle(2, 4).plucker_relations[0]
    assert len(rel) == 3
    assert sorted(abs(c) for c in rel.values()) == [1, 1, 1]


def test_rho_annihilates_minors():
    for r, n in ((2, 4), (3, 6)):
        o = oracle(r, n)
        for X in o.sl_basis:
            for minor in o.minors:
                assert o.rho_apply(X, minor) == {}


def test_rho_preserves_degree():
    o = oracle(2, 4)
    X = o.sl_basis[0]
    p = o.rho_apply(X, {o.ring.monomial(o.ring.var(0, 1)): 1})
    for mono in p:
        assert sum(mono) == 1


def test_hilbert_function():
    for r, n in ((2, 4), (2, 5), (3, 6)):
        o = oracle(r, n)
        for m in range(0, 4):
            assert o.sg_dim(m) == gl_dimension((m,) * r, n), (r, n, m)


def test_smooth_case_has_no_local_cohomology():
    rows = PlueckerOracle(1, 4).local_cohomology_dims(3)
    assert all(row["h1"] == 0 and row["h2"] == 0 for row in rows)


def test_slice_dimensions_match_predictions():
    for r, n in ((2, 4), (2, 5)):
        o = oracle(r, n)
        for t in (1, 2, 3):
            s = o.build_complex_slice(t)
            want = slice_predictions(r, n, t)
            assert s.dim_c1 == want["c1"]
            assert s.dim_c2 == want["c2"]
            assert s.dim_c3_invariant == want["c3"]
            assert s.dim_c4_invariant == want["c4"]
            assert s.composites_zero


def test_kernel_dimensions_match_the_closed_forms():
    # ker d2 in slice t is the sum over 2 <= i <= min(r, n-r) of the
    # dimensions of S_(t^(r-i), (t-1)^i, 1^i); ker d3 is S_(t^r) plus
    # S_(t^(r-1), t-1, 1) for t >= 2 and the single wedge power at t = 1
    def dominant(shape):
        return all(a >= b for a, b in zip(shape, shape[1:]))

    for r, n in ((2, 4), (2, 5)):
        o = oracle(r, n)
        for t in (1, 2, 3):
            s = o.build_complex_slice(t)
            shapes = [
                (t,) * (r - i) + (t - 1,) * i + (1,) * i
                for i in range(2, min(r, n - r) + 1)
            ]
            want_ker2 = sum(gl_dimension(sh, n) for sh in shapes if dominant(sh))
            assert s.dim_ker_d2 == want_ker2, (r, n, t)
            if t == 1:
                want_ker3 = comb(n, r)
            else:
                want_ker3 = gl_dimension((t,) * r, n) + gl_dimension(
                    (t,) * (r - 1) + (t - 1, 1), n
                )
            assert s.dim_ker_d3_invariant == want_ker3, (r, n, t)


def test_local_cohomology_vanishes_for_two_planes():
    for r, n in ((2, 4), (2, 5)):
        for row in oracle(r, n).local_cohomology_dims(3):
            assert row["h1"] == 0 and row["h2"] == 0


def test_three_six_has_one_dimensional_socle_in_degree_two():
    rows = oracle(3, 6).local_cohomology_dims(2)
    assert [(row["t"], row["h1"], row["h2"]) for row in rows] == [
        (0, 0, 0), (1, 0, 0), (2, 1, 0),
    ]


def test_witnesses():
    for r, n, m in ((2, 4, 1), (2, 4, 2), (2, 5, 1), (3, 6, 1)):
        rep = oracle(r, n).witness_report(m)
        assert rep["d2_u1_power_du1_nonzero"]
        assert rep["delta_weight_ok"]
        assert rep["d3_delta_nonzero"]
        assert rep["d3_delta_on_transvection_nonzero"]
        assert rep["u_delta_weight_ok"]
        if r < n:
            assert rep["d2_u1_power_du2_weight_ok"]


def test_truncation_marker():
    rows = oracle(2, 5).local_cohomology_dims(3, max_slice=10)
    assert any(row.get("truncated") for row in rows)


def test_dump_slice(tmp_path):
    oracle(2, 4).dump_slice(2, tmp_path)
    text = (tmp_path / "d2_t2.txt").read_text().splitlines()
    assert text[0].startswith("# d2 slice t=2")
    assert len(text) > 10
    row_idx, key, value = text[1].split("\t")
    assert int(row_idx) == 0 and int(value) != 0


def test_invalid_sizes():
    with pytest.raises(ValueError):
        PlueckerOracle(3, 2)
    with pytest.raises(ValueError):
        oracle(2, 4).build_complex_slice(-1)
