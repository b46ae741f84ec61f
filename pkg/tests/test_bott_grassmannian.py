import pytest

from bottcalc.bott_grassmannian import (
    BundleSpec,
    bott_evaluate,
    default_window,
    expected_o,
    expected_theta,
    o_bundle,
    scan_vanishing,
    sl_normalize,
    theta_bundle,
    verify_botttheta,
)
from bottcalc.schur import gl_dimension
from bottcalc.weights import negate_reverse


def test_sections_of_twists():
    for m in range(0, 4):
        ans = bott_evaluate(o_bundle(5, 2, m), 5, 2)
        assert ans.degree == 0
        assert ans.weight == (m, m, m, 0, 0)
        assert ans.dimension == gl_dimension((m,) * 2, 5)


def test_top_cohomology_of_negative_twists():
    ans = bott_evaluate(o_bundle(4, 2, -4), 4, 2)
    assert (ans.degree, ans.dimension) == (4, 1)
    ans = bott_evaluate(o_bundle(5, 2, -7), 5, 2)
    assert ans.degree == 6
    assert sl_normalize(ans.weight) == (2, 2, 0, 0, 0)


def test_tangent_twists():
    assert theta_bundle(4, 2, -2) == BundleSpec(alpha=(-1, -2), beta=(0, -1))
    ans = bott_evaluate(theta_bundle(4, 2, -2), 4, 2)
    assert (ans.degree, ans.weight, ans.dimension) == (1, (-1, -1, -1, -1), 1)
    ans = bott_evaluate(theta_bundle(5, 2, -8), 5, 2)
    assert ans.degree == 6
    assert sl_normalize(ans.weight) == (3, 2, 1, 0, 0)
    ans = bott_evaluate(theta_bundle(7, 3, -7), 7, 3)
    assert (ans.degree, ans.dimension) == (3 * 4 - 1, 1)


def test_generic_bundle_and_validation():
    ans = bott_evaluate(BundleSpec((0, -1), (0, -1)), 4, 2)
    assert ans.vanishes
    with pytest.raises(ValueError):
        bott_evaluate(BundleSpec((1,), (0, 0)), 4, 2)
    with pytest.raises(ValueError):
        bott_evaluate(BundleSpec((0, 1), (0, 0)), 4, 2)


def test_vanishing_is_single_degree():
    # never two nonvanishing degrees: the evaluator returns one answer, and
    # across the window each twist is either singular or regular
    for n in range(2, 8):
        for r in range(1, n):
            lo, hi = default_window(n)
            for m in range(lo, hi + 1):
                bott_evaluate(o_bundle(n, r, m), n, r)
                bott_evaluate(theta_bundle(n, r, m), n, r)


def test_closed_forms_across_ranges():
    assert verify_botttheta(5, 2, -15, 15)["ok"]
    assert verify_botttheta(7, 3, -21, 21)["ok"]
    assert verify_botttheta(8, 4, -18, 18)["ok"]
    assert verify_botttheta(4, 2, -10, 10)["ok"]


def test_expected_branches_disagree_without_remark_case():
    # on G(2,4) the lemma branches alone miss the twist -2 group
    want = expected_theta(4, 2, -2)
    assert want.vanishes
    got = bott_evaluate(theta_bundle(4, 2, -2), 4, 2)
    assert not got.vanishes


def test_expected_o_matches_evaluator_everywhere():
    for n in range(2, 8):
        for r in range(1, n):
            for m in range(-(2 * n + 2), 2 * n + 3):
                got = bott_evaluate(o_bundle(n, r, m), n, r)
                want = expected_o(n, r, m)
                assert got.vanishes == want.vanishes
                if not got.vanishes:
                    assert got.degree == want.degree
                    assert sl_normalize(got.weight) == sl_normalize(want.weight)


def test_scan_vanishing_reports():
    report = scan_vanishing(5, 2, 1, 5)
    assert [(e["bundle"], e["i"], e["m"]) for e in report["exceptions"]] == [("Theta", 5, -5)]
    assert report["certified_range"] == [1, 4]
    report = scan_vanishing(4, 2, 1, 3)
    assert {(e["i"], e["m"]) for e in report["exceptions"]} == {(1, -2), (3, -4)}
    report = scan_vanishing(6, 2, 2, 2)
    assert report["exceptions"] == []
    assert report["certified_range"] == [2, 2]


def test_scan_window_stability_assertion():
    with pytest.raises(AssertionError):
        scan_vanishing(5, 2, 1, 5, window=(-3, 3))


def test_serre_duality_pairing():
    for n in range(2, 8):
        for r in range(1, n):
            lo, hi = default_window(n)
            for m in range(lo, hi + 1):
                a = bott_evaluate(o_bundle(n, r, m), n, r)
                b = bott_evaluate(o_bundle(n, r, -n - m), n, r)
                assert a.vanishes == b.vanishes
                if not a.vanishes:
                    assert a.degree + b.degree == r * (n - r)
                    assert a.dimension == b.dimension
                    assert sl_normalize(b.weight) == sl_normalize(negate_reverse(a.weight))


def test_euler_charactertic_is_hilbert_polynomial():
    for n in range(2, 8):
        for r in range(1, n):
            for m in range(0, 6):
                ans = bott_evaluate(o_bundle(n, r, m), n, r)
                chi = 0 if ans.vanishes else (-1) ** ans.degree * ans.dimension
                assert chi == gl_dimension((m,) * r, n)
