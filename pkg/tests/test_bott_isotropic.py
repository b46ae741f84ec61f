import pytest

from bottcalc import bott_isotropic as iso
from bottcalc.bott_isotropic import IsoGrassmannian


def test_standing_assumptions():
    with pytest.raises(ValueError):
        IsoGrassmannian("LG", 1, 3)
    with pytest.raises(ValueError):
        IsoGrassmannian("OG_even", 2, 3)
    with pytest.raises(ValueError):
        IsoGrassmannian("OG_even", 3, 4)  # r = n - 1
    IsoGrassmannian("OG_odd", 1, 2)


def test_dimensions_and_generators():
    assert IsoGrassmannian("LG", 2, 2).dim == 3
    assert IsoGrassmannian("LG", 3, 3).dim == 6
    assert IsoGrassmannian("OG_odd", 1, 3).dim == 5      # Q^5
    assert IsoGrassmannian("OG_even", 1, 4).dim == 6     # Q^6
    assert IsoGrassmannian("OG_even", 5, 5).dim == 10    # spinor 10-fold
    assert IsoGrassmannian("OG_odd", 4, 4).dim == 10
    assert IsoGrassmannian("OG_even", 4, 4).plucker_step == 2
    assert IsoGrassmannian("OG_odd", 4, 4).plucker_step == 2
    assert IsoGrassmannian("LG", 4, 4).plucker_step == 1


def test_gamma_weight_fundamental_coordinates():
    X = IsoGrassmannian("LG", 2, 2)
    assert iso.gamma_weight(X, "D2RStar", -2) == (3, -1)
    assert iso.gamma_weight(X, "D2RStar", 0) == (3, 1)
    assert iso.gamma_weight(X, "StructureSheaf", 0) == (1, 1)
    with pytest.raises(ValueError):
        iso.gamma_weight(X, "RStarTensorQuot", 0)  # zero at r = n, symplectic


def test_wedge_square_invalid_on_lines():
    X = IsoGrassmannian("OG_odd", 1, 3)
    assert not iso.bundle_valid(X, "Wedge2RStar")
    assert iso.bundle_valid(X, "RStarTensorQuot")


def test_lg24_divided_square_indices():
    X = IsoGrassmannian("LG", 2, 2)
    expected = {0: 0, -1: None, -2: 1, -3: 2, -4: None, -5: 3, -6: 3}
    for m, want in expected.items():
        assert iso.status(X, "D2RStar", m) == want
    mod = iso.module_of(X, "D2RStar", -5)
    assert mod["degree"] == 3 and mod["dimension"] == 10


def test_quadric_structure_sheaf_classification():
    # O(m) on a smooth quadric has only sections and top cohomology
    for family, n, dim in (("OG_odd", 3, 5), ("OG_even", 4, 6)):
        X = IsoGrassmannian(family, 1, n)
        assert X.dim == dim
        degs = iso.nonvanishing_degrees(X, "StructureSheaf")
        assert set(degs) == {0, dim}
        assert max(degs[dim]) == -dim  # canonical class O(-dim) on Q^dim
        assert min(degs[0]) == 0


def test_lg36_realizes_no_middle_degrees():
    X = IsoGrassmannian("LG", 3, 3)
    assert sorted(iso.nonvanishing_degrees(X, "D2RStar")) == [0, 5, 6]
    assert iso.nonvanishing_degrees(X, "D2RStar")[5] == [-4]


def test_og48_wedge_square_degree_one():
    X = IsoGrassmannian("OG_even", 4, 4)
    degs = iso.nonvanishing_degrees(X, "Wedge2RStar")
    assert degs[1] == [-2]


def test_theta_top_degree_sits_at_the_canonical_twist():
    # H^(dim-1)(Theta (x) omega) is dual to H^1(Omega) = k, so the top-degree
    # witness list always contains exactly the canonical twist for the spaces
    # whose sub/quotient split leaves the class visible to the pinch
    cases = [
        (IsoGrassmannian("LG", 2, 3), -5),
        (IsoGrassmannian("OG_odd", 2, 2), -4),
        (IsoGrassmannian("OG_odd", 3, 3), -6),
    ]
    for X, want in cases:
        summary = iso.theta_degree_summary(X)
        assert summary[X.d - 2]["witnesses"] == [want]


def test_theta_pinch_certifies_lg_2_2n_degree_one():
    X = IsoGrassmannian("LG", 2, 4)
    assert iso.theta_status(X, 1, -1) == iso.NONZERO
    summary = iso.theta_degree_summary(X)
    assert summary[1]["verdict"] == iso.NONZERO


def test_theta_undetermined_is_surfaced_not_guessed():
    # OG(2,5) = P^3 has rigid tangent sheaf, but the split has H^1 of the
    # sub-bundle nonzero against H^0 of the quotient: the pinch must refuse
    X = IsoGrassmannian("OG_odd", 2, 2)
    assert iso.theta_status(X, 1, -2) == iso.UNDETERMINED


def test_structure_sheaf_middle_vanishing():
    for X in iso.supported_spaces(6):
        degs = iso.nonvanishing_degrees(X, "StructureSheaf")
        assert not any(1 <= i <= X.d - 2 for i in degs), X.describe()


def test_cohomology_indices_ranges_partition_the_line():
    X = IsoGrassmannian("LG", 2, 3)
    report = iso.cohomology_indices(X, "D2RStar")
    ranges = report["ranges"]
    assert ranges[0]["m_lo"] == "-inf" and ranges[0]["status"] == X.dim
    assert ranges[-1]["m_hi"] == "inf" and ranges[-1]["status"] == 0
    covered = []
    for rng in ranges[1:-1]:
        covered.extend(range(rng["m_lo"], rng["m_hi"] + 1))
    W = iso.stabilization_window(X)
    assert covered == list(range(-W, W + 1))


def test_lemma_claims_match_outside_documented_defects():
    from bottcalc.acceptance import documented_defect

    for X in iso.supported_spaces(8):
        for claim in iso.lemma_claims(X) + iso.theta_claims(X):
            if not claim["match"]:
                assert documented_defect(claim) is not None, claim


def test_cotangent_certificates():
    X = IsoGrassmannian("LG", 2, 4)
    cert = iso.cotangent_certificates(X)
    assert all(cert["certificates"][i] == "vanishes" for i in range(2, X.d - 2))
    assert cert["certificates"][1] != "vanishes"  # degree-one tangent exception
    Y = IsoGrassmannian("LG", 4, 8)
    assert iso.cotangent_certificates(Y)["certificates"][1] == "vanishes"
