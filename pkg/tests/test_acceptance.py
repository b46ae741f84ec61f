"""End-to-end acceptance run: one test per criterion, printing verdict lines.

Criterion 5 is split: the bulk of the classifications must match, while the
sub-claims contradicted by the coroot computation (see the documented-defect
list in ``bottcalc.acceptance``) are asserted under strict expected-failure
markers so the contradiction stays visible without being papered over.
"""

import pytest

from bottcalc import acceptance
from bottcalc import bott_isotropic as iso


def _report(result):
    print(f"[{'PASS' if result.passed else 'FAIL'}] criterion {result.ident}: "
          f"{result.name}")
    for line in result.details:
        print("   ", line)
    return result


def test_criterion_1_closed_forms():
    assert _report(acceptance.criterion_1()).passed


def test_criterion_2_g24_exception():
    assert _report(acceptance.criterion_2()).passed


def test_criterion_3_euler_hilbert():
    assert _report(acceptance.criterion_3()).passed


def test_criterion_4_tables():
    assert _report(acceptance.criterion_4()).passed


def test_criterion_5_classifications_outside_documented_defects():
    assert acceptance.undocumented_claim_mismatches() == []
    result = _report(acceptance.criterion_5())
    # every mismatch must be one of the independently verified defects
    assert not any("UNDOCUMENTED" in line for line in result.details)
    assert result.documented_defects


@pytest.mark.xfail(
    strict=True,
    reason=(
        "the source classifications contain sub-claims contradicted by the "
        "coroot computation (top-degree tangent twists carry the Hodge class "
        "H^1(Omega); OG(3,7) = OG(4,8) under triality; OG(2,5) = P^3 has a "
        "degree-one class; LG(3,6) has no middle-range witness); they are "
        "reported as documented defects rather than patched"
    ),
)
def test_criterion_5_full_statement():
    assert acceptance.criterion_5().passed


@pytest.mark.xfail(
    strict=True,
    reason="the middle-range tangent witness expected on LG(3,6) does not exist",
)
def test_lg36_middle_range_exhibit():
    lg36 = iso.IsoGrassmannian("LG", 3, 3)
    summary = iso.theta_degree_summary(lg36)
    assert any(summary[i]["verdict"] == iso.NONZERO for i in range(2, lg36.d - 2))


def test_criterion_6_oracle_vs_representation_theory():
    assert _report(acceptance.criterion_6()).passed


def test_criterion_7_local_cohomology():
    assert _report(acceptance.criterion_7()).passed


def test_criterion_8_witnesses():
    assert _report(acceptance.criterion_8()).passed


def test_criterion_9_property_suites():
    assert _report(acceptance.criterion_9()).passed
