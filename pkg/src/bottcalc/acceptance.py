"""The acceptance suite: one callable per criterion, shared by CLI and tests.

Each criterion function returns a record with a pass/fail verdict and enough
detail to audit the run.  Two sub-checks are expected to fail and carry a
``documented_defect`` marker: the source classifications they reproduce are
contradicted by the coroot-pairing computation (see the repository notes),
and this suite reports the contradiction instead of patching either side.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from math import comb

from . import bott_isotropic as iso
from . import reference_tables
from .bott_grassmannian import (
    bott_evaluate,
    default_window,
    o_bundle,
    sl_normalize,
    theta_bundle,
    verify_botttheta,
)
from .cotangent_oracle import PlueckerOracle, slice_predictions
from .schur import (
    gl_dimension,
    partitions_of,
    plucker_relation_space,
    tensor_decompose,
    wedge2_of_wedge_r,
)
from .weights import negate_reverse


@dataclass
class CriterionResult:
    ident: str
    name: str
    passed: bool
    details: list[str] = field(default_factory=list)
    elapsed: float = 0.0
    documented_defects: list[str] = field(default_factory=list)

    def to_jsonable(self) -> dict:
        return {
            "id": self.ident,
            "name": self.name,
            "passed": self.passed,
            "elapsed_seconds": round(self.elapsed, 3),
            "details": self.details,
            "documented_defects": self.documented_defects,
        }


_ORACLES: dict[tuple[int, int], PlueckerOracle] = {}


def get_oracle(r: int, n: int) -> PlueckerOracle:
    if (r, n) not in _ORACLES:
        _ORACLES[(r, n)] = PlueckerOracle(r, n)
    return _ORACLES[(r, n)]


# --- criterion 1: closed forms for O(m) and Theta(m) -------------------------


def criterion_1() -> CriterionResult:
    details = []
    ok = True
    for n in range(4, 9):
        for r in range(2, n - 1):
            if (r, n) == (2, 4):
                continue
            lo, hi = default_window(n)
            report = verify_botttheta(n, r, lo, hi)
            if not report["ok"]:
                ok = False
                details.append(f"G({r},{n}): {len(report['mismatches'])} mismatches")
    if ok:
        details.append("all closed-form branches reproduced on 2 <= r <= n-2, n <= 8")
    return CriterionResult("1", "closed forms for O(m) and Theta(m)", ok, details)


def criterion_2() -> CriterionResult:
    details = []
    lo, hi = default_window(4)
    report = verify_botttheta(4, 2, lo, hi)
    ans = bott_evaluate(theta_bundle(4, 2, -2), 4, 2)
    special = (
        not ans.vanishes
        and ans.degree == 1
        and ans.dimension == 1
        and len(set(ans.weight)) == 1
    )
    ok = report["ok"] and special
    details.append(
        f"H^1(Theta(-2)) on G(2,4): degree {ans.degree}, weight {ans.weight}, dim {ans.dimension}"
    )
    if not report["ok"]:
        details.append(f"branch mismatches: {report['mismatches']}")
    return CriterionResult("2", "G(2,4) tangent twist -2 exception", ok, details)


def criterion_3() -> CriterionResult:
    ok = True
    details = []
    for n in range(2, 8):
        for r in range(1, n):
            for m in range(0, 6):
                total = 0
                ans = bott_evaluate(o_bundle(n, r, m), n, r)
                if not ans.vanishes:
                    total = (-1) ** ans.degree * ans.dimension
                expected = gl_dimension((m,) * r, n)
                if total != expected:
                    ok = False
                    details.append(f"G({r},{n}), m={m}: chi {total} != {expected}")
    if ok:
        details.append("Euler characteristic equals the Hilbert function, m in [0,5], n <= 7")
    return CriterionResult("3", "Euler characteristic vs Hilbert function", ok, details)


def criterion_4() -> CriterionResult:
    ok = True
    checked = 0
    disagreements = 0
    details = []
    for row, r, n in reference_tables.all_cases(8):
        result = reference_tables.verify_row(row.bundle, row.family, r, n)
        checked += 1
        if not result["match"]:
            ok = False
            details.append(
                f"{row.bundle}/{row.family} [{row.label}] r={r} n={n}: {result}"
            )
        if not result["conventions_agree"]:
            disagreements += 1
    details.append(f"{checked} catalog rows reproduced verbatim")
    details.append(
        f"{disagreements} rows differ between the coefficient and coroot conventions "
        "(reported, not patched)"
    )
    return CriterionResult("4", "value tables reproduced verbatim", ok, details)


# --- criterion 5: vanishing classifications -----------------------------------

# Classification claims contradicted by the coroot computation.  Each entry
# was re-derived independently of the pairing engine before being recorded
# here; the mechanisms are spelled out in the repository notes.
#
#  * top-degree tangent twists: H^(d-2)(Theta (x) omega) is Serre-dual to
#    H^1(Omega), which is one-dimensional on every Picard-rank-one space, so
#    the asserted all-twist vanishing on LG(n-1,2n) and OG(n,2n+1) cannot
#    hold; the class enters through the sub-bundle R* (x) (Rperp/R), whose
#    top-degree vanishing assertion fails the same way (checked on LG(2,6)
#    and OG(2,5) by explicit exact-sequence computations).
#  * OG(3,7) is isomorphic to OG(4,8) (triality), so it shares the admitted
#    degree-one tangent exception that the classification exempts only under
#    the OG(4,8) label.
#  * OG(2,5) = P^3: H^1 of R* (x) (Rperp/R) at Pluecker twist -1 is
#    one-dimensional by the Euler sequence, against the asserted vanishing.
#  * OG(1,5): the wedge-square rows describe a weight recipe (the bundle is
#    zero at r = 1) whose coefficient-pairing bookkeeping misses a short
#    coroot at rank two.
#  * LG(3,6): the expected middle-range tangent witness does not exist; the
#    coroot scan realizes only degrees 0, d-2, d-1.

_HODGE_TOP_SPACES = (
    [f"LG({n - 1},{2 * n})" for n in range(3, 9)]
    + [f"OG({n},{2 * n + 1})" for n in range(2, 9)]
)

_DOCUMENTED_DEFECTS: list[tuple[str, tuple[str, ...], str]] = [
    ("rq_top", tuple(_HODGE_TOP_SPACES),
     "top-degree vanishing of R* (x) (Rperp/R) contradicted by the Hodge class "
     "H^1(Omega)^* in degree d-2 at the canonical twist"),
    ("theta_top", tuple(_HODGE_TOP_SPACES),
     "top-degree tangent vanishing contradicted by Serre duality with "
     "H^1(Omega) = k"),
    ("rq_h1", ("OG(2,5)",),
     "H^1 of R* (x) (Rperp/R) on OG(2,5) = P^3 is k at Pluecker twist -1 "
     "(Euler sequence)"),
    ("wedge2_h1", ("OG(3,7)",),
     "OG(3,7) is OG(4,8) under triality and shares its degree-one exception"),
    ("theta_h1_vanishing", ("OG(3,7)",),
     "OG(3,7) is OG(4,8) under triality and shares its degree-one exception"),
    ("wedge2_h1", ("OG(1,5)",),
     "rank-two recipe bookkeeping (the wedge square is the zero bundle at r=1)"),
    ("wedge2_top", ("OG(1,5)",),
     "rank-two recipe bookkeeping (the wedge square is the zero bundle at r=1)"),
    ("theta_mid_range_exhibit", ("LG(3,6)",),
     "no middle-range tangent cohomology exists on LG(3,6); the coroot scan "
     "realizes only degrees 0, d-2, d-1"),
]


def documented_defect(claim: dict) -> str | None:
    for name, spaces, reason in _DOCUMENTED_DEFECTS:
        if claim["claim"] == name and claim["space"] in spaces:
            return f"{claim['space']} {name}: {reason}"
    return None


def criterion_5() -> CriterionResult:
    details = []
    defects = []
    mismatches = []
    spaces = iso.supported_spaces(8)
    for X in spaces:
        for claim in iso.lemma_claims(X) + iso.theta_claims(X):
            if not claim["match"]:
                mismatches.append(claim)

    # the expected middle-range exhibit on LG(3,6)
    lg36 = iso.IsoGrassmannian("LG", 3, 3)
    summary = iso.theta_degree_summary(lg36)
    exhibit = any(
        summary[i]["verdict"] == iso.NONZERO for i in range(2, lg36.d - 2)
    )
    if not exhibit:
        mismatches.append(
            {"space": "LG(3,6)", "claim": "theta_mid_range_exhibit",
             "expected": "nonzero for some (i, m)", "computed": "zero for all",
             "match": False}
        )

    synthesis_ok = True
    for X in spaces:
        cert = iso.cotangent_certificates(X)
        d = cert["d"]
        for i in range(2, d - 2):
            if X.describe() != "LG(3,6)" and cert["certificates"].get(i) != "vanishes":
                synthesis_ok = False
                details.append(f"{X.describe()}: T^{i} not certified")
        if X.r not in (1, 2) and X.describe() not in ("OG(4,8)", "OG(3,7)"):
            if cert["certificates"].get(1) != "vanishes":
                synthesis_ok = False
                details.append(f"{X.describe()}: T^1 not certified")

    undocumented = []
    for c in mismatches:
        reason = documented_defect(c)
        if reason is None:
            undocumented.append(c)
        elif reason not in defects:
            defects.append(reason)
    passed = not mismatches and synthesis_ok
    details.append(f"{len(spaces)} spaces scanned, {len(mismatches)} claim mismatches")
    if undocumented:
        details.append(f"UNDOCUMENTED mismatches: {undocumented}")
    for c in mismatches:
        details.append(
            f"mismatch: {c['space']} {c['claim']}: expected "
            f"{c.get('expected', c.get('expected_nonvanishing'))}, computed "
            f"{c.get('computed', c.get('computed_nonvanishing'))}"
        )
    return CriterionResult(
        "5", "vanishing classifications and certificates", passed, details,
        documented_defects=defects,
    )


def undocumented_claim_mismatches() -> list[dict]:
    """Claim mismatches not covered by the documented-defect list."""
    out = []
    for X in iso.supported_spaces(8):
        for claim in iso.lemma_claims(X) + iso.theta_claims(X):
            if not claim["match"] and documented_defect(claim) is None:
                out.append(claim)
    return out


# --- criterion 6: oracle slice dimensions -------------------------------------


def _expected_ff_dim(r: int, n: int) -> int:
    return plucker_relation_space(r, n).dimension()


def criterion_6() -> CriterionResult:
    ok = True
    details = []
    for r, n, m_max in ((2, 4, 3), (2, 5, 3)):
        oracle = get_oracle(r, n)
        f_dim = len(oracle.plucker_relations)
        if f_dim != _expected_ff_dim(r, n):
            ok = False
            details.append(f"({r},{n}): relation space {f_dim} != prediction")
        for m in range(0, m_max + 1):
            checks = {
                "A_m": (oracle.sg_dim(m), gl_dimension((m,) * r, n)),
                "A_m x U*": (oracle.sg_dim(m) * oracle.N,
                             tensor_decompose((m,) * r, (1,) * r, n).dimension()),
                "omega": (oracle.invariant_dim_omega((m + 1) * r - 1),
                          slice_predictions(r, n, m + 1)["c3"]),
                "gstar": (oracle.invariant_dim_gstar((m + 1) * r),
                          slice_predictions(r, n, m + 1)["c4"]),
            }
            for label, (got, want) in checks.items():
                if got != want:
                    ok = False
                    details.append(f"({r},{n}) m={m} {label}: {got} != {want}")
        details.append(f"({r},{n}): invariant slices match for m <= {m_max}")

    oracle = get_oracle(3, 6)
    f_dim = len(oracle.plucker_relations)
    preds = slice_predictions(3, 6, 2)
    checks = {
        "relations": (f_dim, _expected_ff_dim(3, 6)),
        "A_1 x U*": (oracle.sg_dim(1) * oracle.N, preds["c2"]),
        "omega slice": (oracle.invariant_dim_omega(5), preds["c3"]),
        "gstar slice": (oracle.invariant_dim_gstar(6), preds["c4"]),
    }
    for label, (got, want) in checks.items():
        if got != want:
            ok = False
            details.append(f"(3,6) {label}: {got} != {want}")
    details.append("(3,6): degree-2 slice dimensions match")
    return CriterionResult("6", "oracle vs representation theory", ok, details)


def criterion_7() -> CriterionResult:
    ok = True
    details = []
    for r, n, t_max in ((2, 4, 4), (2, 5, 4)):
        rows = get_oracle(r, n).local_cohomology_dims(t_max)
        for row in rows:
            if row.get("truncated"):
                ok = False
                details.append(f"({r},{n}) t={row['t']}: truncated")
            elif row["h1"] != 0 or row["h2"] != 0:
                ok = False
                details.append(f"({r},{n}) t={row['t']}: H1={row['h1']} H2={row['h2']}")
        details.append(f"({r},{n}): H^1 = H^2 = 0 in degrees <= {t_max}")
    rows = get_oracle(3, 6).local_cohomology_dims(2)
    for row in rows:
        want_h1 = 1 if row["t"] == 2 else 0
        if row.get("truncated") or row["h1"] != want_h1 or row["h2"] != 0:
            ok = False
            details.append(f"(3,6) t={row['t']}: {row}")
    details.append("(3,6): dim H^1 = 1 concentrated in degree 2, H^2 = 0")
    return CriterionResult("7", "local cohomology of the module of differentials", ok, details)


def criterion_8() -> CriterionResult:
    ok = True
    details = []
    for r, n, ms in ((2, 4, (1, 2, 3)), (2, 5, (1, 2)), (3, 6, (1,))):
        oracle = get_oracle(r, n)
        for m in ms:
            rep = oracle.witness_report(m)
            needed = [
                rep["d2_u1_power_du1_nonzero"],
                rep["delta_weight_ok"],
                rep["d3_delta_nonzero"],
                rep["d3_delta_on_transvection_nonzero"],
                rep["u_delta_weight_ok"],
            ]
            if rep["d2_u1_power_du2_weight_ok"] is not None:
                needed.append(rep["d2_u1_power_du2_weight_ok"])
            if not all(needed):
                ok = False
                details.append(f"({r},{n}) m={m}: {rep}")
        slice_ = oracle.build_complex_slice(2)
        if not slice_.composites_zero:
            ok = False
            details.append(f"({r},{n}): composites do not vanish at t=2")
    details.append("witness elements nonzero with the stated weights; composites vanish")
    return CriterionResult("8", "witness checks", ok, details)


def criterion_9() -> CriterionResult:
    ok = True
    details = []

    pairs = [
        (lam, mu)
        for a in range(0, 7)
        for b in range(a, 7)
        for lam in partitions_of(a)
        for mu in partitions_of(b)
    ]
    for lam, mu in pairs:
        left = tensor_decompose(lam, mu, 12)
        right = tensor_decompose(mu, lam, 12)
        if left != right:
            ok = False
            details.append(f"symmetry fails for {lam}, {mu}")
            break
    details.append(f"product symmetry on {len(pairs)} unordered pairs")

    for lam, mu in pairs:
        for n in (4, 7):
            if len(lam) > n or len(mu) > n:
                continue
            dec = tensor_decompose(lam, mu, n)
            if dec.dimension() != gl_dimension(lam, n) * gl_dimension(mu, n):
                ok = False
                details.append(f"additivity fails for {lam}, {mu}, n={n}")
    details.append("dimension additivity for |lam|, |mu| <= 6 at n in {4, 7}")

    for n in range(2, 8):
        for r in range(1, n):
            lo, hi = default_window(n)
            for m in range(lo, hi + 1):
                a = bott_evaluate(o_bundle(n, r, m), n, r)
                b = bott_evaluate(o_bundle(n, r, -n - m), n, r)
                if a.vanishes != b.vanishes:
                    ok = False
                    details.append(f"duality pairing fails G({r},{n}) m={m}")
                elif not a.vanishes:
                    dual = sl_normalize(negate_reverse(a.weight))
                    if (
                        a.degree + b.degree != r * (n - r)
                        or a.dimension != b.dimension
                        or sl_normalize(b.weight) != dual
                    ):
                        ok = False
                        details.append(f"duality pairing fails G({r},{n}) m={m}")
    details.append("Serre pairing of twists m and -n-m on all G(r,n), n <= 7")

    for n in range(2, 8):
        for r in range(1, n):
            if wedge2_of_wedge_r(r, n).dimension() != comb(comb(n, r), 2):
                ok = False
                details.append(f"wedge-square dimension fails at ({r},{n})")
    details.append("wedge-square dimension identity for n <= 7")
    return CriterionResult("9", "property suites", ok, details)


ALL_CRITERIA = {
    "1": criterion_1,
    "2": criterion_2,
    "3": criterion_3,
    "4": criterion_4,
    "5": criterion_5,
    "6": criterion_6,
    "7": criterion_7,
    "8": criterion_8,
    "9": criterion_9,
}


def run_all(only: list[str] | None = None) -> list[CriterionResult]:
    results = []
    for ident, fn in ALL_CRITERIA.items():
        if only and ident not in only:
            continue
        start = time.monotonic()
        result = fn()
        result.elapsed = time.monotonic() - start
        results.append(result)
    return results
