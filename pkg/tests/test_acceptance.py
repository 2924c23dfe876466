"""Acceptance suite: one pass/fail line per criterion.

Run with `pytest tests/test_acceptance.py -v -s` to see the lines.
"""

import json
import sys
import time

from wresverify.boundary import (evaluate_all, evaluate_case, psi_total,
                                 PI_OMEGA)
from wresverify.identities import (all_identities, pi_plus_quadratic,
                                   pi_plus_linear, dxn_pi_plus_leading)
from wresverify.lichnerowicz import (verify_lichnerowicz,
                                     interior_trace, interior_trace_target,
                                     interior_trace_displayed,
                                     squared_signature_report,
                                     _MECHANICAL_SIGNS)
from wresverify.operators import build_operator, parametrix, \
    sigma_m2_display
from wresverify.suite import SuiteSpec, run_suite, render_report
from wresverify.traces import trace_F
from wresverify.words import FPoly, phi, phi_star

FAMILIES = ("dirac", "signature")


def _report(num: int, label: str, ok: bool) -> None:
    status = "PASS" if ok else "FAIL"
    print(f"ACCEPTANCE {num:2d} [{status}] {label}", file=sys.stderr)
    assert ok, f"acceptance criterion {num} failed: {label}"


def test_criterion_1_half_plane_projections():
    start = time.monotonic()
    results = [pi_plus_quadratic(), pi_plus_linear(),
               dxn_pi_plus_leading()]
    elapsed = time.monotonic() - start
    ok = all(r.match for r in results) and elapsed < 1.0
    _report(1, "half-plane projections match their closed forms "
               f"({elapsed:.2f}s)", ok)


def test_criterion_2_dirac_boundary_cases():
    results = evaluate_all("dirac")
    expected_psi = trace_F(FPoly.of(phi(4)) + FPoly.of(phi_star(4))).scale(
        PI_OMEGA)
    ok = (all(r.match for r in results)
          and psi_total("dirac") == expected_psi)
    _report(2, "all five spinor boundary cases and their total", ok)


def test_criterion_3_signature_boundary_cases():
    results = evaluate_all("signature")
    ok = all(r.match for r in results) and psi_total("signature").is_zero()
    _report(3, "all five exterior boundary cases sum to zero", ok)


def test_criterion_4_parametrix_displays():
    ok = True
    for family in FAMILIES:
        for star in (False, True):
            spec = build_operator(family, star)
            par = parametrix(spec)   # raises if composition fails
            ok &= (par.sigma_m2 - sigma_m2_display(spec)).is_zero()
    _report(4, "computed parametrix symbols equal the displayed forms", ok)


def test_criterion_5_lichnerowicz():
    ok = True
    for family in FAMILIES:
        mech = _MECHANICAL_SIGNS[family]
        ok &= verify_lichnerowicz(family).match
        ok &= not verify_lichnerowicz(family, -mech, -mech).match
    _report(5, "Lichnerowicz residuals vanish; sign-perturbed control "
               "does not", ok)


def test_criterion_6_interior_traces():
    ok = True
    for family in FAMILIES:
        ok &= interior_trace(family) == interior_trace_target(family)
    ok &= interior_trace("dirac") == interior_trace_displayed("dirac")
    # the printed exterior variant differs by the documented sign; the
    # discrepancy must be detected, not silently absorbed
    ok &= interior_trace("signature") != interior_trace_displayed(
        "signature")
    _report(6, "interior integrands match the mechanically pinned closed "
               "forms (printed exterior sign discrepancy detected)", ok)


def test_criterion_7_trace_identity_suite():
    results = all_identities()
    ok = len(results) == 12 and all(r.match for r in results)
    _report(7, "Clifford/projection trace-identity suite "
               f"({len(results)} identities)", ok)


def test_criterion_8_cancellations():
    ok = True
    for family in FAMILIES:
        a2 = evaluate_case("a(II)", family).value
        a3 = evaluate_case("a(III)", family).value
        ok &= (a2 + a3).is_zero()
        bc = evaluate_case("b", family).value \
            + evaluate_case("c", family).value
        ok &= all(c.degree_in("hp0") == 0 for _, c in bc.terms)
    _report(8, "a(II)+a(III) and the metric-derivative parts of b+c "
               "cancel in both families", ok)


def test_criterion_9_numeric_oracle():
    rep = run_suite(SuiteSpec(checks=("oracle",), oracle_rank=2, seed=0))
    ok = rep.all_match and len(rep.records) == 2
    _report(9, "matrix oracle: 100 seeds at rank 2, all substitutions "
               "exact", ok)


def test_criterion_10_squared_operator_convention():
    report = squared_signature_report()
    rep = run_suite(SuiteSpec(family="signature", checks=("theorem57",)))
    ok = (report.as_stated_matches and len(report.flags) > 0
          and rep.all_match and rep.flag_count > 0)
    _report(10, "squared-operator interior value matches under the stated "
                "convention; the alternate convention is flagged, not "
                "failed", ok)


def test_criterion_11_determinism_and_wall_time():
    start = time.monotonic()
    rep1 = run_suite(SuiteSpec())
    elapsed = time.monotonic() - start
    rep2 = run_suite(SuiteSpec())
    out1, out2 = render_report(rep1), render_report(rep2)
    doc = json.loads(out1)
    ok = (rep1.all_match and out1 == out2
          and doc["version"] == "wres-verifier/1" and elapsed < 60.0)
    _report(11, f"full default suite green in {elapsed:.1f}s with "
                "byte-identical JSON across runs", ok)
