"""Laplace-type decomposition of the squared operators, sign pinning,
and the interior residue-trace integrands."""

import pytest

from wresverify.lichnerowicz import (verify_lichnerowicz, sign_scan,
                                     laplace_roundtrip,
                                     clifford_square_identity,
                                     interior_trace, interior_trace_target,
                                     interior_trace_displayed,
                                     bochner_trace_identity,
                                     squared_signature_report,
                                     _MECHANICAL_SIGNS)

FAMILIES = ["dirac", "signature"]


@pytest.mark.parametrize("family", FAMILIES)
def test_lichnerowicz_exact(family):
    res = verify_lichnerowicz(family)
    assert res.omega_match
    assert res.e_match
    assert res.e_residual.is_zero()


@pytest.mark.parametrize("family", FAMILIES)
def test_laplace_roundtrip(family):
    assert laplace_roundtrip(family)


@pytest.mark.parametrize("family", FAMILIES)
def test_sign_scan_unique(family):
    mech = _MECHANICAL_SIGNS[family]
    scan = sign_scan(family)
    assert scan[(mech, mech)]
    assert sum(scan.values()) == 1


@pytest.mark.parametrize("family", FAMILIES)
def test_negative_control(family):
    mech = _MECHANICAL_SIGNS[family]
    control = verify_lichnerowicz(family, -mech, -mech)
    assert not control.match


@pytest.mark.parametrize("family", FAMILIES)
def test_interior_trace_matches_closed_form(family):
    assert interior_trace(family) == interior_trace_target(family)


def test_interior_displayed_dirac_agrees():
    assert interior_trace("dirac") == interior_trace_displayed("dirac")


def test_interior_displayed_signature_discrepancy():
    # the printed variant carries the opposite sign on the squared
    # bracket; the engine documents the discrepancy instead of adopting it
    assert interior_trace("signature") != interior_trace_displayed(
        "signature")


def test_clifford_square_identity():
    assert clifford_square_identity()


def test_bochner_trace_identity():
    assert bochner_trace_identity()


def test_squared_signature_report():
    report = squared_signature_report()
    assert report.as_stated_matches
    assert (report.as_stated - report.target).is_zero()
    assert report.flags
    # the negated convention does not reproduce the target
    assert (report.negated_endomorphism - report.target) != \
        (report.as_stated - report.target)
