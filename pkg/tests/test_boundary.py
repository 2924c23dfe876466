"""Boundary-case engine: index set, prefactors, case values, and the
cancellation structure of the total."""

import pytest

from wresverify.boundary import (CASE_NAMES, CaseIndex, enumerate_cases,
                                 evaluate_case, evaluate_all, psi_total,
                                 psi_same_operator, split_case, PI_OMEGA)
from wresverify.rationals import I, gauss
from wresverify.scalars import ScalarExpr, mono
from wresverify.traces import TraceExpr, TRACE_ZERO, trace_F
from wresverify.words import FPoly, phi, phi_star

FAMILIES = ["dirac", "signature"]

# combinatorial prefactors (-i)^{|alpha|+j+k+1} / (alpha! (j+k+1)!)
EXPECTED_PREFACTORS = {
    "a(I)": gauss(-1),
    "a(II)": gauss("-1/2"),
    "a(III)": gauss("-1/2"),
    "b": -I,
    "c": -I,
}


def test_case_index_set():
    cases = enumerate_cases(4)
    assert [c.name for c in cases] == list(CASE_NAMES)
    for c in cases:
        assert c.r - c.k - c.alpha + c.l - c.j - 1 == -4
        assert c.r <= -1 and c.l <= -1


def test_prefactors():
    for c in enumerate_cases(4):
        assert c.prefactor() == EXPECTED_PREFACTORS[c.name]


def test_invalid_index_rejected():
    with pytest.raises(ValueError):
        CaseIndex("bogus", -1, -1, 0, 0, 0)
    with pytest.raises(ValueError):
        enumerate_cases(3)


def _scalar(family, coeff):
    scale = 1 if family == "dirac" else 4
    m = mono(("pi", 1), ("hp0", 1), ("Omega", 1), ("dimF", 1))
    return TraceExpr.of_scalar(
        ScalarExpr.from_dict({m: gauss(coeff) * gauss(scale)}))


@pytest.mark.parametrize("family", FAMILIES)
def test_first_three_cases(family):
    assert evaluate_case("a(I)", family).value == TRACE_ZERO
    assert evaluate_case("a(II)", family).value == _scalar(family, "-3/8")
    assert evaluate_case("a(III)", family).value == _scalar(family, "3/8")


@pytest.mark.parametrize("family", FAMILIES)
def test_all_cases_match_expected(family):
    for res in evaluate_all(family):
        assert res.match, f"case {res.case} [{family}]"


@pytest.mark.parametrize("family", FAMILIES)
def test_cancellations(family):
    a2 = evaluate_case("a(II)", family).value
    a3 = evaluate_case("a(III)", family).value
    assert (a2 + a3).is_zero()
    bc = evaluate_case("b", family).value + evaluate_case("c", family).value
    # the geometric h'(0)-parts of b and c cancel
    for key, c in bc.terms:
        assert c.degree_in("hp0") == 0


def test_psi_total_dirac():
    expected = trace_F(FPoly.of(phi(4)) + FPoly.of(phi_star(4))).scale(
        PI_OMEGA)
    assert psi_total("dirac") == expected


def test_psi_total_signature():
    assert psi_total("signature").is_zero()


@pytest.mark.parametrize("family", FAMILIES)
def test_same_operator_boundary_sum_vanishes(family):
    assert psi_same_operator(family).is_zero()


@pytest.mark.parametrize("family", FAMILIES)
@pytest.mark.parametrize("name", ["b", "c"])
def test_split_reassembles(family, name):
    geo, twist = split_case(name, family)
    assert geo + twist == evaluate_case(name, family).value
