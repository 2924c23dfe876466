"""Operator construction and parametrix derivation."""

import pytest

from wresverify.clifford import DIM
from wresverify.operators import (build_operator, parametrix,
                                  composition_residual, sigma_m2_display,
                                  sigma_minus_one, CompositionError)
from wresverify.symbols import sym_mul, reduce_on_sphere, identity_symbol

FAMILIES = ["dirac", "signature"]
STARS = [False, True]


@pytest.mark.parametrize("family", FAMILIES)
@pytest.mark.parametrize("star", STARS, ids=["plain", "adjoint"])
def test_parametrix_inverts_composition(family, star):
    spec = build_operator(family, star)
    # parametrix() raises CompositionError if the order -1 part of the
    # composed symbol fails to vanish on the cosphere
    par = parametrix(spec)
    lead = reduce_on_sphere(sym_mul(spec.sigma1, par.sigma_m1))
    assert (lead - identity_symbol(spec.model)).is_zero()


@pytest.mark.parametrize("family", FAMILIES)
@pytest.mark.parametrize("star", STARS, ids=["plain", "adjoint"])
def test_sigma_m2_matches_display(family, star):
    spec = build_operator(family, star)
    par = parametrix(spec)
    assert (par.sigma_m2 - sigma_m2_display(spec)).is_zero()


@pytest.mark.parametrize("family", FAMILIES)
def test_composition_residual_nonzero_off_sphere(family):
    # before the cosphere reduction the residual is a genuinely nonzero
    # polynomial identity in xi', so the numeric vanishing check on
    # random sphere points is not vacuous
    spec = build_operator(family, star=False)
    raw = composition_residual(spec)
    assert not raw.is_zero()
    assert reduce_on_sphere(raw).is_zero()


@pytest.mark.parametrize("family", FAMILIES)
def test_leading_symbol_antiselfadjoint_in_xi(family):
    spec = build_operator(family, star=False)
    # i c(xi) is self-adjoint: c(xi)^dagger = -c(xi) and i -> -i
    assert (spec.sigma1.conj_transpose() - spec.sigma1).is_zero()


def test_broken_operator_fails_composition():
    import dataclasses
    spec = build_operator("dirac", star=False)
    # doubling the leading symbol while sigma_-1 stays the inverse of
    # the original one must be caught by the composition check
    broken = dataclasses.replace(spec, sigma1=spec.sigma1 + spec.sigma1)
    with pytest.raises(CompositionError):
        parametrix(broken)


@pytest.mark.parametrize("family", FAMILIES)
def test_sigma_minus_one_is_leading_inverse(family):
    spec = build_operator(family, star=False)
    prod = reduce_on_sphere(
        sym_mul(spec.sigma1, sigma_minus_one(spec.model)))
    assert (prod - identity_symbol(spec.model)).is_zero()
