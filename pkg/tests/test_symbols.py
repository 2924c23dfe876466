"""Symbol calculus: products, derivatives, sphere reduction, and the
moment table of the tangential sphere integral."""

import pytest

from wresverify.clifford import SPIN, SIGNATURE, DIM
from wresverify.operators import sigma_minus_one
from wresverify.polynomials import RatFuncXi, PolyXi, P_ONE
from wresverify.rationals import I, gauss
from wresverify.scalars import ScalarExpr, mono
from wresverify.symbols import (SymbolExpr, sym_mul, d_xi_n, d_x_n,
                                d_x_tangent, reduce_on_sphere,
                                sphere_integrate, trace_total, c_xi,
                                c_xi_prime, c_dx_n, identity_symbol)

INV_XISQ = RatFuncXi.make(P_ONE, PolyXi.of([1, 0, 1]))


@pytest.mark.parametrize("model", [SPIN, SIGNATURE],
                         ids=["spin", "signature"])
def test_c_xi_squares_to_minus_xisq(model, ):
    sq = reduce_on_sphere(sym_mul(c_xi(model), c_xi(model)))
    expected = identity_symbol(model).scale_rat(
        -RatFuncXi.of(PolyXi.of([1, 0, 1])))
    assert sq == expected


def test_d_xi_n_product_rule():
    model = SPIN
    a = sigma_minus_one(model)
    b = sym_mul(c_dx_n(model), a)
    lhs = d_xi_n(sym_mul(a, b))
    rhs = sym_mul(d_xi_n(a), b) + sym_mul(a, d_xi_n(b))
    assert lhs - rhs == SymbolExpr.zero(model)


def test_d_x_n_product_rule():
    model = SPIN
    a = sigma_minus_one(model)
    b = c_xi(model).scale_rat(INV_XISQ)
    lhs = d_x_n(sym_mul(a, b))
    rhs = sym_mul(d_x_n(a), b) + sym_mul(a, d_x_n(b))
    assert lhs - rhs == SymbolExpr.zero(model)


def test_tangential_derivative_vanishes_at_base_point():
    model = SPIN
    for i in range(1, DIM):
        assert d_x_tangent(sigma_minus_one(model), i).is_zero()


def test_d_x_n_on_inverse_length():
    # d/dx_n (1/|xi|^2) = -h'(0)/|xi|^4 at the boundary point, with
    # |xi'|^2 already evaluated to 1 on the cosphere
    model = SPIN
    a = identity_symbol(model).scale_rat(INV_XISQ)
    d = d_x_n(a)
    expected = identity_symbol(model).scale_rat(
        -(INV_XISQ * INV_XISQ)).scale_smono(mono(("hp0", 1)))
    assert d == expected


def test_reduce_on_sphere():
    model = SPIN
    # xi_3^2 on the unit sphere is 1 - xi_1^2 - xi_2^2
    a = SymbolExpr.of_matrix(model, model.identity, ximono=(0, 0, 2))
    r = reduce_on_sphere(a)
    expected = (identity_symbol(model)
                - SymbolExpr.of_matrix(model, model.identity,
                                       ximono=(2, 0, 0))
                - SymbolExpr.of_matrix(model, model.identity,
                                       ximono=(0, 2, 0)))
    assert r == expected


def test_sphere_moments():
    model = SPIN
    # odd moments vanish; the second moment of each tangential
    # coordinate is Omega/3 relative to the total mass Omega
    odd = trace_total(c_xi_prime(model))
    assert sphere_integrate(odd).is_zero()
    even = trace_total(SymbolExpr.of_matrix(model, model.identity,
                                            ximono=(2, 0, 0)))
    total = trace_total(identity_symbol(model))
    assert sphere_integrate(even).scale(gauss(3)) == sphere_integrate(total)


def test_trace_kills_offdiagonal_clifford():
    model = SPIN
    t = trace_total(sym_mul(c_dx_n(model), c_xi_prime(model)))
    assert t.is_zero()


def test_adjoint_of_product():
    model = SPIN
    a = c_xi(model).scale_rat(RatFuncXi.of(I))
    b = sigma_minus_one(model)
    lhs = sym_mul(a, b).conj_transpose()
    rhs = sym_mul(b.conj_transpose(), a.conj_transpose())
    assert lhs == rhs
