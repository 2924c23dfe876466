"""Polynomial and rational-function layer: canonical forms, partial
fractions, and calculus rules."""

from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from wresverify.polynomials import (PolyXi, RatFuncXi, P_ONE, XIN,
                                    linear_pole_factorization,
                                    partial_fractions, parse_ratfunc,
                                    recombine)
from wresverify.rationals import GaussRational, ZERO, ONE, I, gauss

fractions = st.fractions(min_value=-8, max_value=8, max_denominator=4)
coeffs = st.builds(lambda a, b: GaussRational(a, b), fractions, fractions)
polys = st.lists(coeffs, min_size=0, max_size=5).map(PolyXi.of)

# products of (xi_n -/+ i)^k and (xi_n -/+ 2i)^k: the pole set that
# actually occurs in the half-plane decompositions
_FACTORS = (PolyXi.of([-I, 1]), PolyXi.of([I, 1]),
            PolyXi.of([gauss(0, -2), 1]), PolyXi.of([gauss(0, 2), 1]))
denominators = st.lists(st.sampled_from(_FACTORS), min_size=1,
                        max_size=4).map(
    lambda fs: PolyXi.of([1]) if not fs else _prod(fs))


def _prod(fs):
    out = P_ONE
    for f in fs:
        out = out * f
    return out


def test_poly_basics():
    p = PolyXi.of([1, 0, 1])          # 1 + xin^2
    assert p.degree() == 2
    assert p.eval(gauss(2)) == gauss(5)
    assert p.diff() == PolyXi.of([0, 2])
    q, r = (p * p).divmod(p)
    assert q == p and r.is_zero()


def test_gcd_and_monic():
    a = PolyXi.of([-I, 1]) * PolyXi.of([I, 1])   # xin^2 + 1
    b = PolyXi.of([I, 1]) * PolyXi.of([3])
    g = a.gcd(b)
    assert g == PolyXi.of([I, 1])
    assert g.leading() == ONE


def test_ratfunc_canonical_reduction():
    num = PolyXi.of([1, 0, 1]) * PolyXi.of([2])
    den = PolyXi.of([1, 0, 1]) * PolyXi.of([0, 1])
    r = RatFuncXi.make(num, den)
    assert r == RatFuncXi.make(PolyXi.of([2]), XIN)
    assert r.den.leading() == ONE


def test_ratfunc_eval_and_pole():
    r = RatFuncXi.make(P_ONE, PolyXi.of([1, 0, 1]))
    assert r.eval(gauss(1)) == gauss("1/2")
    with pytest.raises(ZeroDivisionError):
        r.eval(I)


def test_parse_ratfunc():
    sq = PolyXi.of([1, 0, 1])
    assert parse_ratfunc("(xin^2 + 1)^2") == RatFuncXi.of(sq * sq)
    assert parse_ratfunc("1/(xin - i)") == RatFuncXi.make(
        P_ONE, PolyXi.of([-I, 1]))


def test_pole_factorization():
    den = PolyXi.of([-I, 1]) ** 2 * PolyXi.of([I, 1])
    r = RatFuncXi.make(P_ONE, den)
    poles = dict(linear_pole_factorization(r))
    assert poles == {I: 2, -I: 1}


@given(polys, denominators)
def test_partial_fraction_roundtrip(num, den):
    r = RatFuncXi.make(num, den)
    poly_part, pieces = partial_fractions(r)
    assert recombine(poly_part, pieces) == r


@given(polys, denominators, polys, denominators)
def test_field_operations(n1, d1, n2, d2):
    a = RatFuncXi.make(n1, d1)
    b = RatFuncXi.make(n2, d2)
    assert a + b == b + a
    assert a - a == RatFuncXi.of(0)
    assert a * b == b * a
    if not b.is_zero():
        assert (a / b) * b == a


@given(polys, denominators, polys, denominators)
def test_quotient_and_product_rules(n1, d1, n2, d2):
    a = RatFuncXi.make(n1, d1)
    b = RatFuncXi.make(n2, d2)
    assert (a * b).diff() == a.diff() * b + a * b.diff()
    assert (a + b).diff() == a.diff() + b.diff()
    if not b.is_zero():
        assert (a / b).diff() == (a.diff() * b - a * b.diff()) / (b * b)


@given(polys, denominators)
def test_eval_matches_num_den(num, den):
    r = RatFuncXi.make(num, den)
    x = gauss(Fraction(3, 2))
    if not den.eval(x).is_zero():
        assert r.eval(x) == num.eval(x) / den.eval(x)
