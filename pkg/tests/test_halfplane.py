"""Half-plane projection and residue integration."""

from hypothesis import given, strategies as st

from wresverify.halfplane import (decompose, pi_plus_rat, pi_plus,
                                  integrate_rat, pi_prime)
from wresverify.polynomials import PolyXi, RatFuncXi, P_ONE, XIN
from wresverify.rationals import GaussRational, ZERO, I, gauss

fractions = st.fractions(min_value=-6, max_value=6, max_denominator=3)
coeffs = st.builds(lambda a, b: GaussRational(a, b), fractions, fractions)
numerators = st.lists(coeffs, min_size=0, max_size=4).map(PolyXi.of)

_FACTORS = (PolyXi.of([-I, 1]), PolyXi.of([I, 1]),
            PolyXi.of([gauss(0, -2), 1]), PolyXi.of([gauss(0, 2), 1]))


def _prod(fs):
    out = P_ONE
    for f in fs:
        out = out * f
    return out


denominators = st.lists(st.sampled_from(_FACTORS), min_size=1,
                        max_size=4).map(_prod)


@given(numerators, denominators)
def test_decomposition_is_exact(num, den):
    r = RatFuncXi.make(num, den)
    d = decompose(r)
    assert d.plus_part + d.minus_part == r
    # the plus part carries only upper-half poles, so projecting again
    # changes nothing and the minus part projects to zero
    assert pi_plus_rat(d.minus_part).is_zero()


@given(numerators, denominators)
def test_pi_plus_idempotent(num, den):
    r = RatFuncXi.make(num, den)
    p = pi_plus_rat(r)
    assert pi_plus_rat(p) == p


@given(numerators, denominators)
def test_pi_plus_linear(num, den):
    r = RatFuncXi.make(num, den)
    s = RatFuncXi.make(den.diff() if den.degree() else P_ONE, den)
    assert pi_plus_rat(r + s) == pi_plus_rat(r) + pi_plus_rat(s)


def test_pi_plus_examples():
    # pi+ [1/(1+xin^2)] = -i/(2(xin - i)): the lower-pole half
    r = RatFuncXi.make(P_ONE, PolyXi.of([1, 0, 1]))
    expected = RatFuncXi.make(PolyXi.const(gauss(0, "-1/2")),
                              PolyXi.of([-I, 1]))
    assert pi_plus_rat(r) == expected
    # purely polynomial input projects to zero
    assert pi_plus_rat(RatFuncXi.of(XIN)).is_zero()


def test_integrate_examples():
    # contour integral over the real line of 1/(1+xin^2) is pi -> formal
    # constant 1 here times residue bookkeeping: 2*pi*i*Res_{i} = pi,
    # with the formal pi factored out by the engine convention
    r = RatFuncXi.make(P_ONE, PolyXi.of([1, 0, 1]))
    assert integrate_rat(r) == gauss(1)
    # odd decaying integrand: xin/(1+xin^2)^2 integrates to zero
    sq = PolyXi.of([1, 0, 1])
    assert integrate_rat(RatFuncXi.make(XIN, sq * sq)) == ZERO


def test_pi_prime_example():
    sq = PolyXi.of([1, 0, 1])
    # i times the order-1 residue at the upper pole: 1/4 (in units of
    # 2*pi), per the standard value of the line integral of 1/(1+x^2)^2
    assert pi_prime(RatFuncXi.make(P_ONE, sq * sq)) == gauss("1/4")


def test_pi_plus_symbol_idempotent():
    from wresverify.operators import sigma_minus_one
    from wresverify.clifford import SPIN
    a = pi_plus(sigma_minus_one(SPIN))
    assert pi_plus(a) - a == type(a).zero(a.model)
