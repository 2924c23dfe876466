"""Field axioms and basic arithmetic of the exact complex rationals."""

from fractions import Fraction

from hypothesis import given, strategies as st

from wresverify.rationals import GaussRational, ZERO, ONE, I, gauss

fractions = st.fractions(min_value=-50, max_value=50, max_denominator=12)
gaussians = st.builds(lambda a, b: GaussRational(a, b), fractions, fractions)
nonzero = gaussians.filter(lambda g: not g.is_zero())


def test_basic_values():
    assert I * I == gauss(-1)
    assert gauss("1/2") + gauss("1/3") == gauss(Fraction(5, 6))
    assert gauss(3, 4) * gauss(3, -4) == gauss(25)
    assert (ONE / gauss(1, 1)) == gauss("1/2", "-1/2")


def test_conjugate_and_power():
    z = gauss(2, -3)
    assert z.conjugate() == gauss(2, 3)
    assert z ** 0 == ONE
    assert z ** 3 == z * z * z
    assert (z ** -2) * (z ** 2) == ONE


@given(gaussians, gaussians, gaussians)
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


@given(gaussians)
def test_additive_structure(a):
    assert a + ZERO == a
    assert a + (-a) == ZERO
    assert a - a == ZERO


@given(nonzero)
def test_multiplicative_inverse(a):
    assert a * a.inverse() == ONE
    assert a / a == ONE


@given(gaussians, nonzero)
def test_division_roundtrip(a, b):
    assert (a / b) * b == a


@given(gaussians, gaussians)
def test_conjugation_is_ring_morphism(a, b):
    assert (a + b).conjugate() == a.conjugate() + b.conjugate()
    assert (a * b).conjugate() == a.conjugate() * b.conjugate()
    assert a.conjugate().conjugate() == a


@given(gaussians)
def test_mixed_int_fraction_coercion(a):
    assert a * 2 == a + a
    assert a * Fraction(1, 2) + a * Fraction(1, 2) == a
    assert 1 - a == ONE - a
