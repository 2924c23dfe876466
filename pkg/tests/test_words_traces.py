"""Free noncommutative layer: words, adjoints, derivations, and the
cyclic trace normal form."""

from hypothesis import given, strategies as st

from wresverify.rationals import gauss
from wresverify.scalars import ScalarExpr
from wresverify.traces import TraceExpr, TRACE_ZERO, trace_F, \
    cyclic_canonical
from wresverify.words import (FWord, FPoly, F_ONE, adjoint, der, phi,
                              phi_star, omega_f, omega_f_star, sigma_f,
                              sigma_fe, star_atom, word_mul)

atoms = st.sampled_from([phi(1), phi_star(2), sigma_f(3), sigma_fe(4),
                         omega_f(1), omega_f_star(2), der(1, phi(3)),
                         der(2, sigma_fe(1))])
words = st.lists(atoms, min_size=0, max_size=4).map(lambda a: FWord.of(*a))
coeffs = st.integers(min_value=-4, max_value=4).map(gauss)
fpolys = st.lists(st.tuples(words, coeffs), min_size=0, max_size=3).map(
    lambda ts: sum((FPoly.of(w).scale(c) for w, c in ts), FPoly.of(0)))


def test_star_rules():
    assert star_atom(phi(2)) == (1, phi_star(2))
    assert star_atom(phi_star(2)) == (1, phi(2))
    for a in (sigma_f(1), sigma_fe(2)):
        assert star_atom(a) == (-1, a)
    assert star_atom(omega_f(3)) == (1, omega_f_star(3))


@given(words)
def test_adjoint_is_involution(w):
    s1, w1 = adjoint(w)
    s2, w2 = adjoint(w1)
    assert w2 == w and s1 * s2 == 1


@given(words, words)
def test_adjoint_antimultiplicative(a, b):
    sa, wa = adjoint(a)
    sb, wb = adjoint(b)
    s, w = adjoint(word_mul(a, b))
    assert (s, w) == (sa * sb, word_mul(wb, wa))


@given(fpolys)
def test_fpoly_adjoint_involution(p):
    assert p.adjoint().adjoint() == p


@given(fpolys, fpolys)
def test_derivation_leibniz(p, q):
    for k in (1, 4):
        lhs = (p * q).derive(k)
        rhs = p.derive(k) * q + p * q.derive(k)
        assert lhs == rhs


def test_cyclic_canonical_invariance():
    w = (phi(1), sigma_f(2), phi_star(3))
    rotations = [w[i:] + w[:i] for i in range(len(w))]
    canon = {cyclic_canonical(r) for r in rotations}
    assert len(canon) == 1


@given(words, words)
def test_trace_cyclic(a, b):
    tab = trace_F(FPoly.of(word_mul(a, b)))
    tba = trace_F(FPoly.of(word_mul(b, a)))
    assert tab == tba


def test_trace_of_identity_word():
    t = trace_F(F_ONE)
    # the empty word traces to the formal fiber dimension
    assert t == TraceExpr.of_scalar(ScalarExpr.symbol("dimF"))


@given(fpolys, fpolys)
def test_trace_linear(p, q):
    assert trace_F(p) + trace_F(q) == trace_F(p + q)


def test_trace_zero():
    assert trace_F(FPoly.of(0)) == TRACE_ZERO
    assert (trace_F(FPoly.of(phi(1))) - trace_F(FPoly.of(phi(1)))).is_zero()
