"""Clifford representations: relations, adjointness, and trace values."""

import pytest

from wresverify.clifford import SPIN, SIGNATURE, DIM, get_model
from wresverify.matrices import Matrix
from wresverify.rationals import ZERO, gauss

MODELS = [SPIN, SIGNATURE]


@pytest.mark.parametrize("model", MODELS, ids=["spin", "signature"])
def test_anticommutation(model):
    minus_two = model.identity.scale(gauss(-2))
    for i in range(1, DIM + 1):
        for j in range(1, DIM + 1):
            anti = model.c(i) * model.c(j) + model.c(j) * model.c(i)
            assert anti == (minus_two if i == j else
                            Matrix.zero(model.rep_dim))


def test_signature_second_action():
    model = SIGNATURE
    two = model.identity.scale(gauss(2))
    for i in range(1, DIM + 1):
        for j in range(1, DIM + 1):
            anti = model.cohat(i) * model.cohat(j) \
                + model.cohat(j) * model.cohat(i)
            assert anti == (two if i == j else Matrix.zero(model.rep_dim))
            # the two actions anticommute with each other
            mixed = model.c(i) * model.cohat(j) \
                + model.cohat(j) * model.c(i)
            assert mixed == Matrix.zero(model.rep_dim)
            # chat is self-adjoint (it squares to +1)
    assert model.cohat(1).conj_transpose() == model.cohat(1)


@pytest.mark.parametrize("model", MODELS, ids=["spin", "signature"])
def test_antiselfadjoint(model):
    for i in range(1, DIM + 1):
        assert model.c(i).conj_transpose() == model.c(i).scale(gauss(-1))


@pytest.mark.parametrize("model", MODELS, ids=["spin", "signature"])
def test_traces(model):
    for i in range(1, DIM + 1):
        assert model.trace_rep(model.c(i)) == ZERO
        sq = model.c(i) * model.c(i)
        assert model.trace_rep(sq) == gauss(-model.rep_dim)
        for j in range(1, DIM + 1):
            if i != j:
                assert model.trace_rep(model.c(i) * model.c(j)) == ZERO


def test_rep_dims():
    assert SPIN.rep_dim == 4
    assert SIGNATURE.rep_dim == 16
    assert get_model("spin4") is SPIN
    assert get_model("signature4") is SIGNATURE
