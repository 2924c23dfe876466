"""Exact matrix models of the Clifford action.

Two models: the 4x4 spinor model (generators c(e_i) with
c(e_i)c(e_j) + c(e_j)c(e_i) = -2 delta_ij) and the 16x16 signature
model on the exterior algebra of R^4, where c = wedge - contraction and
chat = wedge + contraction.  The sign convention c(v)^2 = -|v|^2 is
forced by requiring ic(xi) * ic(xi)/|xi|^2 = Id.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Tuple

from .matrices import Matrix
from .rationals import GaussRational, ZERO, ONE, I, gauss

DIM = 4  # underlying manifold dimension; boundary computations need n = 4


def _kron(a: Matrix, b: Matrix) -> Matrix:
    rows = []
    for i in range(a.n):
        for k in range(b.n):
            rows.append([a[i, j] * b[k, l]
                         for j in range(a.n) for l in range(b.n)])
    return Matrix.of(rows)


@dataclass(frozen=True)
class CliffordModel:
    name: str
    rep_dim: int
    gens: Tuple[Matrix, ...]                 # c(e_1..e_4)
    cohat_gens: Optional[Tuple[Matrix, ...]]  # chat(e_1..e_4), signature only

    def c(self, i: int) -> Matrix:
        return self.gens[i - 1]

    def cohat(self, i: int) -> Matrix:
        if self.cohat_gens is None:
            raise ValueError(f"model {self.name} has no cohat generators")
        return self.cohat_gens[i - 1]

    @property
    def identity(self) -> Matrix:
        return Matrix.identity(self.rep_dim)

    @property
    def zero(self) -> Matrix:
        return Matrix.zero(self.rep_dim)

    def trace_rep(self, m: Matrix) -> GaussRational:
        if m.n != self.rep_dim:
            raise ValueError("matrix size does not match representation")
        return m.trace()


def _assert_relations(model: CliffordModel) -> None:
    n = model.rep_dim
    ident = Matrix.identity(n)
    for i in range(1, DIM + 1):
        for j in range(1, DIM + 1):
            anti = model.c(i) * model.c(j) + model.c(j) * model.c(i)
            want = ident.scale(gauss(-2)) if i == j else Matrix.zero(n)
            if not (anti - want).is_zero():
                raise AssertionError(f"c relation fails at ({i},{j})")
    if model.cohat_gens is not None:
        for i in range(1, DIM + 1):
            for j in range(1, DIM + 1):
                anti = model.cohat(i) * model.cohat(j) \
                    + model.cohat(j) * model.cohat(i)
                want = ident.scale(gauss(2)) if i == j else Matrix.zero(n)
                if not (anti - want).is_zero():
                    raise AssertionError(f"chat relation fails at ({i},{j})")
                mixed = model.c(i) * model.cohat(j) \
                    + model.cohat(j) * model.c(i)
                if not mixed.is_zero():
                    raise AssertionError(f"c/chat mixing fails at ({i},{j})")


def build_spin_model() -> CliffordModel:
    s1 = Matrix.of([[ZERO, ONE], [ONE, ZERO]])
    s2 = Matrix.of([[ZERO, -I], [I, ZERO]])
    s3 = Matrix.of([[ONE, ZERO], [ZERO, -ONE]])
    e2 = Matrix.identity(2)
    gammas = (_kron(s1, e2), _kron(s2, e2), _kron(s3, s1), _kron(s3, s2))
    gens = tuple(g.scale(I) for g in gammas)  # c^2 = -Id
    model = CliffordModel("spin4", 4, gens, None)
    _assert_relations(model)
    return model


def _eps_iota(i: int) -> Tuple[Matrix, Matrix]:
    """Exterior and interior multiplication by e_i^* on Lambda*(R^4).

    Basis vectors are subsets of {1..4} as bitmasks, ordered 0..15; the
    sign is (-1)^{#{j in S : j < i}}.
    """
    n = 16
    eps = [[ZERO] * n for _ in range(n)]
    iot = [[ZERO] * n for _ in range(n)]
    bit = 1 << (i - 1)
    for S in range(n):
        below = bin(S & (bit - 1)).count("1")
        sign = ONE if below % 2 == 0 else -ONE
        if not S & bit:
            eps[S | bit][S] = sign
        else:
            iot[S & ~bit][S] = sign
    return Matrix.of(eps), Matrix.of(iot)


def build_signature_model() -> CliffordModel:
    cs, chats = [], []
    for i in range(1, DIM + 1):
        eps, iot = _eps_iota(i)
        # wedge/contraction relations
        if not (eps * eps).is_zero() or not (iot * iot).is_zero():
            raise AssertionError("eps^2 or iota^2 nonzero")
        if not (eps * iot + iot * eps - Matrix.identity(16)).is_zero():
            raise AssertionError("eps*iota + iota*eps != Id")
        cs.append(eps - iot)
        chats.append(eps + iot)
    model = CliffordModel("signature4", 16, tuple(cs), tuple(chats))
    _assert_relations(model)
    return model


SPIN = build_spin_model()
SIGNATURE = build_signature_model()


def get_model(name: str) -> CliffordModel:
    if name == "spin4":
        return SPIN
    if name == "signature4":
        return SIGNATURE
    raise ValueError(f"unknown Clifford model {name!r}")
