"""Operator builders: twisted Dirac and twisted signature families.

Each operator is first-order with leading symbol i*c(xi); the zeroth
order symbol is the sum of a geometric frame-connection part (computed
from the Koszul data of the collar metric (1/h(x_n)) g^boundary +
dx_n^2 at the boundary point x_0) and a twist part built from formal
F-endomorphism atoms.  The parametrix symbols sigma_-1, sigma_-2 are
derived from the composition formula and cross-checked against their
closed displayed forms.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Tuple

from .clifford import CliffordModel, SPIN, SIGNATURE, DIM
from .matrices import Matrix
from .polynomials import PolyXi, RatFuncXi, P_ONE, XIN
from .rationals import GaussRational, ZERO, ONE, I, gauss
from .scalars import mono
from .symbols import (SymbolExpr, sym_mul, d_xi_n, d_x_n, reduce_on_sphere,
                      c_xi, c_xi_prime, c_dx_n, identity_symbol)
from .words import (FWord, phi, phi_star, sigma_f, sigma_fe, omega_f,
                    omega_f_star)

HP0 = mono(("hp0", 1))

# 1/|xi|^2 with |xi'| = 1
INV_XISQ = RatFuncXi.make(P_ONE, PolyXi.of([1, 0, 1]))
R_XIN = RatFuncXi.of(XIN)


def _conn(i: int, s: int, t: int) -> Fraction:
    """<nabla_{e~_i} e~_s, e~_t> at x_0, as a multiple of h'(0).

    For the collar metric the only surviving Christoffel data at x_0 is
    Gamma^n_{ij} = (h'(0)/2) delta_ij and Gamma^i_{jn} = -(h'(0)/2)
    delta_ij; the normal direction is parallel.
    """
    n = DIM
    if i == n:
        return Fraction(0)
    if s < n and t == n and s == i:
        return Fraction(1, 2)
    if s == n and t < n and t == i:
        return Fraction(-1, 2)
    return Fraction(0)


def frame_connection_sigma0(family: str) -> SymbolExpr:
    """Geometric part of sigma_0 at x_0 (one power of hp0 per term)."""
    if family == "dirac":
        model = SPIN
        out = Matrix.zero(model.rep_dim)
        for i in range(1, DIM + 1):
            lift = Matrix.zero(model.rep_dim)
            for s in range(1, DIM + 1):
                for t in range(1, DIM + 1):
                    v = _conn(i, s, t)
                    if v:
                        lift = lift + (model.c(s) * model.c(t)).scale(
                            GaussRational.of(v / 4))
            out = out + model.c(i) * lift
        return SymbolExpr.of_matrix(model, out, smono=HP0)
    if family == "signature":
        # the connection matrix here acts on the frame row vector, i.e. its
        # (s,t) entry is <nabla e~_t, e~_s>; the exterior-bundle lift uses
        # (1/4) omega_{s,t} [chat_s chat_t - c_s c_t]
        model = SIGNATURE
        out = Matrix.zero(model.rep_dim)
        for i in range(1, DIM + 1):
            lift = Matrix.zero(model.rep_dim)
            for s in range(1, DIM + 1):
                for t in range(1, DIM + 1):
                    v = _conn(i, t, s)
                    if v:
                        block = model.cohat(s) * model.cohat(t) \
                            - model.c(s) * model.c(t)
                        lift = lift + block.scale(GaussRational.of(v / 4))
            out = out + model.c(i) * lift
        return SymbolExpr.of_matrix(model, out, smono=HP0)
    raise ValueError(f"unknown family {family!r}")


def twist_sigma0(family: str, star: bool) -> SymbolExpr:
    if family == "dirac":
        model = SPIN
        out = SymbolExpr.zero(model)
        for j in range(1, DIM + 1):
            word = FWord.of(sigma_f(j))
            out = out + SymbolExpr.of_matrix(model, model.c(j), fword=word)
            tw = phi_star(j) if star else phi(j)
            part = SymbolExpr.of_matrix(model, model.c(j), fword=FWord.of(tw))
            out = out + (-part if star else part)
        return out
    if family == "signature":
        model = SIGNATURE
        out = SymbolExpr.zero(model)
        for j in range(1, DIM + 1):
            out = out + SymbolExpr.of_matrix(
                model, model.c(j), fword=FWord.of(sigma_fe(j)))
            w = omega_f_star(j) if star else omega_f(j)
            out = out + SymbolExpr.of_matrix(
                model, model.cohat(j).scale(gauss("-1/2")), fword=FWord.of(w))
        return out
    raise ValueError(f"unknown family {family!r}")


@dataclass(frozen=True)
class OperatorSpec:
    family: str
    star: bool
    model: CliffordModel
    sigma1: SymbolExpr
    sigma0: SymbolExpr


@lru_cache(maxsize=None)
def build_operator(family: str, star: bool,
                   with_twist: bool = True,
                   with_frame: bool = True) -> OperatorSpec:
    model = SPIN if family == "dirac" else SIGNATURE
    sigma1 = c_xi(model).scale_rat(RatFuncXi.of(I))
    sigma0 = SymbolExpr.zero(model)
    if with_frame:
        sigma0 = sigma0 + frame_connection_sigma0(family)
    if with_twist:
        sigma0 = sigma0 + twist_sigma0(family, star)
    return OperatorSpec(family, star, model, sigma1, sigma0)


@dataclass(frozen=True)
class ParametrixSymbols:
    sigma_m1: SymbolExpr
    sigma_m2: SymbolExpr


def sigma_minus_one(model: CliffordModel) -> SymbolExpr:
    return c_xi(model).scale_rat(INV_XISQ * I)


class CompositionError(ValueError):
    def __init__(self, residual: SymbolExpr):
        super().__init__(f"composition residual nonzero:\n{residual}")
        self.residual = residual


@lru_cache(maxsize=None)
def _composition(spec: OperatorSpec) -> Tuple[SymbolExpr, SymbolExpr,
                                              SymbolExpr]:
    """(sigma_-1, sigma_-2, order -1 residual before sphere reduction)."""
    sm1 = sigma_minus_one(spec.model)
    cross = sym_mul(d_xi_n(spec.sigma1), d_x_n(sm1)).scale_rat(
        RatFuncXi.of(-I))
    inner = sym_mul(spec.sigma0, sm1) + cross
    sm2 = -sym_mul(sm1, inner)
    return sm1, sm2, sym_mul(spec.sigma1, sm2) + inner


def parametrix(spec: OperatorSpec) -> ParametrixSymbols:
    """sigma_-1, sigma_-2 of the inverse, from the composition formula.

    Order -1 of sigma(A compose B) at x_0 reads
        sigma_1 sigma_-2 + sigma_0 sigma_-1
        - i d_xi_n(sigma_1) d_x_n(sigma_-1) = 0,
    tangential x-derivatives of sigma_-1 vanishing at x_0; multiply on
    the left by sigma_-1 = sigma_1^{-1}.
    """
    sm1, sm2, raw = _composition(spec)
    residual = reduce_on_sphere(raw)
    if not residual.is_zero():
        raise CompositionError(residual)
    return ParametrixSymbols(sm1, sm2)


def composition_residual(spec: OperatorSpec) -> SymbolExpr:
    """Order -1 part of sigma(operator o parametrix) - 1, before the
    |xi'| = 1 reduction: a symbol that vanishes identically on the
    cosphere but not as a polynomial in xi'."""
    return _composition(spec)[2]


def sigma_m2_display(spec: OperatorSpec) -> SymbolExpr:
    """The closed displayed form of sigma_-2:

        c(xi) sigma_0 c(xi)/|xi|^4
        + c(xi)/|xi|^6 c(dx_n)[d_x_n(c(xi')) |xi|^2 - c(xi) h'(0)|xi'|^2]
    """
    model = spec.model
    cxi = c_xi(model)
    first = sym_mul(sym_mul(cxi, spec.sigma0), cxi).scale_rat(
        INV_XISQ * INV_XISQ)
    dxn_cxiprime = c_xi_prime(model).scale_rat(
        RatFuncXi.of(gauss("1/2"))).scale_smono(HP0)
    bracket = dxn_cxiprime - sym_mul(cxi, identity_symbol(model)).scale_rat(
        INV_XISQ).scale_smono(HP0)
    second = sym_mul(sym_mul(cxi, c_dx_n(model)), bracket).scale_rat(
        INV_XISQ * INV_XISQ)
    return first + second
