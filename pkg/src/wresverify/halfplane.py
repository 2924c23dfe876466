"""Half-plane decomposition tools for rational symbols.

pi_plus projects a rational function of xi_n onto the span of principal
parts at poles in the upper half-plane (the part whose inverse Fourier
transform is supported on the positive half-line); polynomial parts and
lower-half principal parts belong to the complement.  Line integrals
over the real axis are evaluated exactly by residues, with the circle
constant kept as the formal scalar symbol `pi`.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Dict

from .polynomials import (PolyXi, RatFuncXi, P_ONE, R_ZERO,
                          partial_fractions)
from .rationals import GaussRational, ZERO, I, gauss
from .scalars import mono, mono_mul, Monomial
from .symbols import SymbolExpr, TraceIntegrand, IntegrandKey, d_xi_n, d_x_n


@dataclass(frozen=True)
class HalfPlaneDecomposition:
    plus_part: RatFuncXi
    minus_part: RatFuncXi


def decompose(r: RatFuncXi) -> HalfPlaneDecomposition:
    poly_part, pieces = partial_fractions(r)
    plus = R_ZERO
    for pole, coeffs in pieces.items():
        if pole.im == 0:
            raise ValueError("symbol not in H: real pole")
        if pole.im < 0:
            continue
        base = RatFuncXi.make(P_ONE, PolyXi.of([-pole, 1]))
        powk = RatFuncXi.of(1)
        for c in coeffs:
            powk = powk * base
            plus = plus + RatFuncXi.of(c) * powk
    return HalfPlaneDecomposition(plus, r - plus)


@lru_cache(maxsize=None)
def pi_plus_rat(r: RatFuncXi) -> RatFuncXi:
    return decompose(r).plus_part


def pi_plus(a: SymbolExpr) -> SymbolExpr:
    return SymbolExpr.from_dict(
        a.model, {k: m.map(pi_plus_rat) for k, m in a.terms})


def d_xi_n_pi_plus(a: SymbolExpr) -> SymbolExpr:
    return d_xi_n(pi_plus(a))


def d_x_n_pi_plus(a: SymbolExpr) -> SymbolExpr:
    # x_n-derivatives commute with the xi_n half-plane projection
    return pi_plus(d_x_n(a))


def _upper_residue_sum(r: RatFuncXi) -> GaussRational:
    _, pieces = partial_fractions(r)
    total = ZERO
    for pole, coeffs in pieces.items():
        if pole.im == 0:
            raise ValueError("symbol not in H: real pole")
        if pole.im > 0:
            total = total + coeffs[0]
    return total


def integrate_rat(r: RatFuncXi) -> GaussRational:
    """Integral of r over the real line, divided by the formal pi.

    The true value is 2*pi*i*(sum of upper residues); the caller is
    responsible for attaching one power of the symbol `pi`.
    """
    if r.is_zero():
        return ZERO
    if r.den.degree() < r.num.degree() + 2:
        raise ValueError("divergent line integral")
    return gauss(0, 2) * _upper_residue_sum(r)


def integrate_xi_n(t: TraceIntegrand) -> TraceIntegrand:
    pi_mono = mono(("pi", 1))
    d: Dict[IntegrandKey, RatFuncXi] = {}
    for (x, tk, s), r in t.terms:
        val = integrate_rat(r)
        if val.is_zero():
            continue
        key = (x, tk, mono_mul(s, pi_mono))
        add = RatFuncXi.of(val)
        d[key] = d[key] + add if key in d else add
    return TraceIntegrand.from_dict(d)


def pi_prime(r: RatFuncXi) -> GaussRational:
    """(1/2pi) times the positively-oriented contour integral around the
    upper half-plane: i * (sum of upper residues).  Vanishes on the
    complement of H+ (polynomials and lower-half principal parts)."""
    if r.is_polynomial():
        return ZERO
    return I * _upper_residue_sum(r)
