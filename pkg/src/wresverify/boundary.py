"""Boundary-term engine: the five cases whose sum is the symbol-level
leftover term of the residue on a manifold with boundary.

For n = 4 and parametrix depth -2, the admissible index set
r - k - |alpha| + l - j - 1 = -4 (r, l <= -1) consists of exactly five
cases.  Each case pairs a half-plane-projected derivative of a
parametrix symbol of the starred operator with a derivative of a
parametrix symbol of the unstarred one, traces, integrates d xi_n by
residues and xi' over the unit sphere, and multiplies by the
combinatorial prefactor (-i)^{|alpha|+j+k+1} / (alpha! (j+k+1)!).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, List, Tuple

from .halfplane import integrate_xi_n, pi_plus
from .operators import (OperatorSpec, ParametrixSymbols, build_operator,
                        parametrix, sigma_minus_one)
from .polynomials import RatFuncXi
from .rationals import GaussRational, ONE, I, gauss
from .scalars import ScalarExpr, mono
from .symbols import (SymbolExpr, sym_mul, d_xi_n, d_x_n, d_x_tangent,
                      reduce_on_sphere, sphere_integrate, trace_total)
from .traces import TraceExpr, TRACE_ZERO, trace_F
from .words import FPoly, phi, phi_star, sigma_f, sigma_fe

CASE_NAMES = ("a(I)", "a(II)", "a(III)", "b", "c")


@dataclass(frozen=True)
class CaseIndex:
    name: str
    r: int
    l: int
    k: int
    j: int
    alpha: int

    def __post_init__(self):
        if self.r - self.k - self.alpha + self.l - self.j - 1 != -4:
            raise ValueError("case indices violate the order constraint")

    def prefactor(self) -> GaussRational:
        from math import factorial
        num = (-I) ** (self.alpha + self.j + self.k + 1)
        return num / gauss(factorial(self.alpha)
                           * factorial(self.j + self.k + 1))


_CASES = {
    "a(I)": CaseIndex("a(I)", -1, -1, 0, 0, 1),
    "a(II)": CaseIndex("a(II)", -1, -1, 0, 1, 0),
    "a(III)": CaseIndex("a(III)", -1, -1, 1, 0, 0),
    "b": CaseIndex("b", -2, -1, 0, 0, 0),
    "c": CaseIndex("c", -1, -2, 0, 0, 0),
}


def enumerate_cases(n: int) -> List[CaseIndex]:
    if n != 4:
        raise ValueError("boundary case enumeration only supports n = 4")
    return [_CASES[name] for name in CASE_NAMES]


@lru_cache(maxsize=None)
def _pair(family: str) -> Tuple[OperatorSpec, ParametrixSymbols,
                                OperatorSpec, ParametrixSymbols]:
    spec_star = build_operator(family, star=True)
    spec = build_operator(family, star=False)
    return spec_star, parametrix(spec_star), spec, parametrix(spec)


def _pipeline(integrand: SymbolExpr, pref: GaussRational) -> TraceExpr:
    t = trace_total(reduce_on_sphere(integrand))
    t = sphere_integrate(t)
    t = integrate_xi_n(t)
    return t.to_trace_expr().scale(ScalarExpr.const(pref))


def evaluate_case(case, family: str) -> "BoundaryCaseResult":
    name = case.name if isinstance(case, CaseIndex) else case
    return _evaluate_case_cached(name, family)


@lru_cache(maxsize=None)
def _evaluate_case_cached(case: str, family: str) -> "BoundaryCaseResult":
    idx = _CASES[case]
    spec_star, par_star, spec, par = _pair(family)
    pref = idx.prefactor()
    name = idx.name

    if name == "a(I)":
        value = TRACE_ZERO
        for i in range(1, 4):
            # the tangential x-derivative of sigma_-1 vanishes at x_0,
            # so every |alpha| = 1 contribution is exactly zero
            f2 = d_x_tangent(d_xi_n(par.sigma_m1), i)
            if not f2.is_zero():
                raise AssertionError("tangential derivative unexpectedly "
                                     "nonzero")
        expected = TRACE_ZERO
    elif name == "a(II)":
        f1 = pi_plus(d_x_n(par_star.sigma_m1))
        f2 = d_xi_n(d_xi_n(par.sigma_m1))
        value = _pipeline(sym_mul(f1, f2), pref)
        expected = _scalar_case(family, "-3/8")
    elif name == "a(III)":
        f1 = d_xi_n(pi_plus(par_star.sigma_m1))
        f2 = d_xi_n(d_x_n(par.sigma_m1))
        value = _pipeline(sym_mul(f1, f2), pref)
        expected = _scalar_case(family, "3/8")
    elif name == "b":
        f1 = pi_plus(par_star.sigma_m2)
        f2 = d_xi_n(par.sigma_m1)
        value = _pipeline(sym_mul(f1, f2), pref)
        expected = _scalar_case(family, "9/8") + _twist_trace(family, True)
    elif name == "c":
        f1 = pi_plus(par_star.sigma_m1)
        f2 = d_xi_n(par.sigma_m2)
        value = _pipeline(sym_mul(f1, f2), pref)
        expected = _scalar_case(family, "-9/8") + _twist_trace(family, False)
    else:
        raise ValueError(f"unknown case {name!r}")

    return BoundaryCaseResult(name, family, value, expected,
                              value == expected)


def _rep_ratio(family: str) -> GaussRational:
    # the 16-dimensional exterior representation scales every scalar case
    # value by 4 relative to the 4-dimensional spinor one
    return ONE if family == "dirac" else gauss(4)


def _scalar_case(family: str, coeff: str) -> TraceExpr:
    m = mono(("pi", 1), ("hp0", 1), ("Omega", 1), ("dimF", 1))
    return TraceExpr.of_scalar(
        ScalarExpr.from_dict({m: gauss(coeff) * _rep_ratio(family)}))


PI_OMEGA = ScalarExpr.from_dict({mono(("pi", 1), ("Omega", 1)): ONE})


def _twist_trace(family: str, starred: bool) -> TraceExpr:
    """Twist contribution to cases b (starred operator's sigma_-2) and c."""
    if family == "dirac":
        if starred:
            p = -(FPoly.of(sigma_f(4)) - FPoly.of(phi_star(4)))
        else:
            p = FPoly.of(sigma_f(4)) + FPoly.of(phi(4))
        return trace_F(p).scale(PI_OMEGA)
    # signature: the non-metric part drops out of the traces entirely
    sign = -4 if starred else 4
    return trace_F(FPoly.of(sigma_fe(4)).scale(gauss(sign))).scale(PI_OMEGA)


@dataclass(frozen=True)
class BoundaryCaseResult:
    case: str
    family: str
    value: TraceExpr
    expected: TraceExpr
    match: bool

    def to_record(self) -> Dict[str, object]:
        return {
            "case": self.case,
            "family": self.family,
            "value": str(self.value),
            "expected": str(self.expected),
            "match": self.match,
        }


def evaluate_all(family: str) -> List[BoundaryCaseResult]:
    return [evaluate_case(c, family) for c in enumerate_cases(4)]


def psi_total(family: str) -> TraceExpr:
    total = TRACE_ZERO
    for res in evaluate_all(family):
        total = total + res.value
    return total


@lru_cache(maxsize=None)
def psi_same_operator(family: str) -> TraceExpr:
    """Boundary sum with the unstarred parametrix on both sides of every
    pairing, the combination relevant for the squared operator.  The
    scalar halves of the five cases cancel pairwise just as in the mixed
    pairing, so the total is zero for the exterior family."""
    _, _, spec, par = _pair(family)
    total = TRACE_ZERO
    for idx in enumerate_cases(4):
        pref = idx.prefactor()
        if idx.name == "a(I)":
            continue
        if idx.name == "a(II)":
            integrand = sym_mul(pi_plus(d_x_n(par.sigma_m1)),
                                d_xi_n(d_xi_n(par.sigma_m1)))
        elif idx.name == "a(III)":
            integrand = sym_mul(d_xi_n(pi_plus(par.sigma_m1)),
                                d_xi_n(d_x_n(par.sigma_m1)))
        elif idx.name == "b":
            integrand = sym_mul(pi_plus(par.sigma_m2),
                                d_xi_n(par.sigma_m1))
        else:
            integrand = sym_mul(pi_plus(par.sigma_m1),
                                d_xi_n(par.sigma_m2))
        total = total + _pipeline(integrand, pref)
    return total


def split_case(name: str, family: str) -> Tuple[TraceExpr, TraceExpr]:
    """Geometric/twist split of case b or c.

    The twist piece is the parametrix contribution linear in the twist
    part of sigma_0 (the sandwich -sigma_-1 sigma_0^twist sigma_-1); the
    geometric piece is everything else.  Their sum must reproduce the
    unsplit case value.
    """
    from .operators import twist_sigma0
    idx = _CASES[name]
    spec_star, par_star, spec, par = _pair(family)
    pref = idx.prefactor()
    sm1 = sigma_minus_one(spec.model)
    if name == "b":
        tw = twist_sigma0(family, star=True)
        sandwich = -sym_mul(sm1, sym_mul(tw, sm1))
        f2 = d_xi_n(par.sigma_m1)
        twist_val = _pipeline(sym_mul(pi_plus(sandwich), f2), pref)
        geo_val = _pipeline(
            sym_mul(pi_plus(par_star.sigma_m2 - sandwich), f2), pref)
    elif name == "c":
        tw = twist_sigma0(family, star=False)
        sandwich = -sym_mul(sm1, sym_mul(tw, sm1))
        f1 = pi_plus(par_star.sigma_m1)
        twist_val = _pipeline(sym_mul(f1, d_xi_n(sandwich)), pref)
        geo_val = _pipeline(
            sym_mul(f1, d_xi_n(par.sigma_m2 - sandwich)), pref)
    else:
        raise ValueError("split applies to cases b and c only")
    return geo_val, twist_val
