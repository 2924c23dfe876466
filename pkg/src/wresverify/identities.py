"""Closed-form identity checks: half-plane projections of the standard
symbol combinations and the Clifford trace table.

Each check builds both sides independently (the engine pipeline on the
left, a hand-constructed display on the right) and compares the
canonical forms exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, List, Tuple

from .clifford import SPIN, SIGNATURE, DIM
from .halfplane import pi_plus
from .matrices import Matrix
from .operators import build_operator, sigma_minus_one
from .polynomials import PolyXi, RatFuncXi, P_ONE
from .rationals import GaussRational, ZERO, ONE, I, gauss
from .scalars import ScalarExpr, mono
from .symbols import (SymbolExpr, sym_mul, d_x_n, reduce_on_sphere,
                      sphere_integrate, trace_total, c_xi, c_xi_prime,
                      c_dx_n)
from .traces import TraceExpr

# (xi_n - i) and its square, the only denominators of the plus parts
XIN_MINUS_I = PolyXi.of([-I, 1])
INV_XMI = RatFuncXi.make(P_ONE, XIN_MINUS_I)
INV_XMI2 = RatFuncXi.make(P_ONE, XIN_MINUS_I * XIN_MINUS_I)
INV_XISQ = RatFuncXi.make(P_ONE, PolyXi.of([1, 0, 1]))
INV_XISQ2 = INV_XISQ * INV_XISQ
HP0 = mono(("hp0", 1))


@dataclass(frozen=True)
class IdentityResult:
    name: str
    computed: str
    expected: str
    match: bool


def _compare(name: str, lhs, rhs) -> IdentityResult:
    return IdentityResult(name, str(lhs), str(rhs), lhs == rhs)


def pi_plus_quadratic() -> IdentityResult:
    """pi+ of [c(xi') + xi_n c(dx_n)] / (1+xi_n^2)^2 equals
    -i c(xi')/(4(xi_n-i)) - [c(xi') + i c(dx_n)]/(4(xi_n-i)^2)."""
    model = SPIN
    lhs = pi_plus(c_xi(model).scale_rat(INV_XISQ2))
    quarter = gauss("-1/4")
    rhs = (c_xi_prime(model).scale_rat(INV_XMI * (quarter * I))
           + (c_xi_prime(model)
              + c_dx_n(model).scale_rat(RatFuncXi.of(I))).scale_rat(
               INV_XMI2 * quarter))
    return _compare("pi-plus[quadratic-denominator]", lhs, rhs)


def _dxn_c_xi_prime(model) -> SymbolExpr:
    return d_x_n(c_xi_prime(model))


def pi_plus_linear() -> IdentityResult:
    """pi+ of i d/dx_n[c(xi')] / |xi|^2 equals d/dx_n[c(xi')] / (2(xi_n-i))."""
    model = SPIN
    dc = _dxn_c_xi_prime(model)
    lhs = pi_plus(dc.scale_rat(INV_XISQ * I))
    rhs = dc.scale_rat(INV_XMI * gauss("1/2"))
    return _compare("pi-plus[linear-denominator]", lhs, rhs)


def dxn_pi_plus_leading() -> IdentityResult:
    """d/dx_n of pi+ sigma_-1 in closed form."""
    model = SPIN
    # the x_n-derivative rules act on |xi|^2 denominators, so apply them
    # before the projection; the two operations commute
    lhs = pi_plus(d_x_n(sigma_minus_one(model)))
    inner = (c_xi_prime(model).scale_rat(INV_XMI * (gauss("1/4") * I))
             + (c_xi_prime(model)
                + c_dx_n(model).scale_rat(RatFuncXi.of(I))).scale_rat(
                 INV_XMI2 * gauss("1/4")))
    dc = _dxn_c_xi_prime(model)
    rhs = dc.scale_rat(INV_XMI * gauss("1/2")) \
        + inner.scale_rat(RatFuncXi.of(I)).scale_smono(HP0)
    return _compare("pi-plus[normal-derivative]", lhs, rhs)


def clifford_normal_square(family: str) -> IdentityResult:
    """Matrix trace of c(dx_n)^2 is minus the representation dimension."""
    model = SPIN if family == "dirac" else SIGNATURE
    val = (model.c(4) * model.c(4)).trace()
    return _compare(f"trace[c-normal-squared,{family}]",
                    val, gauss(-model.rep_dim))


def clifford_offdiagonal(family: str) -> IdentityResult:
    """tr[c(e_i) c(e_j)] vanishes for i != j."""
    model = SPIN if family == "dirac" else SIGNATURE
    vals = [(model.c(i) * model.c(j)).trace()
            for i in range(1, DIM + 1) for j in range(1, DIM + 1) if i != j]
    ok = all(v.is_zero() for v in vals)
    return IdentityResult(f"trace[c-offdiagonal,{family}]",
                          "all zero" if ok else "nonzero entry", "all zero",
                          ok)


def tangential_moment() -> IdentityResult:
    """Traced and sphere-integrated d/dx_n[c(xi')] c(xi') equals
    -2 hp0 dimF Omega."""
    model = SPIN
    integrand = sym_mul(_dxn_c_xi_prime(model), c_xi_prime(model))
    t = sphere_integrate(trace_total(reduce_on_sphere(integrand)))
    lhs = t.to_trace_expr()
    rhs = TraceExpr.of_scalar(ScalarExpr.from_dict(
        {mono(("hp0", 1), ("dimF", 1), ("Omega", 1)): gauss(-2)}))
    return _compare("trace[tangential-moment]", lhs, rhs)


def _binom(n: int, k: int) -> int:
    from math import comb
    return comb(n, k) if 0 <= k <= n else 0


def exterior_degree_cancellation() -> List[IdentityResult]:
    """tr over the exterior algebra of [eps_i iota_i - iota_i eps_i]
    [eps_4 iota_4 - iota_4 eps_4] for i < 4: the degree-m diagonal blocks
    contribute C(2,m-2) + C(2,m) - 2 C(2,m-1), summing to zero."""
    model = SIGNATURE
    expected = [_binom(2, m - 2) + _binom(2, m) - 2 * _binom(2, m - 1)
                for m in range(5)]
    out = []
    for i in range(1, 4):
        prod = (model.c(i) * model.cohat(i)) * (model.c(4) * model.cohat(4))
        per_degree = [ZERO] * 5
        for subset in range(16):
            deg = bin(subset).count("1")
            per_degree[deg] = per_degree[deg] + prod[subset, subset]
        got = [str(v) for v in per_degree]
        want = [str(gauss(b)) for b in expected]
        total_ok = sum(per_degree, ZERO).is_zero()
        out.append(IdentityResult(
            f"trace[degree-blocks,{i}]",
            f"{got} sum {'0' if total_ok else 'nonzero'}",
            f"{want} sum 0",
            got == want and total_ok))
    return out


def mixed_clifford_trace() -> IdentityResult:
    """tr[chat(e_i) c(e_j)] vanishes for all i, j."""
    model = SIGNATURE
    vals = [(model.cohat(i) * model.c(j)).trace()
            for i in range(1, DIM + 1) for j in range(1, DIM + 1)]
    ok = all(v.is_zero() for v in vals)
    return IdentityResult("trace[mixed-chat-c]",
                          "all zero" if ok else "nonzero entry", "all zero",
                          ok)


def all_identities() -> List[IdentityResult]:
    out = [pi_plus_quadratic(), pi_plus_linear(), dxn_pi_plus_leading()]
    for family in ("dirac", "signature"):
        out.append(clifford_normal_square(family))
        out.append(clifford_offdiagonal(family))
    out.append(tangential_moment())
    out.extend(exterior_degree_cancellation())
    out.append(mixed_clifford_trace())
    return out
