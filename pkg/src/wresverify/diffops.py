"""Differential-operator algebra at a normal-coordinate point.

A DiffOpExpr is a finite sum  sum_alpha  f_alpha * d^alpha  where alpha
is a multi-index over d_1..d_4 and each coefficient f_alpha is a
xi-free SymbolExpr (Clifford matrix x F-word x commuting monomial).
Composition obeys Leibniz, with coordinate derivatives of F-atoms kept
as formal Der atoms; all metric data is already specialized to the
normal-coordinate point (g = delta, Gamma = 0, vanishing frame
derivatives), so matrix coefficients are constant.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Dict, List, Tuple

from .clifford import CliffordModel, DIM
from .matrices import Matrix
from .rationals import GaussRational, gauss
from .symbols import SymbolExpr, sym_mul, identity_symbol
from .words import FWord, der

MultiIndex = Tuple[int, int, int, int]

MI_ZERO: MultiIndex = (0, 0, 0, 0)


def mi_unit(j: int) -> MultiIndex:
    return tuple(1 if k == j else 0 for k in range(1, DIM + 1))


def mi_add(a: MultiIndex, b: MultiIndex) -> MultiIndex:
    return tuple(x + y for x, y in zip(a, b))


def mi_order(a: MultiIndex) -> int:
    return sum(a)


def derive_words(a: SymbolExpr, j: int) -> SymbolExpr:
    """Coordinate derivative in direction j: Leibniz over the F-word of
    each term, wrapping one atom at a time in Der(j, .).  Matrices and
    commuting monomials are constant at the evaluation point."""
    out: Dict = {}
    for (x, w, s), m in a.terms:
        for pos in range(len(w.atoms)):
            atoms = list(w.atoms)
            atoms[pos] = der(j, atoms[pos])
            key = (x, FWord(tuple(atoms)), s)
            out[key] = out[key] + m if key in out else m
    return SymbolExpr.from_dict(a.model, out)


def _iter_sub(alpha: MultiIndex):
    """All gamma <= alpha with the product of binomial coefficients."""
    ranges = [range(k + 1) for k in alpha]

    def rec(i, acc, coeff):
        if i == len(alpha):
            yield tuple(acc), coeff
            return
        for g in ranges[i]:
            yield from rec(i + 1, acc + [g], coeff * comb(alpha[i], g))
    yield from rec(0, [], 1)


@dataclass(frozen=True)
class DiffOpExpr:
    model: CliffordModel
    terms: Tuple[Tuple[MultiIndex, SymbolExpr], ...]

    @staticmethod
    def from_dict(model: CliffordModel,
                  d: Dict[MultiIndex, SymbolExpr]) -> "DiffOpExpr":
        items = sorted((k, v) for k, v in d.items() if not v.is_zero())
        return DiffOpExpr(model, tuple(items))

    @staticmethod
    def zero(model: CliffordModel) -> "DiffOpExpr":
        return DiffOpExpr(model, ())

    @staticmethod
    def of(coeff: SymbolExpr, alpha: MultiIndex = MI_ZERO) -> "DiffOpExpr":
        return DiffOpExpr.from_dict(coeff.model, {alpha: coeff})

    def as_dict(self) -> Dict[MultiIndex, SymbolExpr]:
        return dict(self.terms)

    def coefficient(self, alpha: MultiIndex) -> SymbolExpr:
        for k, v in self.terms:
            if k == alpha:
                return v
        return SymbolExpr.zero(self.model)

    def order(self) -> int:
        return max((mi_order(k) for k, _ in self.terms), default=0)

    def __add__(self, other: "DiffOpExpr") -> "DiffOpExpr":
        d = self.as_dict()
        for k, v in other.terms:
            d[k] = d[k] + v if k in d else v
        return DiffOpExpr.from_dict(self.model, d)

    def __neg__(self) -> "DiffOpExpr":
        return DiffOpExpr(self.model, tuple((k, -v) for k, v in self.terms))

    def __sub__(self, other: "DiffOpExpr") -> "DiffOpExpr":
        return self + (-other)

    def scale_rat(self, r) -> "DiffOpExpr":
        return DiffOpExpr(self.model,
                          tuple((k, v.scale_rat(r)) for k, v in self.terms))

    def compose(self, other: "DiffOpExpr") -> "DiffOpExpr":
        """Operator composition: (f d^a)(g d^b) =
        sum_{c <= a} binom(a, c) f * d^c(g) * d^{a-c+b}."""
        d: Dict[MultiIndex, SymbolExpr] = {}
        for alpha, f in self.terms:
            for beta, g in other.terms:
                for gamma, coeff in _iter_sub(alpha):
                    dg = g
                    for j in range(1, DIM + 1):
                        for _ in range(gamma[j - 1]):
                            dg = derive_words(dg, j)
                    if dg.is_zero():
                        continue
                    part = sym_mul(f, dg)
                    if coeff != 1:
                        part = part.scale_rat(gauss(coeff))
                    key = mi_add(tuple(a - c for a, c in zip(alpha, gamma)),
                                 beta)
                    d[key] = d[key] + part if key in d else part
        return DiffOpExpr.from_dict(self.model, d)

    def is_zero(self) -> bool:
        return not self.terms

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        bits = []
        for k, v in self.terms:
            ds = "".join(f"d{j+1}^{e}" if e > 1 else f"d{j+1}"
                         for j, e in enumerate(k) if e)
            bits.append(f"[{v}]" + (f"*{ds}" if ds else ""))
        return "\n+ ".join(bits)


@dataclass(frozen=True)
class LaplaceData:
    omegas: Tuple[SymbolExpr, ...]
    e: SymbolExpr

    def rebuild(self) -> DiffOpExpr:
        """-[sum_j (d_j + omega_j)^2 + E], for the round-trip check."""
        model = self.e.model
        out = DiffOpExpr.of(-self.e)
        for j in range(1, DIM + 1):
            w = self.omegas[j - 1]
            step = DiffOpExpr.from_dict(model, {
                mi_unit(j): identity_symbol(model), MI_ZERO: w})
            out = out - step.compose(step)
        return out


def extract_laplace(p: DiffOpExpr) -> LaplaceData:
    """Unique (omega, E) with p = -[sum (d_j)^2 + A^j d_j + B],
    omega_j = A^j/2, E = B - sum_j (d_j(omega_j) + omega_j^2)."""
    model = p.model
    ident = identity_symbol(model)
    for alpha, coeff in p.terms:
        if mi_order(alpha) == 2:
            if max(alpha) != 2:
                raise ValueError("non-scalar leading symbol: mixed "
                                 "second-order term")
            if not (coeff + ident).is_zero():
                raise ValueError("non-scalar leading symbol")
        elif mi_order(alpha) > 2:
            raise ValueError("operator order exceeds two")
    for j in range(1, DIM + 1):
        mi2 = mi_add(mi_unit(j), mi_unit(j))
        if not (p.coefficient(mi2) + ident).is_zero():
            raise ValueError("non-scalar leading symbol")
    omegas = []
    for j in range(1, DIM + 1):
        a_j = -p.coefficient(mi_unit(j))
        omegas.append(a_j.scale_rat(gauss("1/2")))
    b = -p.coefficient(MI_ZERO)
    e = b
    for j in range(1, DIM + 1):
        w = omegas[j - 1]
        e = e - derive_words(w, j) - sym_mul(w, w)
    return LaplaceData(tuple(omegas), e)
