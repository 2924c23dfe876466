"""Commutative polynomial expressions in the formal scalar symbols.

The symbols that occur are `pi` (the circle constant, kept formal),
`hp0` (the normal derivative h'(0) of the collar metric factor),
`Omega` (the formal cosphere volume), `s` (scalar curvature), `dimF`
(rank of the twist bundle, introduced only by the empty formal trace)
and, where a dimension is kept symbolic, `n`.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Iterable, Tuple

from .rationals import GaussRational, ZERO, ONE

# A monomial is a sorted tuple of (symbol, positive exponent).
Monomial = Tuple[Tuple[str, int], ...]

EMPTY_MONO: Monomial = ()


def mono(*pairs: Tuple[str, int]) -> Monomial:
    merged: Dict[str, int] = {}
    for sym, exp in pairs:
        if exp:
            merged[sym] = merged.get(sym, 0) + exp
    return tuple(sorted((s, e) for s, e in merged.items() if e))


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    if not a:
        return b
    if not b:
        return a
    return mono(*(a + b))


def mono_str(m: Monomial) -> str:
    if not m:
        return "1"
    parts = []
    for sym, exp in m:
        parts.append(sym if exp == 1 else f"{sym}^{exp}")
    return "*".join(parts)


@dataclass(frozen=True)
class ScalarExpr:
    """Exact polynomial over Q(i) in commuting formal symbols."""

    terms: Tuple[Tuple[Monomial, GaussRational], ...]

    # -- constructors ------------------------------------------------------

    @staticmethod
    def from_dict(d: Dict[Monomial, GaussRational]) -> "ScalarExpr":
        items = tuple(sorted(
            ((m, c) for m, c in d.items() if not c.is_zero()),
            key=lambda kv: kv[0],
        ))
        return ScalarExpr(items)

    @staticmethod
    def const(c) -> "ScalarExpr":
        c = GaussRational.of(c)
        if c.is_zero():
            return SCALAR_ZERO
        return ScalarExpr(((EMPTY_MONO, c),))

    @staticmethod
    def symbol(name: str, exp: int = 1, coeff=1) -> "ScalarExpr":
        return ScalarExpr.from_dict({mono((name, exp)): GaussRational.of(coeff)})

    # -- ring operations ---------------------------------------------------

    def as_dict(self) -> Dict[Monomial, GaussRational]:
        return dict(self.terms)

    def __add__(self, other) -> "ScalarExpr":
        o = _coerce(other)
        d = self.as_dict()
        for m, c in o.terms:
            d[m] = d.get(m, ZERO) + c
        return ScalarExpr.from_dict(d)

    __radd__ = __add__

    def __neg__(self) -> "ScalarExpr":
        return ScalarExpr(tuple((m, -c) for m, c in self.terms))

    def __sub__(self, other) -> "ScalarExpr":
        return self + (-_coerce(other))

    def __rsub__(self, other) -> "ScalarExpr":
        return _coerce(other) + (-self)

    def __mul__(self, other) -> "ScalarExpr":
        o = _coerce(other)
        d: Dict[Monomial, GaussRational] = {}
        for m1, c1 in self.terms:
            for m2, c2 in o.terms:
                m = mono_mul(m1, m2)
                d[m] = d.get(m, ZERO) + c1 * c2
        return ScalarExpr.from_dict(d)

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return not self.is_zero()

    def constant_part(self) -> GaussRational:
        for m, c in self.terms:
            if m == EMPTY_MONO:
                return c
        return ZERO

    def degree_in(self, sym: str) -> int:
        deg = 0
        for m, _ in self.terms:
            for name, exp in m:
                if name == sym:
                    deg = max(deg, exp)
        return deg

    def substitute(self, assignment: Dict[str, GaussRational]) -> "ScalarExpr":
        """Replace some symbols by exact values; others stay formal."""
        d: Dict[Monomial, GaussRational] = {}
        for m, c in self.terms:
            kept: Iterable[Tuple[str, int]] = []
            val = c
            kept = []
            for sym, exp in m:
                if sym in assignment:
                    val = val * (assignment[sym] ** exp)
                else:
                    kept.append((sym, exp))
            key = tuple(kept)
            d[key] = d.get(key, ZERO) + val
        return ScalarExpr.from_dict(d)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for m, c in self.terms:
            cs = str(c)
            if "+" in cs[1:] or "-" in cs[1:]:
                cs = f"({cs})"
            if m == EMPTY_MONO:
                parts.append(cs)
            elif cs == "1":
                parts.append(mono_str(m))
            elif cs == "-1":
                parts.append("-" + mono_str(m))
            else:
                parts.append(f"{cs}*{mono_str(m)}")
        out = parts[0]
        for p in parts[1:]:
            out += ("+" + p) if not p.startswith("-") else p
        return out

    def __repr__(self) -> str:
        return f"ScalarExpr({self})"


def _coerce(x) -> ScalarExpr:
    if isinstance(x, ScalarExpr):
        return x
    return ScalarExpr.const(x)


SCALAR_ZERO = ScalarExpr(())
SCALAR_ONE = ScalarExpr.const(1)

PI = ScalarExpr.symbol("pi")
HP0 = ScalarExpr.symbol("hp0")
OMEGA = ScalarExpr.symbol("Omega")
S_CURV = ScalarExpr.symbol("s")
DIM_F = ScalarExpr.symbol("dimF")
