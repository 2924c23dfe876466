"""Formal traces over the twist bundle F.

Tr_F is linear and cyclic; the empty word contributes the distinguished
scalar symbol dimF.  A TraceExpr is a ScalarExpr-linear combination of
multisets of trace atoms, each atom stored in its cyclically minimal
rotation so that Tr_F(uv) and Tr_F(vu) hash identically.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Tuple

from .scalars import ScalarExpr, SCALAR_ZERO, SCALAR_ONE, DIM_F
from .words import FAtom, FWord, FPoly, EMPTY_WORD

# A trace atom is a nonempty tuple of FAtom in canonical cyclic rotation.
TraceAtom = Tuple[FAtom, ...]
# A term key is a sorted tuple of trace atoms (multiset of trace factors).
TraceKey = Tuple[TraceAtom, ...]

EMPTY_KEY: TraceKey = ()


def cyclic_canonical(atoms: Tuple[FAtom, ...]) -> TraceAtom:
    if len(atoms) <= 1:
        return atoms
    rotations = [atoms[k:] + atoms[:k] for k in range(len(atoms))]
    return min(rotations, key=lambda t: tuple(a.sort_key() for a in t))


def _key_sort(key) -> TraceKey:
    return tuple(sorted(key, key=lambda t: tuple(a.sort_key() for a in t)))


@dataclass(frozen=True)
class TraceExpr:
    terms: Tuple[Tuple[TraceKey, ScalarExpr], ...]

    @staticmethod
    def from_dict(d: Dict[TraceKey, ScalarExpr]) -> "TraceExpr":
        items = tuple(sorted(
            ((k, c) for k, c in d.items() if c),
            key=lambda kv: tuple(tuple(a.sort_key() for a in t) for t in kv[0]),
        ))
        return TraceExpr(items)

    @staticmethod
    def of_scalar(c) -> "TraceExpr":
        c = c if isinstance(c, ScalarExpr) else ScalarExpr.const(c)
        return TraceExpr.from_dict({EMPTY_KEY: c})

    def as_dict(self) -> Dict[TraceKey, ScalarExpr]:
        return dict(self.terms)

    def __add__(self, other) -> "TraceExpr":
        o = _coerce(other)
        d = self.as_dict()
        for k, c in o.terms:
            d[k] = d.get(k, SCALAR_ZERO) + c
        return TraceExpr.from_dict(d)

    __radd__ = __add__

    def __neg__(self) -> "TraceExpr":
        return TraceExpr(tuple((k, -c) for k, c in self.terms))

    def __sub__(self, other) -> "TraceExpr":
        return self + (-_coerce(other))

    def __rsub__(self, other) -> "TraceExpr":
        return _coerce(other) + (-self)

    def __mul__(self, other) -> "TraceExpr":
        o = _coerce(other)
        d: Dict[TraceKey, ScalarExpr] = {}
        for k1, c1 in self.terms:
            for k2, c2 in o.terms:
                k = _key_sort(k1 + k2)
                d[k] = d.get(k, SCALAR_ZERO) + c1 * c2
        return TraceExpr.from_dict(d)

    __rmul__ = __mul__

    def scale(self, c) -> "TraceExpr":
        c = c if isinstance(c, ScalarExpr) else ScalarExpr.const(c)
        return TraceExpr.from_dict({k: cc * c for k, cc in self.terms})

    def substitute_scalars(self, assignment) -> "TraceExpr":
        d: Dict[TraceKey, ScalarExpr] = {}
        for k, c in self.terms:
            nc = c.substitute(assignment)
            if nc:
                d[k] = d.get(k, SCALAR_ZERO) + nc
        return TraceExpr.from_dict(d)

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for k, c in self.terms:
            tr = "*".join(
                "TrF[" + "*".join(str(a) for a in atom) + "]" for atom in k)
            cs = str(c)
            if tr:
                parts.append(f"({cs})*{tr}")
            else:
                parts.append(f"({cs})")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"TraceExpr({self})"


def _coerce(x) -> TraceExpr:
    if isinstance(x, TraceExpr):
        return x
    if isinstance(x, (ScalarExpr, int)):
        return TraceExpr.of_scalar(x)
    raise TypeError(f"cannot coerce {x!r} to TraceExpr")


TRACE_ZERO = TraceExpr(())


def trace_F(p) -> TraceExpr:
    """Formal trace of a word or linear combination of words."""
    p = FPoly.of(p)
    d: Dict[TraceKey, ScalarExpr] = {}
    for w, c in p.terms:
        if w.is_identity():
            key = EMPTY_KEY
            c = c * DIM_F
        else:
            key = (cyclic_canonical(w.atoms),)
        d[key] = d.get(key, SCALAR_ZERO) + c
    return TraceExpr.from_dict(d)
