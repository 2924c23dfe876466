"""Free noncommutative algebra of twist-endomorphism symbols.

Atoms are the endomorphism-valued coefficients living on the auxiliary
bundle F: the connection 1-form pieces Phi/PhiStar, the metric
connection coefficients SigmaF (and the Euclidean-connection analogue
SigmaFe), the non-metricity form OmegaF/OmegaFStar, curvatures RF/RFe,
and formal directional derivatives Der(k, atom).  No commutation
relations are imposed: identities must hold in the free algebra.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, Optional, Tuple

from .rationals import GaussRational, ZERO, ONE
from .scalars import ScalarExpr, SCALAR_ZERO, SCALAR_ONE, DIM_F

_KINDS = ("Phi", "PhiStar", "SigmaF", "SigmaFe", "OmegaF", "OmegaFStar",
          "RF", "RFe", "Der")

# kind -> (starred kind, sign)
_STAR_RULE = {
    "Phi": ("PhiStar", 1),
    "PhiStar": ("Phi", 1),
    "SigmaF": ("SigmaF", -1),    # metric part: anti-selfadjoint
    "SigmaFe": ("SigmaFe", -1),
    "OmegaF": ("OmegaFStar", 1),
    "OmegaFStar": ("OmegaF", 1),
    "RF": ("RF", -1),            # curvature of a metric connection
    "RFe": ("RFe", -1),
}


@dataclass(frozen=True)
class FAtom:
    kind: str
    idx: Tuple[int, ...]
    inner: Optional["FAtom"] = None

    def __post_init__(self):
        if self.kind not in _KINDS:
            raise ValueError(f"unknown atom kind {self.kind!r}")
        if self.kind == "Der":
            if self.inner is None:
                raise ValueError("Der atom needs an inner atom")
            if self.inner.der_depth() >= 2:
                raise ValueError("Der nesting depth > 2")
        elif self.inner is not None:
            raise ValueError(f"{self.kind} takes no inner atom")
        if self.kind in ("RF", "RFe") and self.idx[0] >= self.idx[1]:
            raise ValueError("curvature atom indices must satisfy i < j; "
                             "use rf()/rfe() for normalized construction")

    def der_depth(self) -> int:
        d, a = 0, self
        while a.kind == "Der":
            d += 1
            a = a.inner
        return d

    def sort_key(self):
        inner_key = self.inner.sort_key() if self.inner else ()
        return (self.kind, self.idx, inner_key)

    def __str__(self) -> str:
        if self.kind == "Der":
            return f"D[{self.idx[0]}]{{{self.inner}}}"
        return f"{self.kind}[{','.join(map(str, self.idx))}]"


def phi(j: int) -> FAtom:
    return FAtom("Phi", (j,))

def phi_star(j: int) -> FAtom:
    return FAtom("PhiStar", (j,))

def sigma_f(j: int) -> FAtom:
    return FAtom("SigmaF", (j,))

def sigma_fe(j: int) -> FAtom:
    return FAtom("SigmaFe", (j,))

def omega_f(j: int) -> FAtom:
    return FAtom("OmegaF", (j,))

def omega_f_star(j: int) -> FAtom:
    return FAtom("OmegaFStar", (j,))


def rf(i: int, j: int) -> Tuple[int, Optional[FAtom]]:
    """Curvature atom, antisymmetrized: returns (sign, atom or None)."""
    if i == j:
        return 0, None
    if i < j:
        return 1, FAtom("RF", (i, j))
    return -1, FAtom("RF", (j, i))


def rfe(i: int, j: int) -> Tuple[int, Optional[FAtom]]:
    if i == j:
        return 0, None
    if i < j:
        return 1, FAtom("RFe", (i, j))
    return -1, FAtom("RFe", (j, i))


def der(k: int, a: FAtom) -> FAtom:
    return FAtom("Der", (k,), a)


def star_atom(a: FAtom) -> Tuple[int, FAtom]:
    """Adjoint of a single atom: (sign, starred atom)."""
    if a.kind == "Der":
        s, inner = star_atom(a.inner)
        return s, FAtom("Der", a.idx, inner)
    kind, sign = _STAR_RULE[a.kind]
    return sign, FAtom(kind, a.idx)


# ---------------------------------------------------------------------------
# words
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class FWord:
    atoms: Tuple[FAtom, ...] = ()

    @staticmethod
    def of(*atoms: FAtom) -> "FWord":
        return FWord(tuple(atoms))

    def is_identity(self) -> bool:
        return not self.atoms

    def sort_key(self):
        return tuple(a.sort_key() for a in self.atoms)

    def __str__(self) -> str:
        if not self.atoms:
            return "1"
        return "*".join(str(a) for a in self.atoms)


EMPTY_WORD = FWord()


def word_mul(a: FWord, b: FWord) -> FWord:
    return FWord(a.atoms + b.atoms)


def adjoint(w: FWord) -> Tuple[int, FWord]:
    """Anti-homomorphic involution: (sign, reversed word of starred atoms)."""
    sign = 1
    atoms = []
    for a in reversed(w.atoms):
        s, sa = star_atom(a)
        sign *= s
        atoms.append(sa)
    return sign, FWord(tuple(atoms))


# ---------------------------------------------------------------------------
# linear combinations of words over ScalarExpr
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class FPoly:
    """Finite ScalarExpr-linear combination of FWords."""

    terms: Tuple[Tuple[FWord, ScalarExpr], ...]

    @staticmethod
    def from_dict(d: Dict[FWord, ScalarExpr]) -> "FPoly":
        items = tuple(sorted(((w, c) for w, c in d.items() if c),
                             key=lambda kv: kv[0].sort_key()))
        return FPoly(items)

    @staticmethod
    def of(x) -> "FPoly":
        if isinstance(x, FPoly):
            return x
        if isinstance(x, FWord):
            return FPoly.from_dict({x: SCALAR_ONE})
        if isinstance(x, FAtom):
            return FPoly.from_dict({FWord.of(x): SCALAR_ONE})
        return FPoly.from_dict({EMPTY_WORD: _scalar(x)})

    def as_dict(self) -> Dict[FWord, ScalarExpr]:
        return dict(self.terms)

    def __add__(self, other) -> "FPoly":
        o = FPoly.of(other)
        d = self.as_dict()
        for w, c in o.terms:
            d[w] = d.get(w, SCALAR_ZERO) + c
        return FPoly.from_dict(d)

    __radd__ = __add__

    def __neg__(self) -> "FPoly":
        return FPoly(tuple((w, -c) for w, c in self.terms))

    def __sub__(self, other) -> "FPoly":
        return self + (-FPoly.of(other))

    def __rsub__(self, other) -> "FPoly":
        return FPoly.of(other) + (-self)

    def __mul__(self, other) -> "FPoly":
        o = FPoly.of(other)
        d: Dict[FWord, ScalarExpr] = {}
        for w1, c1 in self.terms:
            for w2, c2 in o.terms:
                w = word_mul(w1, w2)
                d[w] = d.get(w, SCALAR_ZERO) + c1 * c2
        return FPoly.from_dict(d)

    def __rmul__(self, other) -> "FPoly":
        return FPoly.of(other) * self

    def scale(self, c) -> "FPoly":
        c = _scalar(c)
        return FPoly.from_dict({w: cc * c for w, cc in self.terms})

    def adjoint(self) -> "FPoly":
        d: Dict[FWord, ScalarExpr] = {}
        for w, c in self.terms:
            s, wa = adjoint(w)
            cc = _conj_scalar(c) if s == 1 else -_conj_scalar(c)
            d[wa] = d.get(wa, SCALAR_ZERO) + cc
        return FPoly.from_dict(d)

    def derive(self, k: int) -> "FPoly":
        """Formal directional derivative: Leibniz over each word."""
        d: Dict[FWord, ScalarExpr] = {}
        for w, c in self.terms:
            for pos in range(len(w.atoms)):
                atoms = list(w.atoms)
                atoms[pos] = der(k, atoms[pos])
                nw = FWord(tuple(atoms))
                d[nw] = d.get(nw, SCALAR_ZERO) + c
        return FPoly.from_dict(d)

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"({c})*{w}" for w, c in self.terms)


def _scalar(x) -> ScalarExpr:
    if isinstance(x, ScalarExpr):
        return x
    return ScalarExpr.const(x)


def _conj_scalar(c: ScalarExpr) -> ScalarExpr:
    # conjugation acts on the Q(i) coefficients; formal symbols are real
    return ScalarExpr(tuple((m, v.conjugate()) for m, v in c.terms))


F_ZERO = FPoly(())
F_ONE = FPoly.of(EMPTY_WORD)
