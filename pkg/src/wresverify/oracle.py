"""Numeric oracle: substitute exact random matrices for the formal
F-endomorphism atoms and check identities by direct computation.

Assignments respect the adjoint involution: starred atoms get the
conjugate transpose of their partner, self-adjoint (resp. anti-
selfadjoint) atoms get their Hermitian (resp. anti-Hermitian) part.
Entries are drawn from {-2..2} + {-2..2}i so intermediate fractions
stay small.
"""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Dict, Iterable, Optional

from .matrices import Matrix
from .rationals import GaussRational, ZERO, ONE, gauss
from .scalars import ScalarExpr
from .traces import TraceExpr
from .words import FAtom, FWord, FPoly, star_atom


def random_matrix(dim: int, rng: random.Random) -> Matrix:
    return Matrix.of([
        [gauss(rng.randint(-2, 2), rng.randint(-2, 2)) for _ in range(dim)]
        for _ in range(dim)])


class OracleAssignment:
    """Involution-consistent map FAtom -> exact matrix of fixed size."""

    def __init__(self, dim: int, seed: int = 0):
        self.dim = dim
        self.rng = random.Random(seed)
        self.matrices: Dict[FAtom, Matrix] = {}
        self._word_cache: Dict[FWord, Matrix] = {}
        self._word_int_cache: Dict[FWord, tuple] = {}

    def matrix_for(self, atom: FAtom) -> Matrix:
        if atom not in self.matrices:
            self._assign(atom)
        return self.matrices[atom]

    def _assign(self, atom: FAtom) -> None:
        sign, partner = star_atom(atom)
        if partner == atom:
            # rho(a)^dagger = sign * rho(a): symmetric projection, kept
            # unhalved so all assigned entries stay Gaussian integers
            a = random_matrix(self.dim, self.rng)
            self.matrices[atom] = a + a.conj_transpose().scale(sign)
        elif partner in self.matrices:
            m = self.matrices[partner].conj_transpose()
            self.matrices[atom] = m.scale(sign)
        else:
            self.matrices[atom] = random_matrix(self.dim, self.rng)

    # -- evaluation ---------------------------------------------------------

    def word(self, w: FWord) -> Matrix:
        if w in self._word_cache:
            return self._word_cache[w]
        out = Matrix.identity(self.dim)
        for a in w.atoms:
            out = out * self.matrix_for(a)
        self._word_cache[w] = out
        return out

    def word_int_rows(self, w: FWord):
        """Word matrix as integer (re, im) pairs; all assigned atom
        matrices have Gaussian-integer entries, so this is lossless."""
        if w in self._word_int_cache:
            return self._word_int_cache[w]
        m = self.word(w)
        rows = tuple(tuple(_int_pair(g) for g in r) for r in m.rows)
        self._word_int_cache[w] = rows
        return rows

    def fpoly(self, p: FPoly,
              scalars: Optional[Dict[str, GaussRational]] = None) -> Matrix:
        out = Matrix.zero(self.dim)
        for w, c in p.terms:
            out = out + self.word(w).scale(_scalar_value(c, scalars, self.dim))
        return out

    def trace_expr(self, t: TraceExpr,
                   scalars: Optional[Dict[str, GaussRational]] = None
                   ) -> GaussRational:
        total = ZERO
        for key, c in t.terms:
            val = _scalar_value(c, scalars, self.dim)
            for atoms in key:
                val = val * self.word(FWord(atoms)).trace()
            total = total + val
        return total


def _scalar_value(c: ScalarExpr, scalars, dim: int) -> GaussRational:
    assignment = dict(scalars or {})
    assignment.setdefault("dimF", GaussRational.of(dim))
    sub = c.substitute(assignment)
    for m, _ in sub.terms:
        if m:
            raise ValueError(f"unassigned scalar symbol(s) in {c}: {m}")
    return sub.constant_part()


def substitute_matrices(e, assignment: OracleAssignment,
                        scalars: Optional[Dict[str, GaussRational]] = None):
    """Evaluate a word / word-combination / trace expression numerically."""
    if isinstance(e, FWord):
        return assignment.word(e)
    if isinstance(e, FAtom):
        return assignment.matrix_for(e)
    if isinstance(e, FPoly):
        return assignment.fpoly(e, scalars)
    if isinstance(e, TraceExpr):
        return assignment.trace_expr(e, scalars)
    raise TypeError(f"cannot substitute into {type(e).__name__}")


def random_scalars(names: Iterable[str], rng: random.Random
                   ) -> Dict[str, GaussRational]:
    """Nonzero rational values for the formal commuting symbols."""
    out = {}
    for name in names:
        v = 0
        while v == 0:
            v = rng.randint(-5, 5)
        out[name] = gauss(v, 0)
    return out


def _const_entry(r) -> GaussRational:
    if r.is_zero():
        return ZERO
    if not r.is_polynomial() or r.num.degree() > 0:
        raise ValueError("symbol entry depends on xi_n; cannot substitute")
    return r.num.coeffs[0]


# hot-loop arithmetic on scaled integer (re, im) pairs: the random
# inputs are Gaussian integers, so after clearing the fixed constant
# denominators every operation is native-int

def _pair(g: GaussRational):
    return (g.re, g.im)


def _int_pair(g: GaussRational):
    if g.re.denominator != 1 or g.im.denominator != 1:
        raise ValueError(f"non-integer oracle value {g}")
    return (g.re.numerator, g.im.numerator)


def _scaled_int_pairs(pairs):
    """Clear denominators: returns (integer pairs, common denominator)."""
    from math import lcm
    den = 1
    for re, im in pairs:
        den = lcm(den, re.denominator, im.denominator)
    ints = [((re * den).numerator, (im * den).numerator)
            for re, im in pairs]
    return ints, den


def _int_vec(vec):
    return [_int_pair(v) for v in vec]


def _apply_core(terms, coeffs, entries, assignment, vec, fvec, rep, dim,
                scale: int):
    """Shared substitution loop over scaled integers.

    terms: (coeff index, word, rows) with rows sparse as
    (i, [(j, entry index)]); coeffs and entries are integer pair tables;
    the result is divided by scale at the end.
    """
    out = [[(0, 0)] * dim for _ in range(rep)]
    vp = _int_vec(vec)
    fp = _int_vec(fvec)
    for ci, w, rows in terms:
        cre, cim = coeffs[ci]
        if not cre and not cim:
            continue
        fw = assignment.word_int_rows(w)
        fimg = []
        for a in range(dim):
            sre = sim = 0
            row = fw[a]
            for b in range(dim):
                gre, gim = row[b]
                xre, xim = fp[b]
                sre += gre * xre - gim * xim
                sim += gre * xim + gim * xre
            fimg.append((cre * sre - cim * sim, cre * sim + cim * sre))
        for i, cols in rows:
            are = aim = 0
            for j, ei in cols:
                ere, eim = entries[ei]
                xre, xim = vp[j]
                are += ere * xre - eim * xim
                aim += ere * xim + eim * xre
            if not are and not aim:
                continue
            row = out[i]
            for a in range(dim):
                fre, fim = fimg[a]
                ore, oim = row[a]
                row[a] = (ore + are * fre - aim * fim,
                          oim + are * fim + aim * fre)
    return [[GaussRational(Fraction(re, scale), Fraction(im, scale))
             for re, im in row] for row in out]


class _CompiledBase:
    """Sparse indexed form of a symbol: distinct matrix entries and
    scalar coefficients deduplicated into tables."""

    def __init__(self, e, constant_entries: bool):
        from .symbols import XI_ONE
        self.rep = e.model.rep_dim
        self.terms = []
        self.coeff_keys = []
        self.entry_pool = []
        coeff_index = {}
        entry_index = {}
        for (x, w, s), m in e.terms:
            if constant_entries and x != XI_ONE:
                raise ValueError("xi'-dependent symbol; reduce first")
            ck = (x, s)
            if ck not in coeff_index:
                coeff_index[ck] = len(self.coeff_keys)
                self.coeff_keys.append(ck)
            rows = []
            for i in range(self.rep):
                cols = []
                for j in range(self.rep):
                    r = m.rows[i][j]
                    if r.is_zero():
                        continue
                    if r not in entry_index:
                        entry_index[r] = len(self.entry_pool)
                        self.entry_pool.append(r)
                    cols.append((j, entry_index[r]))
                if cols:
                    rows.append((i, cols))
            self.terms.append((coeff_index[ck], w, rows))

    def _coeff_pairs(self, scalars, dim, xi_prime):
        out = []
        for x, s in self.coeff_keys:
            c = _scalar_value(ScalarExpr.from_dict({s: ONE}), scalars, dim)
            for axis, exp in enumerate(x):
                if exp:
                    c = c * (xi_prime[axis] ** exp)
            out.append(_pair(c))
        return out


class CompiledSymbol(_CompiledBase):
    """Numeric form of a xi-free symbol, compiled once so repeated
    substitution over many seeds stays cheap."""

    def __init__(self, e):
        super().__init__(e, constant_entries=True)
        self.entry_ints, self.entry_den = _scaled_int_pairs(
            [_pair(_const_entry(r)) for r in self.entry_pool])

    def apply(self, assignment: OracleAssignment,
              scalars: Dict[str, GaussRational], vec, fvec):
        """Image of vec (x) fvec: result[i] is the F-space component on
        the i-th representation basis vector."""
        dim = assignment.dim
        ones = (ONE, ONE, ONE)
        coeffs, cden = _scaled_int_pairs(
            self._coeff_pairs(scalars, dim, ones))
        return _apply_core(self.terms, coeffs, self.entry_ints,
                           assignment, vec, fvec, self.rep, dim,
                           cden * self.entry_den)


def symbol_vector(e, assignment: OracleAssignment,
                  scalars: Dict[str, GaussRational], vec, fvec):
    """One-shot convenience wrapper around CompiledSymbol."""
    return CompiledSymbol(e).apply(assignment, scalars, vec, fvec)


class CompiledXiSymbol(_CompiledBase):
    """Like CompiledSymbol, but the entries may depend on xi_n and the
    term keys on xi'; substitution supplies a rational point on the
    |xi'| = 1 sphere together with a real xi_n value."""

    def __init__(self, e):
        super().__init__(e, constant_entries=False)

    def apply(self, assignment: OracleAssignment,
              scalars: Dict[str, GaussRational],
              xi_prime, xin: GaussRational, vec, fvec):
        dim = assignment.dim
        coeffs, cden = _scaled_int_pairs(
            self._coeff_pairs(scalars, dim, xi_prime))
        entries, eden = _scaled_int_pairs(
            [_pair(r.eval(xin)) for r in self.entry_pool])
        return _apply_core(self.terms, coeffs, entries,
                           assignment, vec, fvec, self.rep, dim,
                           cden * eden)


def random_sphere_point(rng: random.Random):
    """Rational point with xi_1^2 + xi_2^2 + xi_3^2 = 1 (stereographic)."""
    u = gauss(rng.randint(-4, 4), 0) / gauss(rng.randint(1, 3))
    v = gauss(rng.randint(-4, 4), 0) / gauss(rng.randint(1, 3))
    n = u * u + v * v + 1
    return ((u + u) / n, (v + v) / n, (u * u + v * v - 1) / n)


def random_vector(n: int, rng: random.Random):
    return [gauss(rng.randint(-3, 3), rng.randint(-3, 3)) for _ in range(n)]
