"""Boundary symbol algebra.

A SymbolExpr is a finite sum of tensor terms

    (matrix of rational functions in xi_n) x (monomial in xi_1..xi_3)
    x (word in F-atoms) x (monomial in the commuting scalar symbols)

over a fixed Clifford model.  Everything is evaluated at a boundary
point x_0 in the collar normal form (1/h(x_n)) g^boundary + dx_n^2 with
|xi'| restricted to 1; the x_n-derivative rules encode exactly that
restriction:

  * d/dx_n of a denominator power (1+xi_n^2)^k  ->  -k*hp0 * same/(1+xi_n^2)
    (since |xi|^2 depends on x_n through h |xi'|^2 and |xi'|^2 = 1);
  * each tangential covector component xi_i carries a factor sqrt(h), so
    a xi'-monomial of degree d contributes +d*(hp0/2) times itself;
  * F-atoms differentiate to formal Der(n, atom) by Leibniz;
  * tangential x-derivatives vanish at x_0.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Tuple

from .clifford import CliffordModel
from .matrices import Matrix
from .polynomials import (PolyXi, RatFuncXi, P_ONE, R_ZERO, R_ONE)
from .rationals import GaussRational, ZERO, ONE, I, gauss
from .scalars import (ScalarExpr, Monomial, EMPTY_MONO, mono, mono_mul,
                      mono_str, SCALAR_ZERO)
from .traces import TraceKey, EMPTY_KEY, cyclic_canonical
from .words import FAtom, FWord, EMPTY_WORD, word_mul, der

XiMono = Tuple[int, int, int]
XI_ONE: XiMono = (0, 0, 0)

# denominators are powers of |xi|^2 = 1 + xi_n^2 before pi+ splits them
XI_SQ = PolyXi.of([1, 0, 1])

TermKey = Tuple[XiMono, FWord, Monomial]


def _xi_mul(a: XiMono, b: XiMono) -> XiMono:
    return (a[0] + b[0], a[1] + b[1], a[2] + b[2])


def _xi_deg(a: XiMono) -> int:
    return a[0] + a[1] + a[2]


@dataclass(frozen=True)
class SymbolExpr:
    model: CliffordModel
    terms: Tuple[Tuple[TermKey, Matrix], ...]

    # -- construction -------------------------------------------------------

    @staticmethod
    def from_dict(model: CliffordModel, d: Dict[TermKey, Matrix]) -> "SymbolExpr":
        items = []
        for key, m in d.items():
            if not m.is_zero():
                items.append((key, m))
        items.sort(key=lambda kv: _key_sort(kv[0]))
        return SymbolExpr(model, tuple(items))

    @staticmethod
    def zero(model: CliffordModel) -> "SymbolExpr":
        return SymbolExpr(model, ())

    @staticmethod
    def of_matrix(model: CliffordModel, m: Matrix,
                  ximono: XiMono = XI_ONE,
                  fword: FWord = EMPTY_WORD,
                  smono: Monomial = EMPTY_MONO) -> "SymbolExpr":
        mm = m.map(RatFuncXi.of)
        return SymbolExpr.from_dict(model, {(ximono, fword, smono): mm})

    # -- ring structure ------------------------------------------------------

    def as_dict(self) -> Dict[TermKey, Matrix]:
        return dict(self.terms)

    def __add__(self, other: "SymbolExpr") -> "SymbolExpr":
        self._check(other)
        d = self.as_dict()
        for key, m in other.terms:
            d[key] = d[key] + m if key in d else m
        return SymbolExpr.from_dict(self.model, d)

    def __neg__(self) -> "SymbolExpr":
        return SymbolExpr(self.model, tuple((k, -m) for k, m in self.terms))

    def __sub__(self, other: "SymbolExpr") -> "SymbolExpr":
        return self + (-other)

    def scale_rat(self, r) -> "SymbolExpr":
        """Scale by a rational function of xi_n (or a constant)."""
        r = RatFuncXi.of(r)
        return SymbolExpr(self.model,
                          tuple((k, m.map(lambda e: e * r))
                                for k, m in self.terms)) if r else \
            SymbolExpr.zero(self.model)

    def scale_smono(self, sm: Monomial) -> "SymbolExpr":
        return SymbolExpr.from_dict(self.model, {
            (x, w, mono_mul(s, sm)): m for (x, w, s), m in self.terms})

    def scale_scalar(self, c: ScalarExpr) -> "SymbolExpr":
        out = SymbolExpr.zero(self.model)
        for sm, v in c.terms:
            out = out + self.scale_smono(sm).scale_rat(v)
        return out

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return not self.is_zero()

    def _check(self, other: "SymbolExpr") -> None:
        if self.model.name != other.model.name:
            raise ValueError("Clifford model mismatch")

    # -- involution ----------------------------------------------------------

    def conj_transpose(self) -> "SymbolExpr":
        """Formal adjoint of each term (xi variables treated as real)."""
        from .words import adjoint as word_adjoint
        d: Dict[TermKey, Matrix] = {}
        for (x, w, s), m in self.terms:
            sign, wa = word_adjoint(w)
            ma = _rat_matrix_conj_transpose(m)
            if sign < 0:
                ma = -ma
            key = (x, wa, s)
            d[key] = d[key] + ma if key in d else ma
        return SymbolExpr.from_dict(self.model, d)

    # -- text ------------------------------------------------------------------

    def serialize(self) -> str:
        if not self.terms:
            return "0"
        lines = []
        for (x, w, s), m in self.terms:
            xi = "*".join(f"xi{i+1}^{e}" if e > 1 else f"xi{i+1}"
                          for i, e in enumerate(x) if e) or "1"
            entries = "; ".join(
                f"({i},{j})={m[i, j]}"
                for i in range(m.n) for j in range(m.n)
                if not m[i, j].is_zero())
            lines.append(f"[xi'={xi} | F={w} | scal={mono_str(s)}] {entries}")
        return "\n".join(lines)

    def __str__(self) -> str:
        return self.serialize()


def _key_sort(key: TermKey):
    x, w, s = key
    return (x, w.sort_key(), s)


def _rat_matrix_conj_transpose(m: Matrix) -> Matrix:
    def conj_rat(r: RatFuncXi) -> RatFuncXi:
        return RatFuncXi.make(
            PolyXi.of([c.conjugate() for c in r.num.coeffs]),
            PolyXi.of([c.conjugate() for c in r.den.coeffs]))
    return Matrix.of([
        [conj_rat(m[j, i]) for j in range(m.n)] for i in range(m.n)])


# ---------------------------------------------------------------------------
# multiplication and derivations
# ---------------------------------------------------------------------------

def sym_mul(a: SymbolExpr, b: SymbolExpr) -> SymbolExpr:
    a._check(b)
    d: Dict[TermKey, Matrix] = {}
    for (x1, w1, s1), m1 in a.terms:
        for (x2, w2, s2), m2 in b.terms:
            key = (_xi_mul(x1, x2), word_mul(w1, w2), mono_mul(s1, s2))
            prod = m1 * m2
            d[key] = d[key] + prod if key in d else prod
    return SymbolExpr.from_dict(a.model, d)


def d_xi_n(a: SymbolExpr) -> SymbolExpr:
    return SymbolExpr.from_dict(
        a.model, {k: m.map(lambda e: e.diff()) for k, m in a.terms})


def _den_power_of_xisq(den: PolyXi) -> int:
    """den must equal (1+xi_n^2)^k; returns k."""
    deg = den.degree()
    if deg == 0:
        return 0
    if deg % 2:
        raise ValueError(f"denominator {den} is not a power of 1+xin^2")
    k = deg // 2
    if XI_SQ ** k != den:
        raise ValueError(f"denominator {den} is not a power of 1+xin^2")
    return k


def d_x_n(a: SymbolExpr) -> SymbolExpr:
    hp = mono(("hp0", 1))
    d: Dict[TermKey, Matrix] = {}

    def _acc(key: TermKey, m: Matrix):
        if not m.is_zero():
            d[key] = d[key] + m if key in d else m

    for (x, w, s), m in a.terms:
        # rule 1: denominators (1+xi_n^2)^k -> -k*hp0/(1+xi_n^2) extra
        dm = m.map(_d_xn_entry)
        _acc((x, w, mono_mul(s, hp)), dm)
        # rule 2: tangential covector scaling, +deg * hp0/2
        deg = _xi_deg(x)
        if deg:
            _acc((x, w, mono_mul(s, hp)), m.scale(RatFuncXi.of(gauss(deg) / 2)))
        # rule 3: Leibniz over F-atoms -> Der(n, atom)
        for pos in range(len(w.atoms)):
            atoms = list(w.atoms)
            atoms[pos] = der(4, atoms[pos])
            _acc((x, FWord(tuple(atoms)), s), m)
    return SymbolExpr.from_dict(a.model, d)


def _d_xn_entry(r: RatFuncXi) -> RatFuncXi:
    if r.is_zero():
        return r
    k = _den_power_of_xisq(r.den)
    if k == 0:
        return R_ZERO
    return RatFuncXi.make(r.num * gauss(-k), r.den * XI_SQ)


def d_x_tangent(a: SymbolExpr, i: int) -> SymbolExpr:
    """Tangential x-derivatives vanish at x_0 in the collar normal form."""
    if not 1 <= i <= 3:
        raise ValueError("tangential index must be 1..3")
    return SymbolExpr.zero(a.model)


def reduce_on_sphere(a: SymbolExpr) -> SymbolExpr:
    """Eliminate xi_3^2 via xi_3^2 = 1 - xi_1^2 - xi_2^2 (|xi'| = 1)."""
    d: Dict[TermKey, Matrix] = {}
    work = [((x, w, s), m) for (x, w, s), m in a.terms]
    while work:
        (x, w, s), m = work.pop()
        if x[2] >= 2:
            base = (x[0], x[1], x[2] - 2)
            for repl in (base,
                         (base[0] + 2, base[1], base[2]),
                         (base[0], base[1] + 2, base[2])):
                mm = m if repl == base else -m
                work.append(((repl, w, s), mm))
            continue
        key = (x, w, s)
        d[key] = d[key] + m if key in d else m
    return SymbolExpr.from_dict(a.model, d)


# ---------------------------------------------------------------------------
# total trace and cosphere integration
# ---------------------------------------------------------------------------

IntegrandKey = Tuple[XiMono, TraceKey, Monomial]


@dataclass(frozen=True)
class TraceIntegrand:
    terms: Tuple[Tuple[IntegrandKey, RatFuncXi], ...]

    @staticmethod
    def from_dict(d: Dict[IntegrandKey, RatFuncXi]) -> "TraceIntegrand":
        items = tuple(sorted(
            ((k, r) for k, r in d.items() if r),
            key=lambda kv: (kv[0][0],
                            tuple(tuple(a.sort_key() for a in t)
                                  for t in kv[0][1]),
                            kv[0][2]),
        ))
        return TraceIntegrand(items)

    def as_dict(self) -> Dict[IntegrandKey, RatFuncXi]:
        return dict(self.terms)

    def __add__(self, other: "TraceIntegrand") -> "TraceIntegrand":
        d = self.as_dict()
        for k, r in other.terms:
            d[k] = d[k] + r if k in d else r
        return TraceIntegrand.from_dict(d)

    def __neg__(self) -> "TraceIntegrand":
        return TraceIntegrand(tuple((k, -r) for k, r in self.terms))

    def __sub__(self, other: "TraceIntegrand") -> "TraceIntegrand":
        return self + (-other)

    def scale(self, c) -> "TraceIntegrand":
        r = RatFuncXi.of(c)
        return TraceIntegrand.from_dict(
            {k: v * r for k, v in self.terms})

    def is_zero(self) -> bool:
        return not self.terms

    def to_trace_expr(self):
        """Collapse to a TraceExpr; every rational factor must be constant."""
        from .traces import TraceExpr
        d: Dict[TraceKey, ScalarExpr] = {}
        for (x, tk, s), r in self.terms:
            if x != XI_ONE:
                raise ValueError("xi'-monomial survives; integrate first")
            if not r.is_polynomial() or r.num.degree() > 0:
                raise ValueError("xi_n survives; integrate first")
            c = ScalarExpr.from_dict({s: r.num.coeffs[0] if r.num.coeffs
                                      else ZERO})
            d[tk] = d.get(tk, SCALAR_ZERO) + c
        return TraceExpr.from_dict(d)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        lines = []
        for (x, tk, s), r in self.terms:
            xi = "*".join(f"xi{i+1}^{e}" if e > 1 else f"xi{i+1}"
                          for i, e in enumerate(x) if e) or "1"
            tr = "*".join("TrF[" + "*".join(str(a) for a in t) + "]"
                          for t in tk) or "1"
            lines.append(f"[xi'={xi} | {tr} | {mono_str(s)}] {r}")
        return "\n".join(lines)


TI_ZERO = TraceIntegrand(())


def trace_total(a: SymbolExpr) -> TraceIntegrand:
    """Trace over the Clifford module and (formally) over F."""
    d: Dict[IntegrandKey, RatFuncXi] = {}
    for (x, w, s), m in a.terms:
        tr = m.trace()
        if tr.is_zero():
            continue
        if w.is_identity():
            key = (x, EMPTY_KEY, mono_mul(s, mono(("dimF", 1))))
        else:
            key = (x, (cyclic_canonical(w.atoms),), s)
        d[key] = d[key] + tr if key in d else tr
    return TraceIntegrand.from_dict(d)


def _moment(x: XiMono) -> ScalarExpr:
    """Exact moment of the monomial over the unit sphere in R^3, as a
    multiple of the formal volume symbol Omega."""
    deg = _xi_deg(x)
    if any(e % 2 for e in x):
        return SCALAR_ZERO
    omega = mono(("Omega", 1))
    if deg == 0:
        return ScalarExpr.from_dict({omega: ONE})
    if deg == 2:
        return ScalarExpr.from_dict({omega: gauss("1/3")})
    if deg == 4:
        # (Omega/15)(dd + dd + dd): xi_i^4 -> 3/15, xi_i^2 xi_j^2 -> 1/15
        val = gauss("1/5") if 4 in x else gauss("1/15")
        return ScalarExpr.from_dict({omega: val})
    raise ValueError("moment table exhausted")


def sphere_integrate(t: TraceIntegrand) -> TraceIntegrand:
    d: Dict[IntegrandKey, RatFuncXi] = {}
    for (x, tk, s), r in t.terms:
        mcoef = _moment(x)
        for sm, v in mcoef.terms:
            key = (XI_ONE, tk, mono_mul(s, sm))
            add = r * v
            d[key] = d[key] + add if key in d else add
    return TraceIntegrand.from_dict(d)


# ---------------------------------------------------------------------------
# building blocks
# ---------------------------------------------------------------------------

def c_xi_prime(model: CliffordModel) -> SymbolExpr:
    """c(xi') = sum_{i<4} xi_i c(e_i)."""
    out = SymbolExpr.zero(model)
    for i in range(1, 4):
        x = tuple(1 if j == i - 1 else 0 for j in range(3))
        out = out + SymbolExpr.of_matrix(model, model.c(i), ximono=x)
    return out


def c_dx_n(model: CliffordModel) -> SymbolExpr:
    return SymbolExpr.of_matrix(model, model.c(4))


def c_xi(model: CliffordModel) -> SymbolExpr:
    """c(xi) = c(xi') + xi_n c(dx_n)."""
    return c_xi_prime(model) + c_dx_n(model).scale_rat(
        RatFuncXi.of(PolyXi.xin()))


def identity_symbol(model: CliffordModel) -> SymbolExpr:
    return SymbolExpr.of_matrix(model, model.identity)
