"""Polynomials and rational functions in the normal covariable xi_n.

Coefficients are Gaussian rationals.  Rational functions are kept in a
canonical reduced form (monic denominator, gcd 1) so that equal
functions compare equal structurally.  Pole factorization is restricted
to denominators splitting into linear factors over Q(i); anything else
is an error, since every denominator that actually occurs is a product
of (xi_n - i)^a (xi_n + i)^b.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Tuple

import sympy

from .rationals import GaussRational, ZERO, ONE, I, gauss


# ---------------------------------------------------------------------------
# polynomials
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class PolyXi:
    """Dense polynomial in xi_n, coefficients low -> high, no trailing zeros."""

    coeffs: Tuple[GaussRational, ...]

    @staticmethod
    def of(coeffs) -> "PolyXi":
        cs = [GaussRational.of(c) for c in coeffs]
        while cs and cs[-1].is_zero():
            cs.pop()
        return PolyXi(tuple(cs))

    @staticmethod
    def const(c) -> "PolyXi":
        return PolyXi.of([c])

    @staticmethod
    def xin() -> "PolyXi":
        return PolyXi.of([0, 1])

    def degree(self) -> int:
        # degree of the zero polynomial is -1 by convention here
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def leading(self) -> GaussRational:
        if self.is_zero():
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __add__(self, other: "PolyXi") -> "PolyXi":
        a, b = self.coeffs, other.coeffs
        n = max(len(a), len(b))
        out = []
        for k in range(n):
            x = a[k] if k < len(a) else ZERO
            y = b[k] if k < len(b) else ZERO
            out.append(x + y)
        return PolyXi.of(out)

    def __neg__(self) -> "PolyXi":
        return PolyXi(tuple(-c for c in self.coeffs))

    def __sub__(self, other: "PolyXi") -> "PolyXi":
        return self + (-other)

    def __mul__(self, other) -> "PolyXi":
        if isinstance(other, (GaussRational, int, Fraction)):
            c = GaussRational.of(other)
            return PolyXi.of([x * c for x in self.coeffs])
        if not isinstance(other, PolyXi):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return P_ZERO
        out = [ZERO] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            for j, y in enumerate(b):
                out[i + j] = out[i + j] + x * y
        return PolyXi.of(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "PolyXi":
        out = P_ONE
        for _ in range(n):
            out = out * self
        return out

    def divmod(self, other: "PolyXi") -> Tuple["PolyXi", "PolyXi"]:
        if other.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        q = [ZERO] * max(0, len(self.coeffs) - len(other.coeffs) + 1)
        rem = list(self.coeffs)
        dlead = other.leading()
        dd = other.degree()
        while len(rem) - 1 >= dd and any(not c.is_zero() for c in rem):
            while rem and rem[-1].is_zero():
                rem.pop()
            if len(rem) - 1 < dd:
                break
            k = len(rem) - 1 - dd
            c = rem[-1] / dlead
            q[k] = q[k] + c
            for j, oc in enumerate(other.coeffs):
                rem[k + j] = rem[k + j] - c * oc
        return PolyXi.of(q), PolyXi.of(rem)

    def monic(self) -> "PolyXi":
        if self.is_zero():
            return self
        inv = self.leading().inverse()
        return PolyXi.of([c * inv for c in self.coeffs])

    def gcd(self, other: "PolyXi") -> "PolyXi":
        a, b = self, other
        while not b.is_zero():
            a, b = b, a.divmod(b)[1]
        return a.monic() if not a.is_zero() else a

    def diff(self) -> "PolyXi":
        return PolyXi.of([c * k for k, c in enumerate(self.coeffs)][1:])

    def eval(self, x: GaussRational) -> GaussRational:
        out = ZERO
        for c in reversed(self.coeffs):
            out = out * x + c
        return out

    def shift_root(self, p: GaussRational) -> "PolyXi":
        """Divide out one factor (xi_n - p); remainder must vanish."""
        q, r = self.divmod(PolyXi.of([-p, 1]))
        if not r.is_zero():
            raise ValueError(f"{p} is not a root")
        return q

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        parts = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c.is_zero():
                continue
            cs = str(c)
            neg = False
            if "+" in cs[1:] or "-" in cs[1:]:
                cs = f"({cs})"
            elif cs.startswith("-"):
                neg = True
                cs = cs[1:]
            if k == 0:
                term = cs
            else:
                var = "xin" if k == 1 else f"xin^{k}"
                term = var if cs == "1" else f"{cs}*{var}"
            parts.append(("-" if neg else "+") + term)
        out = "".join(parts)
        return out[1:] if out.startswith("+") else out

    def __repr__(self) -> str:
        return f"PolyXi({self})"


P_ZERO = PolyXi(())
P_ONE = PolyXi.of([1])
XIN = PolyXi.xin()


# ---------------------------------------------------------------------------
# rational functions
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class RatFuncXi:
    num: PolyXi
    den: PolyXi

    @staticmethod
    def make(num: PolyXi, den: PolyXi) -> "RatFuncXi":
        if den.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        if num.is_zero():
            return RatFuncXi(P_ZERO, P_ONE)
        if den.degree() == 0:
            lead = den.leading()
            if lead == ONE:
                return RatFuncXi(num, den)
            return RatFuncXi(num * lead.inverse(), P_ONE)
        if num.degree() == 0:
            lead = den.leading()
            if lead == ONE:
                return RatFuncXi(num, den)
            inv = lead.inverse()
            return RatFuncXi(num * inv, den * inv)
        return _reduced(num, den)

    @staticmethod
    def of(x) -> "RatFuncXi":
        if isinstance(x, RatFuncXi):
            return x
        if isinstance(x, PolyXi):
            return RatFuncXi.make(x, P_ONE)
        return RatFuncXi.make(PolyXi.const(GaussRational.of(x)), P_ONE)

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __bool__(self) -> bool:
        return not self.is_zero()

    def is_polynomial(self) -> bool:
        return self.den.degree() == 0

    def __add__(self, other) -> "RatFuncXi":
        o = RatFuncXi.of(other)
        if self.den == P_ONE and o.den == P_ONE:
            return RatFuncXi(self.num + o.num, P_ONE)
        return RatFuncXi.make(self.num * o.den + o.num * self.den,
                              self.den * o.den)

    __radd__ = __add__

    def __neg__(self) -> "RatFuncXi":
        return RatFuncXi(-self.num, self.den)

    def __sub__(self, other) -> "RatFuncXi":
        return self + (-RatFuncXi.of(other))

    def __rsub__(self, other) -> "RatFuncXi":
        return RatFuncXi.of(other) + (-self)

    def __mul__(self, other) -> "RatFuncXi":
        o = RatFuncXi.of(other)
        if self.den == P_ONE and o.den == P_ONE:
            return RatFuncXi(self.num * o.num, P_ONE)
        return RatFuncXi.make(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def inverse(self) -> "RatFuncXi":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero rational function")
        return RatFuncXi.make(self.den, self.num)

    def __truediv__(self, other) -> "RatFuncXi":
        return self * RatFuncXi.of(other).inverse()

    def __rtruediv__(self, other) -> "RatFuncXi":
        return RatFuncXi.of(other) * self.inverse()

    def diff(self) -> "RatFuncXi":
        # quotient rule, exact
        return RatFuncXi.make(
            self.num.diff() * self.den - self.num * self.den.diff(),
            self.den * self.den,
        )

    def eval(self, x: GaussRational) -> GaussRational:
        d = self.den.eval(x)
        if d.is_zero():
            raise ZeroDivisionError(f"pole at {x}")
        return self.num.eval(x) / d

    def __str__(self) -> str:
        ns = str(self.num)
        if self.is_polynomial():
            return ns
        ds = str(self.den)
        if "+" in ns[1:] or "-" in ns[1:] or "*" in ns or "/" in ns:
            ns = f"({ns})"
        return f"{ns}/({ds})"

    def __repr__(self) -> str:
        return f"RatFuncXi({self})"


@lru_cache(maxsize=None)
def _reduced(num: PolyXi, den: PolyXi) -> RatFuncXi:
    g = num.gcd(den)
    if g.degree() > 0:
        num = num.divmod(g)[0]
        den = den.divmod(g)[0]
    lead = den.leading()
    if lead != ONE:
        inv = lead.inverse()
        num = num * inv
        den = den * inv
    return RatFuncXi(num, den)


R_ZERO = RatFuncXi.of(0)
R_ONE = RatFuncXi.of(1)
R_XIN = RatFuncXi.of(XIN)


def ratfunc_normalize(num: PolyXi, den: PolyXi) -> RatFuncXi:
    return RatFuncXi.make(num, den)


# ---------------------------------------------------------------------------
# pole factorization (the one place we lean on sympy)
# ---------------------------------------------------------------------------

_X = sympy.Symbol("x")


def _to_sympy(p: PolyXi):
    expr = sympy.Integer(0)
    for k, c in enumerate(p.coeffs):
        expr += (sympy.Rational(c.re) + sympy.Rational(c.im) * sympy.I) * _X ** k
    return expr


def _from_sympy_const(v) -> GaussRational:
    re, im = v.as_real_imag()
    return gauss(Fraction(str(re)), Fraction(str(im)))


def linear_pole_factorization(r: RatFuncXi) -> List[Tuple[GaussRational, int]]:
    """Poles of r with multiplicities; denominator must split over Q(i)."""
    return list(_pole_factorization(r.den))


@lru_cache(maxsize=None)
def _pole_factorization(den: PolyXi) -> Tuple[Tuple[GaussRational, int], ...]:
    if den.degree() == 0:
        return ()
    poly = sympy.Poly(_to_sympy(den), _X, domain="QQ_I")
    _, factors = poly.factor_list()
    poles: List[Tuple[GaussRational, int]] = []
    for fac, mult in factors:
        if fac.degree() != 1:
            raise ValueError("pole not in Q(i)")
        a, b = fac.all_coeffs()  # a*x + b
        pole = _from_sympy_const(sympy.together(-b / a))
        poles.append((pole, int(mult)))
    poles.sort(key=lambda pm: pm[0].sort_key())
    # sanity: the factors reproduce the denominator
    check = P_ONE
    for pole, mult in poles:
        check = check * PolyXi.of([-pole, 1]) ** mult
    if check != den:
        raise ValueError("pole not in Q(i)")
    return tuple(poles)


def partial_fractions(r: RatFuncXi):
    """r = poly part + sum over poles p of coeffs[j]/(xin-p)^(j+1).

    Returns (polynomial part: PolyXi, {pole: [c_1, ..., c_m]}) where the
    list entry at index j-1 multiplies 1/(xin-p)^j.
    """
    quot, pieces = _partial_fractions(r)
    return quot, {p: list(cs) for p, cs in pieces}


@lru_cache(maxsize=None)
def _partial_fractions(r: RatFuncXi):
    quot, rem = r.num.divmod(r.den)
    if rem.is_zero():
        return quot, ()
    poles = linear_pole_factorization(r)
    pieces: Dict[GaussRational, List[GaussRational]] = {}
    for pole, m in poles:
        # g = rem / (den / (xin-pole)^m); coefficient of 1/(xin-p)^j is the
        # Taylor coefficient of g at the pole in degree m-j.
        other = r.den
        for _ in range(m):
            other = other.shift_root(pole)
        coeffs = _taylor_at(rem, other, pole, m)
        pieces[pole] = [coeffs[m - j] for j in range(1, m + 1)]
    return quot, tuple((p, tuple(cs)) for p, cs in pieces.items())


def _taylor_at(num: PolyXi, den: PolyXi, p: GaussRational, order: int):
    """First `order` Taylor coefficients of num/den at xi_n = p."""
    nt = _shift_coeffs(num, p, order)
    dt = _shift_coeffs(den, p, order)
    if dt[0].is_zero():
        raise ZeroDivisionError("denominator vanishes at expansion point")
    out = []
    inv0 = dt[0].inverse()
    for k in range(order):
        acc = nt[k]
        for j in range(1, k + 1):
            acc = acc - dt[j] * out[k - j]
        out.append(acc * inv0)
    return out

def _shift_coeffs(poly: PolyXi, p: GaussRational, order: int):
    """Coefficients of poly(p + t) in t, up to degree order-1 (inclusive)."""
    out = [ZERO] * order
    # poly(p+t) = sum_k c_k (p+t)^k expanded by binomials
    pow_cache = [ONE]
    for k, c in enumerate(poly.coeffs):
        if k >= len(pow_cache):
            while len(pow_cache) <= k:
                pow_cache.append(pow_cache[-1] * p)
        binom = 1
        for j in range(0, min(k, order - 1) + 1):
            # C(k, j) * p^(k-j)
            out[j] = out[j] + c * GaussRational.of(binom) * pow_cache[k - j]
            binom = binom * (k - j) // (j + 1)
    return out


def recombine(poly_part: PolyXi, pieces) -> RatFuncXi:
    out = RatFuncXi.of(poly_part)
    for pole, coeffs in pieces.items():
        base = RatFuncXi.make(P_ONE, PolyXi.of([-pole, 1]))
        powk = R_ONE
        for c in coeffs:
            powk = powk * base
            out = out + RatFuncXi.of(c) * powk
    return out


# ---------------------------------------------------------------------------
# canonical text round-trip
# ---------------------------------------------------------------------------

class _Parser:
    """Expressions over integers, `i`, `xin` with + - * / ^ and parens."""

    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def parse(self) -> RatFuncXi:
        v = self.expr()
        self.skip()
        if self.pos != len(self.text):
            raise ValueError(f"unexpected character at {self.pos}: "
                             f"{self.text[self.pos]!r}")
        return v

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self):
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expr(self) -> RatFuncXi:
        ch = self.peek()
        neg = False
        if ch in "+-":
            self.pos += 1
            neg = ch == "-"
        v = self.term()
        if neg:
            v = -v
        while True:
            ch = self.peek()
            if ch == "+":
                self.pos += 1
                v = v + self.term()
            elif ch == "-":
                self.pos += 1
                v = v - self.term()
            else:
                return v

    def term(self) -> RatFuncXi:
        v = self.factor()
        while True:
            ch = self.peek()
            if ch == "*":
                self.pos += 1
                v = v * self.factor()
            elif ch == "/":
                self.pos += 1
                v = v / self.factor()
            else:
                return v

    def factor(self) -> RatFuncXi:
        v = self.atom()
        if self.peek() == "^":
            self.pos += 1
            n = self.integer()
            out = R_ONE
            for _ in range(n):
                out = out * v
            return out
        return v

    def atom(self) -> RatFuncXi:
        ch = self.peek()
        if ch == "(":
            self.pos += 1
            v = self.expr()
            if self.peek() != ")":
                raise ValueError(f"missing ')' at {self.pos}")
            self.pos += 1
            return v
        if self.text.startswith("xin", self.pos):
            self.pos += 3
            return R_XIN
        if ch == "i":
            self.pos += 1
            return RatFuncXi.of(I)
        if ch.isdigit():
            return RatFuncXi.of(self.integer())
        raise ValueError(f"unexpected character at {self.pos}: {ch!r}")

    def integer(self) -> int:
        self.skip()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            raise ValueError(f"expected integer at {start}")
        return int(self.text[start:self.pos])


def parse_ratfunc(text: str) -> RatFuncXi:
    return _Parser(text).parse()
