"""Gaussian rationals: exact arithmetic over Q(i).

Every constant in the engine lives in this field; there is no floating
point anywhere on the verification path.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


def _frac(x) -> Fraction:
    if type(x) is Fraction:
        return x
    if type(x) is int:
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"cannot coerce {x!r} to an exact rational")


@dataclass(frozen=True)
class GaussRational:
    """An element re + im*i of Q(i), both parts exact Fractions."""

    re: Fraction
    im: Fraction = Fraction(0)

    def __post_init__(self):
        if type(self.re) is not Fraction:
            object.__setattr__(self, "re", _frac(self.re))
        if type(self.im) is not Fraction:
            object.__setattr__(self, "im", _frac(self.im))

    # -- constructors ------------------------------------------------------

    @staticmethod
    def of(x) -> "GaussRational":
        if isinstance(x, GaussRational):
            return x
        if isinstance(x, complex):
            raise TypeError("floating complex not allowed; use exact parts")
        return GaussRational(_frac(x))

    @staticmethod
    def i() -> "GaussRational":
        return GaussRational(Fraction(0), Fraction(1))

    # -- ring / field operations ------------------------------------------

    def __add__(self, other) -> "GaussRational":
        if not isinstance(other, (GaussRational, int, Fraction)):
            return NotImplemented
        o = GaussRational.of(other)
        return GaussRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __neg__(self) -> "GaussRational":
        return GaussRational(-self.re, -self.im)

    def __sub__(self, other) -> "GaussRational":
        if not isinstance(other, (GaussRational, int, Fraction)):
            return NotImplemented
        return self + (-GaussRational.of(other))

    def __rsub__(self, other) -> "GaussRational":
        return GaussRational.of(other) + (-self)

    def __mul__(self, other) -> "GaussRational":
        if not isinstance(other, (GaussRational, int, Fraction)):
            return NotImplemented
        o = GaussRational.of(other)
        if self.im == 0:
            if o.im == 0:
                return GaussRational(self.re * o.re)
            return GaussRational(self.re * o.re, self.re * o.im)
        if o.im == 0:
            return GaussRational(self.re * o.re, self.im * o.re)
        return GaussRational(
            self.re * o.re - self.im * o.im,
            self.re * o.im + self.im * o.re,
        )

    __rmul__ = __mul__

    def inverse(self) -> "GaussRational":
        n = self.re * self.re + self.im * self.im
        if n == 0:
            raise ZeroDivisionError("division by zero in Q(i)")
        return GaussRational(self.re / n, -self.im / n)

    def __truediv__(self, other) -> "GaussRational":
        if not isinstance(other, (GaussRational, int, Fraction)):
            return NotImplemented
        return self * GaussRational.of(other).inverse()

    def __rtruediv__(self, other) -> "GaussRational":
        return GaussRational.of(other) * self.inverse()

    def __pow__(self, n: int) -> "GaussRational":
        if n < 0:
            return self.inverse() ** (-n)
        out = ONE
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def conjugate(self) -> "GaussRational":
        return GaussRational(self.re, -self.im)

    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __eq__(self, other) -> bool:
        if isinstance(other, (GaussRational, int, Fraction)):
            o = GaussRational.of(other)
            return self.re == o.re and self.im == o.im
        return NotImplemented

    def __hash__(self):
        return hash((self.re, self.im))

    # Deterministic ordering key: poles etc. sort by (im, re) lexicographic.
    def sort_key(self):
        return (self.im, self.re)

    # -- text form ---------------------------------------------------------

    def __str__(self) -> str:
        def one_part(val: Fraction, unit: str) -> str:
            if unit and abs(val) == 1:
                s = unit
            else:
                s = f"{abs(val)}{'*' if unit else ''}{unit}"
            return ("-" if val < 0 else "") + s

        if self.im == 0:
            return str(self.re)
        if self.re == 0:
            return one_part(self.im, "i")
        im = one_part(self.im, "i")
        if not im.startswith("-"):
            im = "+" + im
        return f"{self.re}{im}"

    def __repr__(self) -> str:
        return f"GaussRational({self})"


ZERO = GaussRational(Fraction(0))
ONE = GaussRational(Fraction(1))
I = GaussRational.i()


def gauss(re, im=0) -> GaussRational:
    """Shorthand constructor accepting ints, Fractions or 'p/q' strings."""
    return GaussRational(_frac(re), _frac(im))
