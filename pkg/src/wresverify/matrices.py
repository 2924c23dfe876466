"""Small dense exact matrices.

Entries are any ring elements with +, *, unary -, is_zero (GaussRational
or RatFuncXi in practice).  Nothing clever: the matrices here are at
most 16x16 and exactness matters more than speed, though multiplication
skips zero entries since Clifford generators are very sparse.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Tuple

from .rationals import GaussRational, ZERO, ONE


@dataclass(frozen=True)
class Matrix:
    rows: Tuple[Tuple[object, ...], ...]

    @staticmethod
    def of(rows) -> "Matrix":
        rows = tuple(tuple(r) for r in rows)
        n = len(rows)
        for r in rows:
            if len(r) != len(rows[0]):
                raise ValueError("ragged matrix")
        return Matrix(rows)

    @staticmethod
    def zero(n: int, zero_elem=ZERO) -> "Matrix":
        return Matrix(tuple(tuple(zero_elem for _ in range(n)) for _ in range(n)))

    @staticmethod
    def identity(n: int, one_elem=ONE, zero_elem=ZERO) -> "Matrix":
        return Matrix(tuple(
            tuple(one_elem if i == j else zero_elem for j in range(n))
            for i in range(n)))

    @property
    def n(self) -> int:
        return len(self.rows)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __add__(self, other: "Matrix") -> "Matrix":
        return Matrix(tuple(
            tuple(a + b for a, b in zip(ra, rb))
            for ra, rb in zip(self.rows, other.rows)))

    def __neg__(self) -> "Matrix":
        return Matrix(tuple(tuple(-a for a in r) for r in self.rows))

    def __sub__(self, other: "Matrix") -> "Matrix":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, Matrix):
            n = self.n
            out = []
            for i in range(n):
                acc = [None] * n
                for k in range(n):
                    a = self.rows[i][k]
                    if _is_zero(a):
                        continue
                    brow = other.rows[k]
                    for j in range(n):
                        b = brow[j]
                        if _is_zero(b):
                            continue
                        prod = a * b
                        acc[j] = prod if acc[j] is None else acc[j] + prod
                zero = self.rows[i][i] - self.rows[i][i]
                out.append(tuple(zero if x is None else x for x in acc))
            return Matrix(tuple(out))
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def scale(self, s) -> "Matrix":
        return Matrix(tuple(tuple(_scale(a, s) for a in r) for r in self.rows))

    def map(self, f: Callable) -> "Matrix":
        return Matrix(tuple(tuple(f(a) for a in r) for r in self.rows))

    def trace(self):
        acc = self.rows[0][0]
        for i in range(1, self.n):
            acc = acc + self.rows[i][i]
        return acc

    def transpose(self) -> "Matrix":
        return Matrix(tuple(zip(*self.rows)))

    def conj_transpose(self) -> "Matrix":
        return Matrix(tuple(
            tuple(self.rows[j][i].conjugate() for j in range(self.n))
            for i in range(self.n)))

    def is_zero(self) -> bool:
        return all(_is_zero(a) for r in self.rows for a in r)

    def __str__(self) -> str:
        return "\n".join("[" + ", ".join(str(a) for a in r) + "]"
                         for r in self.rows)


def _is_zero(a) -> bool:
    z = getattr(a, "is_zero", None)
    return z() if callable(z) else a == 0


def _scale(a, s):
    return a * s
