"""Exact Laurent polynomials over Z, and square matrices of them.

A Laurent polynomial is stored densely: ``low`` is the exponent of the
lowest-degree term and ``coeffs[i]`` is the integer coefficient of
``t^(low + i)``.  Canonical form: ``coeffs`` is empty (the zero polynomial,
with ``low == 0``) or has nonzero first and last entries.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import (
    DimensionMismatch,
    DivisionByZero,
    NegativeExponent,
    NonExactDivision,
)


@dataclass(frozen=True, init=False)
class LaurentPoly:
    low: int
    coeffs: tuple[int, ...]

    def __init__(self, low: int, coeffs: Sequence[int]):
        l, r = 0, len(coeffs)
        while l < r and coeffs[l] == 0:
            l += 1
            low += 1
        while l < r and coeffs[r - 1] == 0:
            r -= 1
        if l == r:
            low = 0
        object.__setattr__(self, "low", low)
        object.__setattr__(self, "coeffs", tuple(coeffs[l:r]))

    # -- queries ---------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int | None:
        """Top degree, or None for the zero polynomial."""
        if not self.coeffs:
            return None
        return self.low + len(self.coeffs) - 1

    def coefficient(self, exponent: int) -> int:
        i = exponent - self.low
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return 0

    # -- ring operations -------------------------------------------------

    def __add__(self, other: LaurentPoly) -> LaurentPoly:
        if not self.coeffs:
            return other
        if not other.coeffs:
            return self
        low = min(self.low, other.low)
        hi = max(self.low + len(self.coeffs), other.low + len(other.coeffs))
        out = [0] * (hi - low)
        for i, c in enumerate(self.coeffs):
            out[self.low - low + i] += c
        for i, c in enumerate(other.coeffs):
            out[other.low - low + i] += c
        return LaurentPoly(low, out)

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly(self.low, [-c for c in self.coeffs])

    def __sub__(self, other: LaurentPoly) -> LaurentPoly:
        return self + (-other)

    def __mul__(self, other: LaurentPoly) -> LaurentPoly:
        if not self.coeffs or not other.coeffs:
            return ZERO
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return LaurentPoly(self.low + other.low, out)

    def exact_div(self, den: LaurentPoly) -> LaurentPoly:
        """Exact quotient in Z[t^(+-1)]; raises NonExactDivision otherwise."""
        if den.is_zero():
            raise DivisionByZero("division by the zero polynomial")
        if self.is_zero():
            return ZERO
        qlow = self.low - den.low
        a = [Fraction(c) for c in self.coeffs]
        d = den.coeffs
        qlen = len(a) - len(d) + 1
        if qlen <= 0:
            raise NonExactDivision(f"{self} is not divisible by {den}")
        q = [Fraction(0)] * qlen
        lead = Fraction(d[-1])
        for i in range(qlen - 1, -1, -1):
            c = a[i + len(d) - 1] / lead
            q[i] = c
            if c:
                for j, dc in enumerate(d):
                    a[i + j] -= c * dc
        if any(a):
            raise NonExactDivision(f"{self} is not divisible by {den}")
        if any(c.denominator != 1 for c in q):
            raise NonExactDivision(f"quotient of {self} by {den} is not integral")
        return LaurentPoly(qlow, [int(c) for c in q])

    def substitute_1plusT(self) -> LaurentPoly:
        """Return f(1+T) as a polynomial in T (Horner in (1+T), exact)."""
        if self.is_zero():
            return ZERO
        if self.low < 0:
            raise NegativeExponent("cannot substitute 1+T into negative powers of t")
        dense = [0] * self.low + list(self.coeffs)
        res: list[int] = []
        for c in reversed(dense):
            res.append(0)
            for i in range(len(res) - 1, 0, -1):
                res[i] += res[i - 1]
            res[0] += c
        return LaurentPoly(0, res)

    def normalize_unit(self) -> LaurentPoly:
        """Canonical representative of the +-t^k orbit: low = 0, lowest coeff > 0."""
        if not self.coeffs:
            return ZERO
        if self.coeffs[0] < 0:
            return LaurentPoly(0, [-c for c in self.coeffs])
        return LaurentPoly(0, self.coeffs)

    # -- rendering -------------------------------------------------------

    def __str__(self) -> str:
        return self.text()

    def text(self, var: str = "t") -> str:
        if not self.coeffs:
            return "0"
        parts: list[str] = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            e = self.low + i
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if e == 0:
                term = str(mag)
            else:
                var_pow = var if e == 1 else f"{var}^{e}"
                term = var_pow if mag == 1 else f"{mag}*{var_pow}"
            if not parts:
                parts.append(term if c > 0 else f"-{term}")
            else:
                parts.append(f" {sign} {term}")
        return "".join(parts)

    def to_json_dict(self) -> dict:
        return {"low": self.low, "coeffs": [str(c) for c in self.coeffs]}

    @classmethod
    def from_json_dict(cls, d: dict) -> LaurentPoly:
        return cls(int(d["low"]), [int(c) for c in d["coeffs"]])

    @classmethod
    def monomial(cls, coeff: int, exponent: int = 0) -> LaurentPoly:
        return cls(exponent, [coeff])


ZERO = LaurentPoly(0, ())
ONE = LaurentPoly(0, (1,))
T = LaurentPoly(1, (1,))


@dataclass(frozen=True)
class LaurentMatrix:
    dim: int
    entries: tuple[tuple[LaurentPoly, ...], ...]

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[LaurentPoly]]) -> LaurentMatrix:
        dim = len(rows)
        if any(len(r) != dim for r in rows):
            raise DimensionMismatch("matrix must be square")
        return cls(dim, tuple(tuple(r) for r in rows))

    @classmethod
    def identity(cls, dim: int) -> LaurentMatrix:
        return cls.from_rows(
            [[ONE if i == j else ZERO for j in range(dim)] for i in range(dim)]
        )

    def __mul__(self, other: LaurentMatrix) -> LaurentMatrix:
        if self.dim != other.dim:
            raise DimensionMismatch(f"{self.dim} != {other.dim}")
        n = self.dim
        rows = []
        for i in range(n):
            row = []
            for j in range(n):
                acc = ZERO
                for k in range(n):
                    a = self.entries[i][k]
                    if not a.is_zero():
                        acc = acc + a * other.entries[k][j]
                row.append(acc)
            rows.append(row)
        return LaurentMatrix.from_rows(rows)

    def __sub__(self, other: LaurentMatrix) -> LaurentMatrix:
        if self.dim != other.dim:
            raise DimensionMismatch(f"{self.dim} != {other.dim}")
        return LaurentMatrix.from_rows(
            [
                [self.entries[i][j] - other.entries[i][j] for j in range(self.dim)]
                for i in range(self.dim)
            ]
        )

    def det(self) -> LaurentPoly:
        """Exact determinant: cofactor expansion up to 4x4, Bareiss above."""
        if self.dim <= 4:
            return _det_cofactor([list(r) for r in self.entries])
        return _det_bareiss([list(r) for r in self.entries])

    def inverse_unit_det(self) -> LaurentMatrix:
        """Inverse via adjugate; requires det to be a unit +-t^k."""
        d = self.det()
        if d.is_zero():
            raise DivisionByZero("matrix is singular")
        n = self.dim
        rows = []
        for i in range(n):
            row = []
            for j in range(n):
                minor = [
                    [self.entries[r][c] for c in range(n) if c != i]
                    for r in range(n) if r != j
                ]
                cof = _det_cofactor(minor) if n - 1 <= 4 else _det_bareiss(minor)
                if (i + j) % 2:
                    cof = -cof
                row.append(cof.exact_div(d))
            rows.append(row)
        return LaurentMatrix.from_rows(rows)


def _det_cofactor(m: list[list[LaurentPoly]]) -> LaurentPoly:
    n = len(m)
    if n == 0:
        return ONE
    if n == 1:
        return m[0][0]
    if n == 2:
        return m[0][0] * m[1][1] - m[0][1] * m[1][0]
    acc = ZERO
    for j in range(n):
        a = m[0][j]
        if a.is_zero():
            continue
        minor = [[m[i][k] for k in range(n) if k != j] for i in range(1, n)]
        term = a * _det_cofactor(minor)
        acc = acc + term if j % 2 == 0 else acc - term
    return acc


def _det_bareiss(m: list[list[LaurentPoly]]) -> LaurentPoly:
    """Fraction-free elimination; all divisions are exact in Z[t^(+-1)]."""
    n = len(m)
    sign = 1
    prev = ONE
    for k in range(n - 1):
        if m[k][k].is_zero():
            for r in range(k + 1, n):
                if not m[r][k].is_zero():
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return ZERO
        pivot = m[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = pivot * m[i][j] - m[i][k] * m[k][j]
                m[i][j] = num.exact_div(prev)
            m[i][k] = ZERO
        prev = pivot
    d = m[n - 1][n - 1]
    return -d if sign < 0 else d
