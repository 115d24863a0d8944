"""Burau representations (unreduced and reduced) and Alexander polynomials
of closed braids."""

from __future__ import annotations

from functools import lru_cache

from .braid import BraidWord, FamilyTuple, family_word
from .errors import IndexOutOfRange
from .laurent import ONE, ZERO, LaurentMatrix, LaurentPoly

_MINUS_T = LaurentPoly(1, (-1,))
_ONE_MINUS_T = LaurentPoly(0, (1, -1))
_T = LaurentPoly(1, (1,))


def _check_index(n: int, i: int) -> None:
    if n < 2 or not 1 <= i <= n - 1:
        raise IndexOutOfRange(f"generator index {i} invalid for {n} strands")


@lru_cache(maxsize=None)
def burau_generator(n: int, i: int, inverse: bool = False) -> LaurentMatrix:
    """The n x n unreduced Burau matrix of sigma_i (or its exact inverse)."""
    _check_index(n, i)
    rows = [[ONE if r == c else ZERO for c in range(n)] for r in range(n)]
    r = i - 1
    rows[r][r] = _ONE_MINUS_T
    rows[r][r + 1] = _T
    rows[r + 1][r] = ONE
    rows[r + 1][r + 1] = ZERO
    m = LaurentMatrix.from_rows(rows)
    if inverse:
        return m.inverse_unit_det()
    return m


@lru_cache(maxsize=None)
def reduced_burau_generator(n: int, i: int, inverse: bool = False) -> LaurentMatrix:
    """The (n-1) x (n-1) reduced Burau matrix of sigma_i (or its inverse)."""
    _check_index(n, i)
    d = n - 1
    rows = [[ONE if r == c else ZERO for c in range(d)] for r in range(d)]
    if n == 2:
        rows[0][0] = _MINUS_T
    elif i == 1:
        rows[0][0] = _MINUS_T
        rows[1][0] = ONE
    elif i == n - 1:
        rows[d - 2][d - 1] = _T
        rows[d - 1][d - 1] = _MINUS_T
    else:
        rows[i - 2][i - 1] = _T
        rows[i - 1][i - 1] = _MINUS_T
        rows[i][i - 1] = ONE
    m = LaurentMatrix.from_rows(rows)
    if inverse:
        return m.inverse_unit_det()
    return m


def _sparse_columns(g: LaurentMatrix):
    """Per-column nonzero entries; None marks a plain identity column."""
    cols = []
    for j in range(g.dim):
        nz = [(k, g.entries[k][j]) for k in range(g.dim) if not g.entries[k][j].is_zero()]
        if len(nz) == 1 and nz[0][0] == j and nz[0][1] == ONE:
            cols.append(None)
        else:
            cols.append(nz)
    return cols


@lru_cache(maxsize=None)
def _generator_columns(n: int, i: int, reduced: bool, inverse: bool):
    gen = reduced_burau_generator(n, i, inverse) if reduced else burau_generator(n, i, inverse)
    return _sparse_columns(gen)


def _apply_generator(m: LaurentMatrix, cols) -> LaurentMatrix:
    # Right-multiply by a generator, skipping its identity columns.
    d = m.dim
    rows = []
    for r in range(d):
        mrow = m.entries[r]
        row = []
        for j in range(d):
            nz = cols[j]
            if nz is None:
                row.append(mrow[j])
                continue
            acc = ZERO
            for k, c in nz:
                a = mrow[k]
                if not a.is_zero():
                    acc = acc + a * c
            row.append(acc)
        rows.append(row)
    return LaurentMatrix.from_rows(rows)


def burau_image(b: BraidWord, reduced: bool = True) -> LaurentMatrix:
    """Product of generator matrices over the letters of b, left to right."""
    dim = b.strands - 1 if reduced else b.strands
    m = LaurentMatrix.identity(dim)
    for g in b.letters:
        cols = _generator_columns(b.strands, abs(g), reduced, g < 0)
        m = _apply_generator(m, cols)
    return m


def alexander_closed_braid(b: BraidWord) -> LaurentPoly:
    """Alexander polynomial of the closure of b, in unit-canonical form.

    Computes (1-t) * det(I - reduced_burau(b)) divided exactly by (1-t^n);
    returns the zero polynomial when the determinant vanishes.
    """
    n = b.strands
    m = burau_image(b, reduced=True)
    d = (LaurentMatrix.identity(n - 1) - m).det()
    if d.is_zero():
        return ZERO
    num = _ONE_MINUS_T * d
    den = LaurentPoly(0, [1] + [0] * (n - 1) + [-1])  # 1 - t^n
    return num.exact_div(den).normalize_unit()


def torus_f(r: int) -> LaurentPoly:
    """Alexander polynomial of the 2-string torus link sigma_1^r.

    Closed form (1 - (-1)^r t^r) / (1 + t) = sum_{i<r} (-1)^i t^i; f_0 = 0.
    """
    if r < 0:
        raise ValueError("r must be non-negative")
    if r == 0:
        return ZERO
    return LaurentPoly(0, [1 if i % 2 == 0 else -1 for i in range(r)])


def alexander_family_product(t: FamilyTuple) -> LaurentPoly:
    """Product formula: the Alexander polynomial of the family braid is
    the product of the torus factors of its exponents."""
    acc = ONE
    for ki in t.k:
        if ki == 0:
            return ZERO
        acc = acc * torus_f(ki)
    return acc.normalize_unit()


def alexander_family_burau(t: FamilyTuple) -> LaurentPoly:
    """Same invariant through the Burau route (the slow cross-check path)."""
    return alexander_closed_braid(family_word(t))
