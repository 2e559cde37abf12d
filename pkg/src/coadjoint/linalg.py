"""Exact linear algebra over the rationals.

Ranks and echelon forms are computed fraction-free (Bareiss elimination on
integer rows); rational input rows are first scaled to integers, which does
not change row spaces, ranks or kernels.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

Vector = tuple[Fraction, ...]


def as_fraction(value) -> Fraction:
    """Parse an int, Fraction or ``"p/q"`` string into a Fraction.

    Floats are rejected: they would silently introduce binary rounding.
    """
    if isinstance(value, bool):
        raise TypeError(f"not a rational: {value!r}")
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"not a rational: {value!r}") from exc
    raise TypeError(f"not a rational: {value!r} (floats are not accepted)")


def vector(values: Iterable) -> Vector:
    return tuple(as_fraction(v) for v in values)


def format_rational(q: Fraction) -> int | str:
    """JSON form of a rational: a plain int when integral, else ``"p/q"``."""
    return q.numerator if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def integer_row(row: Sequence) -> list[int]:
    """Scale a rational row by the lcm of its denominators."""
    den = 1
    for x in row:
        d = x.denominator if isinstance(x, Fraction) else 1
        den = den * d // math.gcd(den, d)
    return [int(x * den) for x in row]


def bareiss_echelon(rows: Sequence[Sequence]) -> tuple[list[list[int]], list[int]]:
    """Fraction-free row echelon form.

    Returns the nonzero echelon rows (integers) and their pivot columns.
    Every division performed is exact.
    """
    m = [integer_row(r) for r in rows]
    if not m:
        return [], []
    ncols = len(m[0])
    nrows = len(m)
    r = 0
    prev = 1
    pivots: list[int] = []
    for c in range(ncols):
        if r == nrows:
            break
        p = next((i for i in range(r, nrows) if m[i][c] != 0), None)
        if p is None:
            continue
        if p != r:
            m[p], m[r] = m[r], m[p]
        piv = m[r][c]
        row_r = m[r]
        for i in range(r + 1, nrows):
            row_i = m[i]
            a = row_i[c]
            for j in range(c + 1, ncols):
                row_i[j] = (piv * row_i[j] - a * row_r[j]) // prev
            row_i[c] = 0
        prev = piv
        pivots.append(c)
        r += 1
    return m[:r], pivots


def rank(rows: Sequence[Sequence]) -> int:
    return len(bareiss_echelon(rows)[1])


def rref(rows: Sequence[Sequence]) -> tuple[list[Vector], list[int]]:
    """Reduced row echelon form (unique), as Fraction rows plus pivots."""
    ech, pivots = bareiss_echelon(rows)
    out = [[Fraction(x) for x in row] for row in ech]
    for r in range(len(out) - 1, -1, -1):
        c = pivots[r]
        piv = out[r][c]
        out[r] = [x / piv for x in out[r]]
        for i in range(r):
            f = out[i][c]
            if f:
                out[i] = [a - f * b for a, b in zip(out[i], out[r])]
    return [tuple(row) for row in out], pivots


def nullspace(rows: Sequence[Sequence], ncols: int) -> list[Vector]:
    """Basis of {x : rows · x = 0}, one vector per free column."""
    if not rows:
        return [tuple(Fraction(int(i == j)) for i in range(ncols)) for j in range(ncols)]
    red, pivots = rref(rows)
    pivot_set = set(pivots)
    basis = []
    for f in range(ncols):
        if f in pivot_set:
            continue
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for r, c in enumerate(pivots):
            v[c] = -red[r][f]
        basis.append(tuple(v))
    return basis


def nullspace_int(rows: Sequence[Sequence], ncols: int) -> list[list[int]]:
    """Integer kernel basis (each vector a positive multiple of the
    corresponding :func:`nullspace` vector), without any Fraction arithmetic."""
    ech, pivots = bareiss_echelon(rows)
    for r in range(len(ech) - 1, -1, -1):
        c = pivots[r]
        row_r = ech[r]
        if row_r[c] < 0:
            ech[r] = row_r = [-x for x in row_r]
        for i in range(r):
            a = ech[i][c]
            if a:
                new = [row_r[c] * x - a * y for x, y in zip(ech[i], row_r)]
                g = math.gcd(*new) or 1
                ech[i] = [x // g for x in new]
    lcm = 1
    for r, c in enumerate(pivots):
        lcm = lcm * ech[r][c] // math.gcd(lcm, ech[r][c])
    pivot_set = set(pivots)
    basis = []
    for f in range(ncols):
        if f in pivot_set:
            continue
        v = [0] * ncols
        v[f] = lcm
        for r, c in enumerate(pivots):
            v[c] = -ech[r][f] * (lcm // ech[r][c])
        basis.append(v)
    return basis


def mat_vec(a: Sequence[Sequence[Fraction]], x: Sequence[Fraction]) -> Vector:
    return tuple(sum((aij * xj for aij, xj in zip(row, x)), Fraction(0)) for row in a)


def mat_mul(a, b) -> list[list[Fraction]]:
    bt = list(zip(*b))
    return [[sum((x * y for x, y in zip(row, col)), Fraction(0)) for col in bt] for row in a]


def identity(n: int) -> list[list[Fraction]]:
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


def inverse(a: Sequence[Sequence[Fraction]]) -> list[list[Fraction]]:
    n = len(a)
    aug = [list(map(Fraction, row)) + e for row, e in zip(a, identity(n))]
    red, pivots = rref(aug)
    if pivots[:n] != list(range(n)) or len(red) < n:
        raise ValueError("matrix is singular")
    return [list(row[n:]) for row in red[:n]]


@dataclass(frozen=True)
class Subspace:
    """A linear subspace of Q^m stored by its reduced row echelon basis."""

    basis: tuple[Vector, ...]
    ambient_dim: int

    @classmethod
    def span(cls, vectors: Iterable[Sequence], ambient_dim: int) -> Subspace:
        rows = [vector(v) for v in vectors]
        for v in rows:
            if len(v) != ambient_dim:
                raise ValueError(f"vector of length {len(v)} in ambient dimension {ambient_dim}")
        red, _ = rref(rows)
        return cls(tuple(red), ambient_dim)

    @classmethod
    def zero(cls, ambient_dim: int) -> Subspace:
        return cls((), ambient_dim)

    @classmethod
    def full(cls, ambient_dim: int) -> Subspace:
        return cls(tuple(tuple(r) for r in identity(ambient_dim)), ambient_dim)

    @classmethod
    def coordinate(cls, indices: Iterable[int], ambient_dim: int) -> Subspace:
        """span{X_i : i in indices}, indices 1-based."""
        idx = set(indices)
        return cls.span(
            [[int(j == i - 1) for j in range(ambient_dim)] for i in sorted(idx)], ambient_dim
        )

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def pivots(self) -> list[int]:
        return [next(i for i, x in enumerate(v) if x) for v in self.basis]

    def contains(self, v: Sequence) -> bool:
        v = vector(v)
        return rank(list(self.basis) + [v]) == self.dim

    def __add__(self, other: Subspace) -> Subspace:
        if other.ambient_dim != self.ambient_dim:
            raise ValueError("ambient dimension mismatch")
        return Subspace.span(self.basis + other.basis, self.ambient_dim)

    def __le__(self, other: Subspace) -> bool:
        return (self + other).dim == other.dim
