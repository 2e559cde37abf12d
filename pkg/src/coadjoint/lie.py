"""Nilpotent Lie algebras given by rational structure constants.

Conventions
-----------
Basis vectors are ``X_1, ..., X_m`` (1-based in every user-facing index) and
``[X_i, X_j] = sum_k c[i][j][k] X_k``.  Vectors and functionals are tuples of
:class:`fractions.Fraction` of length ``m``; a functional's coordinates are
taken in the dual basis, so ``<xi, X_k> = xi[k-1]``.

The flag ``g_j = span{X_1, ..., X_j}`` is a Jordan-Hoelder sequence exactly
when the algebra is *adapted*: every bracket ``[X_i, X_j]`` lies in
``g_{min(i, j) - 1}``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Mapping, Sequence

from .linalg import Subspace, Vector, as_fraction, integer_row, inverse, nullspace, rank, vector

Functional = Vector

ZERO = Fraction(0)


class NotNilpotentError(ValueError):
    pass


@dataclass(frozen=True)
class Violation:
    kind: str  # shape | antisymmetry | jacobi | nilpotency | adaptedness
    witness: tuple[int, ...] | None = None

    def __str__(self) -> str:
        return f"{self.kind}{self.witness if self.witness else ''}"


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple[Violation, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.violations

    def kinds(self) -> set[str]:
        return {v.kind for v in self.violations}


@dataclass(frozen=True)
class NilpotentAlgebra:
    """Structure constants ``c[i][j][k]`` (0-based storage) of an m-dim algebra."""

    dim: int
    constants: tuple[tuple[tuple[Fraction, ...], ...], ...] = field(repr=False)
    name: str = field(default="", compare=False)

    def __post_init__(self):
        if self.dim < 1:
            raise ValueError("dimension must be positive")
        c = self.constants
        if len(c) != self.dim or any(
            len(row) != self.dim or any(len(col) != self.dim for col in row) for row in c
        ):
            raise ValueError(f"structure constants must have shape {self.dim}x{self.dim}x{self.dim}")

    @classmethod
    def from_brackets(
        cls,
        dim: int,
        brackets: Mapping[tuple[int, int], Mapping[int, object]],
        name: str = "",
    ) -> NilpotentAlgebra:
        """Build from ``{(i, j): {k: coeff}}`` (1-based).

        A pair listed in only one order is completed by antisymmetry; a pair
        listed in both orders is stored as given, so that inconsistent input
        is reported by :func:`validate` rather than silently repaired.
        """
        c = [[[ZERO] * dim for _ in range(dim)] for _ in range(dim)]
        for (i, j), coeffs in brackets.items():
            if not (1 <= i <= dim and 1 <= j <= dim):
                raise ValueError(f"bracket index ({i}, {j}) out of range 1..{dim}")
            for k, val in coeffs.items():
                k = int(k)
                if not 1 <= k <= dim:
                    raise ValueError(f"coefficient index {k} out of range 1..{dim}")
                c[i - 1][j - 1][k - 1] = as_fraction(val)
        for (i, j), coeffs in brackets.items():
            if (j, i) in brackets or i == j:
                continue
            for k in range(dim):
                c[j - 1][i - 1][k] = -c[i - 1][j - 1][k]
        return cls(dim, _freeze(c), name)

    @cached_property
    def _table(self) -> dict[tuple[int, int], tuple[tuple[int, Fraction], ...]]:
        # sparse view: (i, j) -> ((k, c_ij^k), ...), 0-based
        table = {}
        for i in range(self.dim):
            for j in range(self.dim):
                nz = tuple((k, x) for k, x in enumerate(self.constants[i][j]) if x)
                if nz:
                    table[i, j] = nz
        return table

    @cached_property
    def _int_table(self) -> tuple[int, dict[tuple[int, int], tuple[tuple[int, int], ...]]]:
        # (D, table scaled by the common denominator D of all constants)
        den = 1
        for nz in self._table.values():
            for _, x in nz:
                den = den * x.denominator // math.gcd(den, x.denominator)
        return den, {key: tuple((k, int(x * den)) for k, x in nz) for key, nz in self._table.items()}

    def brackets(self) -> dict[tuple[int, int], dict[int, Fraction]]:
        """Nonzero generators ``[X_i, X_j]`` with ``i > j`` (1-based)."""
        return {
            (i + 1, j + 1): {k + 1: x for k, x in nz}
            for (i, j), nz in sorted(self._table.items())
            if i > j
        }

    def basis_vector(self, i: int) -> Vector:
        return tuple(Fraction(int(k == i - 1)) for k in range(self.dim))

    def is_abelian(self) -> bool:
        return not self._table

    def __str__(self) -> str:
        return self.name or f"algebra(dim={self.dim})"


def _freeze(c) -> tuple:
    return tuple(tuple(tuple(col) for col in row) for row in c)


def _check_len(alg: NilpotentAlgebra, *vs: Sequence) -> None:
    for v in vs:
        if len(v) != alg.dim:
            raise ValueError(f"expected a vector of length {alg.dim}, got {len(v)}")


def bracket(alg: NilpotentAlgebra, x: Sequence, y: Sequence) -> Vector:
    x, y = vector(x), vector(y)
    _check_len(alg, x, y)
    out = [ZERO] * alg.dim
    for (i, j), nz in alg._table.items():
        s = x[i] * y[j]
        if s:
            for k, c in nz:
                out[k] += s * c
    return tuple(out)


def ad_matrix(alg: NilpotentAlgebra, x: Sequence) -> list[list[Fraction]]:
    """Matrix of ``ad x`` acting on coordinate columns: column l is ``[x, X_l]``."""
    x = vector(x)
    _check_len(alg, x)
    a = [[ZERO] * alg.dim for _ in range(alg.dim)]
    for (i, l), nz in alg._table.items():
        if x[i]:
            for k, c in nz:
                a[k][l] += x[i] * c
    return a


def _span_of_brackets(alg: NilpotentAlgebra, left: Iterable[Vector], right: Iterable[Vector]) -> Subspace:
    right = list(right)
    return Subspace.span([bracket(alg, u, v) for u in left for v in right], alg.dim)


def derived_subalgebra(alg: NilpotentAlgebra) -> Subspace:
    """``[g, g]``."""
    return Subspace.span(
        [tuple(alg.constants[i][j]) for i in range(alg.dim) for j in range(i)], alg.dim
    )


def lower_central_series(alg: NilpotentAlgebra) -> list[Subspace]:
    """``g = C^1 ⊃ C^2 = [g, g] ⊃ ...``.

    Ends with the zero subspace for nilpotent input; for non-nilpotent input
    the list stops at the first repeated term.
    """
    full = Subspace.full(alg.dim)
    series = [full]
    gens = [alg.basis_vector(i + 1) for i in range(alg.dim)]
    while series[-1].dim:
        nxt = _span_of_brackets(alg, gens, series[-1].basis)
        if nxt == series[-1]:
            break
        series.append(nxt)
    return series


def ascending_central_series(alg: NilpotentAlgebra) -> list[Subspace]:
    """``0 = z_0 ⊂ z_1 = center ⊂ z_2 ⊂ ...``, where ``z_{k+1} = {X : [X, g] ⊆ z_k}``.

    Ends with ``g`` for nilpotent input; stops at the first repeated term otherwise.
    """
    m = alg.dim
    series = [Subspace.zero(m)]
    while series[-1].dim < m:
        annihilator = nullspace(list(series[-1].basis), m) if series[-1].dim else [
            alg.basis_vector(k + 1) for k in range(m)
        ]
        equations = []
        for j in range(m):
            for phi in annihilator:
                equations.append(
                    [sum((alg.constants[i][j][k] * phi[k] for k in range(m)), ZERO) for i in range(m)]
                )
        nxt = Subspace.span(nullspace(equations, m), m)
        if nxt == series[-1]:
            break
        series.append(nxt)
    return series


def center(alg: NilpotentAlgebra) -> Subspace:
    series = ascending_central_series(alg)
    return series[1] if len(series) > 1 else series[0]


def validate(alg: NilpotentAlgebra) -> ValidationReport:
    """Check antisymmetry, Jacobi, nilpotency and adaptedness of the flag."""
    m = alg.dim
    c = alg.constants
    found: list[Violation] = []
    for i in range(m):
        for j in range(i, m):
            for k in range(m):
                if c[i][j][k] != -c[j][i][k]:
                    found.append(Violation("antisymmetry", (i + 1, j + 1, k + 1)))
    for i in range(m):
        for j in range(i + 1, m):
            for l in range(j + 1, m):
                jac = _jacobiator(alg, i, j, l)
                if any(jac):
                    found.append(Violation("jacobi", (i + 1, j + 1, l + 1)))
    if lower_central_series(alg)[-1].dim:
        found.append(Violation("nilpotency"))
    for (i, j), nz in alg._table.items():
        for k, _ in nz:
            if k >= min(i, j):
                found.append(Violation("adaptedness", (i + 1, j + 1, k + 1)))
    return ValidationReport(tuple(found))


def _jacobiator(alg: NilpotentAlgebra, i: int, j: int, l: int) -> list[Fraction]:
    out = [ZERO] * alg.dim
    table = alg._table
    for a, b, d in ((i, j, l), (j, l, i), (l, i, j)):
        for k, x in table.get((a, b), ()):
            for kk, y in table.get((k, d), ()):
                out[kk] += x * y
    return out


def is_adapted(alg: NilpotentAlgebra) -> bool:
    return all(k < min(i, j) for (i, j), nz in alg._table.items() for k, _ in nz)


def rebase(alg: NilpotentAlgebra, new_basis: Sequence[Sequence]) -> NilpotentAlgebra:
    """Structure constants in the basis whose a-th vector is ``new_basis[a]``."""
    p = [list(vector(v)) for v in new_basis]
    p_inv = inverse(p)
    m = alg.dim
    c = [[[ZERO] * m for _ in range(m)] for _ in range(m)]
    for a in range(m):
        for b in range(a):
            v = bracket(alg, p[a], p[b])
            if not any(v):
                continue
            w = [sum((v[r] * p_inv[r][s] for r in range(m)), ZERO) for s in range(m)]
            c[a][b] = w
            c[b][a] = [-x for x in w]
    return NilpotentAlgebra(m, _freeze(c), alg.name)


def jordan_holder_change(alg: NilpotentAlgebra) -> tuple[NilpotentAlgebra, list[Vector]]:
    """Adapted copy of ``alg`` together with the new basis (in old coordinates)."""
    report = validate(alg)
    if report.ok:
        return alg, [alg.basis_vector(i + 1) for i in range(alg.dim)]
    if "nilpotency" in report.kinds():
        raise NotNilpotentError(f"{alg} is not nilpotent")
    if report.kinds() & {"antisymmetry", "jacobi"}:
        raise ValueError(f"{alg} is not a Lie algebra: {sorted(report.kinds())}")
    m = alg.dim
    chosen: list[Vector] = []
    for layer in ascending_central_series(alg)[1:]:
        candidates = [alg.basis_vector(i + 1) for i in range(m)]
        candidates = [v for v in candidates if layer.contains(v)] + list(layer.basis)
        for v in candidates:
            if len(chosen) == layer.dim:
                break
            if rank(chosen + [v]) > len(chosen):
                chosen.append(v)
    return rebase(alg, chosen), chosen


def jordan_holder_basis(alg: NilpotentAlgebra) -> NilpotentAlgebra:
    """Re-based copy whose prefix spans form a Jordan-Hoelder flag.

    The basis refines the ascending central series; inside each layer the
    input basis vectors that complete the previous layer come first, in input
    order.  Already adapted input is returned unchanged.
    """
    return jordan_holder_change(alg)[0]


def b_matrix(alg: NilpotentAlgebra, xi: Sequence) -> list[list[Fraction]]:
    """Skew form ``B_xi(X_i, X_j) = <xi, [X_i, X_j]>``."""
    xi = vector(xi)
    _check_len(alg, xi)
    m = alg.dim
    b = [[ZERO] * m for _ in range(m)]
    for (i, j), nz in alg._table.items():
        b[i][j] = sum((c * xi[k] for k, c in nz), ZERO)
    return b


def b_matrix_int(alg: NilpotentAlgebra, xi: Sequence) -> list[list[int]]:
    """Positive integer multiple of :func:`b_matrix` (same kernel and rank)."""
    xi = integer_row(vector(xi))
    _check_len(alg, xi)
    m = alg.dim
    b = [[0] * m for _ in range(m)]
    for (i, j), nz in alg._int_table[1].items():
        b[i][j] = sum(c * xi[k] for k, c in nz)
    return b


def stabilizer(alg: NilpotentAlgebra, xi: Sequence) -> Subspace:
    """Coadjoint stabilizer ``g(xi) = ker B_xi``."""
    return Subspace.span(nullspace(b_matrix(alg, xi), alg.dim), alg.dim)


def ad_star(alg: NilpotentAlgebra, x: Sequence, xi: Sequence) -> Functional:
    """Infinitesimal coadjoint action ``-xi ∘ ad x`` (tangent vector to the orbit)."""
    xi = vector(xi)
    _check_len(alg, xi)
    a = ad_matrix(alg, x)
    m = alg.dim
    return tuple(-sum((xi[l] * a[l][k] for l in range(m) if a[l][k]), ZERO) for k in range(m))


def exp_neg_ad(alg: NilpotentAlgebra, x: Sequence) -> list[list[Fraction]]:
    """``exp(-ad x)``; a finite sum since ``ad x`` is nilpotent."""
    m = alg.dim
    a = [[-v for v in row] for row in ad_matrix(alg, x)]
    total = [[Fraction(int(i == j)) for j in range(m)] for i in range(m)]
    term = [row[:] for row in total]
    for n in range(1, m + 1):
        term = [
            [sum((term[i][r] * a[r][j] for r in range(m) if term[i][r]), ZERO) / n for j in range(m)]
            for i in range(m)
        ]
        if not any(any(row) for row in term):
            break
        total = [[u + v for u, v in zip(r1, r2)] for r1, r2 in zip(total, term)]
    return total


def coadjoint_act(alg: NilpotentAlgebra, x: Sequence, xi: Sequence) -> Functional:
    """``Ad*(exp x) xi = xi ∘ exp(-ad x)``, exactly."""
    x, xi = vector(x), vector(xi)
    _check_len(alg, x, xi)
    e = exp_neg_ad(alg, x)
    m = alg.dim
    return tuple(sum((xi[l] * e[l][k] for l in range(m)), ZERO) for k in range(m))


def is_character(alg: NilpotentAlgebra, xi: Sequence) -> bool:
    """Whether ``xi`` vanishes on ``[g, g]`` (a one-point coadjoint orbit)."""
    xi = vector(xi)
    return all(sum((a * b for a, b in zip(xi, v)), ZERO) == 0 for v in derived_subalgebra(alg).basis)
