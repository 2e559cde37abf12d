"""Named example algebras with their expected invariants attached.

Every constructor returns a :class:`CatalogEntry` whose algebra is given in
an adapted basis.  Expected values carry a ``source``: ``"literature"`` for
values stated in the published treatment of these examples, ``"computed"``
for values fixed here by an independent hand or oracle computation.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .lie import NilpotentAlgebra
from .linalg import as_fraction, format_rational


@dataclass(frozen=True)
class Expected:
    value: int
    source: str  # literature | computed
    note: str = ""


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    params: tuple
    algebra: NilpotentAlgebra
    expected: dict[str, Expected] = field(default_factory=dict)
    notes: tuple[str, ...] = ()

    @property
    def label(self) -> str:
        if not self.params:
            return self.name
        return f"{self.name}:" + ",".join(str(format_rational(Fraction(p))) for p in self.params)

    def expected_json(self) -> dict:
        return {
            key: {"value": e.value, "source": e.source, "note": e.note}
            for key, e in self.expected.items()
        }


def _int_param(value, lo: int, what: str) -> int:
    if isinstance(value, bool) or int(value) != value or int(value) < lo:
        raise ValueError(f"{what} must be an integer >= {lo}, got {value!r}")
    return int(value)


def abelian(n: int) -> CatalogEntry:
    n = _int_param(n, 1, "abelian dimension n")
    alg = NilpotentAlgebra.from_brackets(n, {}, name=f"abelian({n})")
    return CatalogEntry(
        "abelian",
        (n,),
        alg,
        {
            "index": Expected(n, "computed", "every stabilizer is the whole algebra"),
            "real_rank": Expected(n, "computed", "[g, g] = 0"),
            "clgth": Expected(1, "computed", "only the character stratum"),
        },
    )


def heisenberg(n: int) -> CatalogEntry:
    """``h_{2n+1}``: center ``X_1``, ``[X_{n+1+i}, X_{1+i}] = X_1`` for ``i = 1..n``."""
    n = _int_param(n, 1, "Heisenberg rank n")
    brackets = {(n + 1 + i, 1 + i): {1: 1} for i in range(1, n + 1)}
    alg = NilpotentAlgebra.from_brackets(2 * n + 1, brackets, name=f"heisenberg({n})")
    return CatalogEntry(
        "heisenberg",
        (n,),
        alg,
        {
            "index": Expected(1, "literature", "index 1 characterizes Heisenberg groups"),
            "clgth": Expected(2, "computed", "exhaustive lattice stratification"),
            "real_rank": Expected(2 * n, "computed", "[g, g] is the 1-dim center"),
        },
    )


def filiform(m: int) -> CatalogEntry:
    """Standard filiform algebra: ``[X_m, X_j] = X_{j-1}`` for ``j = 2..m-1``."""
    m = _int_param(m, 3, "filiform dimension m")
    brackets = {(m, j): {j - 1: 1} for j in range(2, m)}
    alg = NilpotentAlgebra.from_brackets(m, brackets, name=f"filiform({m})")
    return CatalogEntry(
        "filiform",
        (m,),
        alg,
        {
            "clgth": Expected(m - 1, "literature", "coarse length m-1 for the standard flag"),
            "index": Expected(m - 2, "literature", "all non-character orbits are 2-dimensional"),
            "real_rank": Expected(2, "literature", "[g, g] = span{X_1, ..., X_{m-2}}"),
        },
        ("the published list of index sets stops at {m-2, m}; direct computation also finds {m-1, m}",),
    )


def ut_basis(k: int) -> list[tuple[int, int]]:
    """Matrix units ``E_ij`` (i < j) by decreasing ``j - i``, then by decreasing ``i``.

    Brackets only raise ``j - i``, so any order by decreasing ``j - i`` is
    adapted; the tie-break makes ``ut(3)`` coincide with ``heisenberg(1)``.
    """
    return sorted(
        ((i, j) for i in range(1, k + 1) for j in range(i + 1, k + 1)),
        key=lambda p: (p[0] - p[1], -p[0]),
    )


def ut(k: int) -> CatalogEntry:
    """Strictly upper triangular ``k x k`` matrices, ``[E_ij, E_jl] = E_il``."""
    k = _int_param(k, 3, "matrix size k")
    basis = ut_basis(k)
    pos = {p: n + 1 for n, p in enumerate(basis)}
    brackets = {}
    for a, (i, j) in enumerate(basis, 1):
        for b, (r, s) in enumerate(basis, 1):
            if a > b:
                coeffs = {}
                if j == r:
                    coeffs[pos[i, s]] = 1
                if s == i:
                    coeffs[pos[r, j]] = -1
                if coeffs:
                    brackets[a, b] = coeffs
    alg = NilpotentAlgebra.from_brackets(len(basis), brackets, name=f"ut({k})")
    qk = (k - 1) // 2  # greatest integer strictly less than k/2
    notes = ()
    if k % 2 == 0:
        notes = (
            f"stated value q_k = {qk} (greatest integer < k/2) differs from the anti-diagonal "
            f"count {k // 2}; the computed index is reported",
        )
    return CatalogEntry(
        "ut",
        (k,),
        alg,
        {
            "index": Expected(k // 2, "computed", "number of anti-diagonal entries; exact rank oracle"),
            "real_rank": Expected(k - 1, "computed", "[g, g] misses exactly the superdiagonal units"),
        },
        notes,
    )


def _family_params(s, t) -> tuple[Fraction, Fraction]:
    s, t = as_fraction(s), as_fraction(t)
    if s == 0 or t == 0:
        raise ValueError("s and t must be nonzero rationals")
    return s, t


def g0_st(s, t) -> CatalogEntry:
    """6-dim 2-step algebra ``[X6,X5] = sX3, [X6,X4] = (s+t)X2, [X5,X4] = tX1``."""
    s, t = _family_params(s, t)
    brackets = {(6, 5): {3: s}, (6, 4): {2: s + t}, (5, 4): {1: t}}
    alg = NilpotentAlgebra.from_brackets(6, brackets, name=f"g0_st({s},{t})")
    return CatalogEntry(
        "g0_st",
        (s, t),
        alg,
        {
            "index": Expected(4, "computed", "B_xi lives on span{X4, X5, X6}, rank 2"),
            "real_rank": Expected(3, "computed", "[g, g] = span{X1, X2, X3}"),
        },
        ("the normalization s^2 + st + t^2 = 1 is not enforced",),
    )


def g_st(s, t) -> CatalogEntry:
    """One-dimensional central extension of ``g0_st(s, t)`` by the symplectic cocycle.

    Basis: ``X_1 = Z`` (central), ``X_{i+1}`` = the i-th basis vector of g0_st.
    Brackets: those of g0_st shifted by one, plus ``[X_2, X_7] = [X_3, X_6] =
    [X_4, X_5] = Z``.
    """
    s, t = _family_params(s, t)
    brackets = {
        (7, 6): {4: s},
        (7, 5): {3: s + t},
        (6, 5): {2: t},
        (7, 2): {1: -1},
        (6, 3): {1: -1},
        (5, 4): {1: -1},
    }
    alg = NilpotentAlgebra.from_brackets(7, brackets, name=f"g_st({s},{t})")
    return CatalogEntry(
        "g_st",
        (s, t),
        alg,
        {
            "index": Expected(1, "literature", "index 1 for the whole family"),
            "real_rank": Expected(3, "computed", "[g, g] = span{Z, X2, X3, X4}"),
            "dim": Expected(7, "literature", "3-step, 1-dimensional center"),
        },
        ("the normalization s^2 + st + t^2 = 1 is not enforced",),
    )


CONSTRUCTORS = {
    "abelian": (abelian, 1),
    "heisenberg": (heisenberg, 1),
    "filiform": (filiform, 1),
    "ut": (ut, 1),
    "g0_st": (g0_st, 2),
    "g_st": (g_st, 2),
}


def get(label: str) -> CatalogEntry:
    """Look up ``"name:p1,p2"`` (e.g. ``"heisenberg:1"``, ``"g_st:1/2,1"``)."""
    name, _, params = label.partition(":")
    name = name.strip()
    if name not in CONSTRUCTORS:
        raise KeyError(f"unknown catalog name {name!r}; known: {', '.join(CONSTRUCTORS)}")
    ctor, arity = CONSTRUCTORS[name]
    args = [p.strip() for p in params.split(",")] if params.strip() else []
    if len(args) != arity:
        raise ValueError(f"{name} takes {arity} parameter(s), got {len(args)}")
    if arity == 1:
        return ctor(int(args[0]))
    return ctor(*args)


def default_entries() -> list[CatalogEntry]:
    """The entries exercised by the test and acceptance suites."""
    return (
        [abelian(n) for n in (1, 2, 3)]
        + [heisenberg(n) for n in (1, 2, 3)]
        + [filiform(m) for m in range(3, 9)]
        + [ut(k) for k in (3, 4, 5)]
        + [g0_st(1, 1), g0_st(Fraction(1, 2), -3)]
        + [g_st(1, 1), g_st(Fraction(1, 2), -3), g_st(Fraction(-2, 3), Fraction(5, 7))]
    )
