"""Closed-form C*-invariants of a nilpotent Lie group from its Lie algebra.

* real rank of C*(G) = dim(g/[g, g]);
* stable rank = 1 for G = R, else 1 + max(floor(r/2), 1) with r the real rank;
* index = dimension of a generic coadjoint stabilizer, cross-checked four ways;
* lower/upper bounds for the nuclear dimension of C*(G).
"""

from __future__ import annotations

import random
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Mapping

from .lie import NilpotentAlgebra, ad_star, b_matrix_int, derived_subalgebra, stabilizer
from .linalg import rank
from .stratification import (
    DEFAULT_SEED,
    IndexSet,
    StratificationReport,
    generic_stratum,
    jump_set,
    stratify,
)


def real_rank(alg: NilpotentAlgebra) -> int:
    return alg.dim - derived_subalgebra(alg).dim


def stable_rank(alg: NilpotentAlgebra) -> int:
    if alg.dim == 1:
        return 1
    return 1 + max(real_rank(alg) // 2, 1)


class IndexDisagreement(RuntimeError):
    """The index formulas disagree: the generic rank was not attained by the sample."""

    def __init__(self, formulas: Mapping[str, int]):
        self.formulas = dict(formulas)
        super().__init__(f"index formulas disagree: {self.formulas}; retry with a larger sample")


@dataclass(frozen=True)
class IndexResult:
    value: int
    formulas: dict[str, int]
    samples: int
    seed: int


def sample_functionals(m: int, count: int, seed: int, coord_range: int = 50) -> list[list[int]]:
    rng = random.Random(seed)
    return [[rng.randint(-coord_range, coord_range) for _ in range(m)] for _ in range(count)]


def index(
    alg: NilpotentAlgebra, seed: int = DEFAULT_SEED, *, samples: int = 200, coord_range: int = 50
) -> IndexResult:
    """``ind G`` evaluated by four formulas that must coincide.

    generic_stratum   m - |e_1| for the dense open stratum e_1
    orbit_dimension   m - max rank of the orbit tangent vectors {xi ∘ ad X_i}
    stabilizer        min dim g(xi)
    form_rank         m - max rank B_xi

    The last three are maximized/minimized over the same ``samples`` seeded
    random functionals.
    """
    m = alg.dim
    points = sample_functionals(m, samples, seed, coord_range)
    basis = [alg.basis_vector(i + 1) for i in range(m)]
    orbit_dim = max(rank([ad_star(alg, x, xi) for x in basis]) for xi in points)
    min_stab = min(stabilizer(alg, xi).dim for xi in points)
    max_form = max(rank(b_matrix_int(alg, xi)) for xi in points)
    formulas = {
        "generic_stratum": m - len(generic_stratum(alg, seed)),
        "orbit_dimension": m - orbit_dim,
        "stabilizer": min_stab,
        "form_rank": m - max_form,
    }
    if len(set(formulas.values())) != 1:
        raise IndexDisagreement(formulas)
    return IndexResult(formulas["form_rank"], formulas, samples, seed)


class UnknownStratumDimension(KeyError):
    def __init__(self, e: IndexSet):
        self.e = e
        super().__init__(f"unknown stratum dimension for e = {e}; supply it explicitly")

    def __str__(self) -> str:
        return self.args[0]


@dataclass(frozen=True)
class NuclearBounds:
    lower: int
    upper: int
    mode: str
    stratum_dims: dict[IndexSet, int] = field(default_factory=dict)


def builtin_stratum_dims(alg: NilpotentAlgebra, seed: int = DEFAULT_SEED) -> dict[IndexSet, int]:
    """The two stratum dimensions known exactly for every algebra.

    The generic orbits form an open set, so their orbit space has dimension
    ``ind G``; the characters form the vector space ``[g, g]^⊥``.
    """
    e1 = generic_stratum(alg, seed)
    dims = {e1: alg.dim - len(e1)}
    dims[IndexSet()] = real_rank(alg)
    return dims


def nuclear_bounds(
    alg: NilpotentAlgebra,
    mode: str = "coarse",
    stratum_dims: Mapping[IndexSet, int] | None = None,
    *,
    report: StratificationReport | None = None,
    height: int = 2,
    seed: int = DEFAULT_SEED,
) -> NuclearBounds:
    """Bounds ``lower <= dim_nuc C*(G) <= upper``.

    coarse: ``(2, m + clgth - 1)`` for non-abelian algebras, where clgth is the
    number of strata found by ``report`` (a lower estimate of the coarse length
    unless the stratification is complete).  The tighter lower bound
    ``dim(g/[g, g])`` is reported separately as the real rank.

    fine: ``(max dim Ξ_e, sum dim Ξ_e + count - 1)`` over the discovered strata,
    with dimensions from ``stratum_dims`` or the built-in exact ones.

    Abelian algebras have continuous-trace C*-algebra with spectrum R^m, so
    both modes return ``(m, m)``.
    """
    if mode not in ("coarse", "fine"):
        raise ValueError(f"mode must be 'coarse' or 'fine', not {mode!r}")
    m = alg.dim
    if alg.is_abelian():
        return NuclearBounds(m, m, mode, {IndexSet(): m})
    if report is None:
        report = stratify(alg, height, seed)
    if mode == "coarse":
        return NuclearBounds(2, m + len(report.strata) - 1, mode)

    dims = builtin_stratum_dims(alg, seed)
    if stratum_dims:
        dims.update({IndexSet(tuple(e)): int(d) for e, d in stratum_dims.items()})
    used = {}
    for e in report.index_sets:
        if e not in dims:
            raise UnknownStratumDimension(e)
        used[e] = dims[e]
    lower = max(used.values())
    upper = sum(used.values()) + len(used) - 1
    return NuclearBounds(lower, upper, mode, used)


@dataclass(frozen=True)
class Estimate:
    """A heuristic number; never a proven value."""

    value: int
    label: str = "ESTIMATE"


def probe_stratum_dimension(
    alg: NilpotentAlgebra, witness, seed: int = DEFAULT_SEED, *, directions: int = 12
) -> Estimate:
    """Heuristic ``dim Ξ_e`` at a witness of the stratum ``e = J(witness)``.

    Perturbs the witness along coordinate and random integer directions by a
    few small rational steps, keeps the directions that preserve the jump set,
    and subtracts the orbit dimension ``|e|`` from the rank of the kept set.
    """
    rng = random.Random(seed)
    m = alg.dim
    e = jump_set(alg, witness)
    cands = [alg.basis_vector(i + 1) for i in range(m)]
    cands += [tuple(Fraction(rng.randint(-3, 3)) for _ in range(m)) for _ in range(directions)]
    steps = (Fraction(1, 7), Fraction(-1, 11), Fraction(1, 101))
    kept = [
        d for d in cands
        if any(d) and all(
            jump_set(alg, [w + s * x for w, x in zip(witness, d)]) == e for s in steps
        )
    ]
    return Estimate(max(rank(kept) - len(e), 0))


@dataclass(frozen=True)
class InvariantBundle:
    dim_g: int
    a: int
    real_rank: int
    stable_rank: int
    index: int
    clgth_lower: int
    nuclear_lower: int
    nuclear_upper: int
    mode: str
    exhaustive: bool
    estimate_used: bool
    height: int
    seed: int
    index_formulas: dict[str, int] = field(default_factory=dict)

    def to_json(self) -> dict:
        return asdict(self)


def compute_invariants(
    alg: NilpotentAlgebra,
    *,
    height: int = 2,
    seed: int = DEFAULT_SEED,
    mode: str = "coarse",
    stratum_dims: Mapping[IndexSet, int] | None = None,
    estimate: bool = False,
) -> InvariantBundle:
    """All invariants in one bundle.

    With ``estimate=True`` fine mode fills missing stratum dimensions with
    :func:`probe_stratum_dimension`, and the bundle says so.
    """
    report = stratify(alg, height, seed)
    a = real_rank(alg)
    ind = index(alg, seed)
    dims = dict(stratum_dims or {})
    estimate_used = False
    if mode == "fine" and estimate and not alg.is_abelian():
        known = builtin_stratum_dims(alg, seed)
        for s in report.strata:
            if s.e not in known and s.e not in dims:
                dims[s.e] = probe_stratum_dimension(alg, s.witnesses[0], seed).value
                estimate_used = True
    nb = nuclear_bounds(alg, mode, dims, report=report, seed=seed)
    return InvariantBundle(
        dim_g=alg.dim,
        a=a,
        real_rank=a,
        stable_rank=stable_rank(alg),
        index=ind.value,
        clgth_lower=len(report.strata),
        nuclear_lower=nb.lower,
        nuclear_upper=nb.upper,
        mode=mode,
        exhaustive=report.exhaustive,
        estimate_used=estimate_used,
        height=height,
        seed=seed,
        index_formulas=ind.formulas,
    )
