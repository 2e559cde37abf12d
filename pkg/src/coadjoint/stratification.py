"""Jump indices and the coarse stratification of the dual of a nilpotent Lie algebra.

For a functional ``xi`` the jump set is ``J_xi = {j : g_j ⊄ g(xi) + g_{j-1}}``
with respect to the flag of prefix spans; ``|J_xi|`` is the coadjoint orbit
dimension.  Index sets are totally ordered by ``e1 ≺ e2`` iff
``min(e1 - e2) < min(e2 - e1)`` with ``min ∅ = ∞``, so ``∅`` is the largest.

Nonempty strata are found by evaluating jump sets on small integer lattice
points (exhaustively when affordable, else by seeded sampling).  Strata of
positive codimension are invisible to random real sampling, which is why the
search is on a lattice that contains many degenerate points.
"""

from __future__ import annotations

import functools
import itertools
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable, Iterator, Sequence

from .lie import Functional, NilpotentAlgebra, b_matrix_int, is_adapted
from .linalg import bareiss_echelon, format_rational, nullspace_int, rank, vector

DEFAULT_SEED = 20170611
DEFAULT_BUDGET = 200_000
DEFAULT_SAMPLES = 4000
WITNESS_CAP = 3


@functools.total_ordering
@dataclass(frozen=True)
class IndexSet:
    """Subset of ``{1, ..., m}`` ordered by ``≺`` (``<`` on instances)."""

    elems: tuple[int, ...] = ()

    def __post_init__(self):
        elems = tuple(sorted(set(self.elems)))
        if any(e < 1 for e in elems):
            raise ValueError("index sets contain positive integers only")
        object.__setattr__(self, "elems", elems)

    def __lt__(self, other: IndexSet) -> bool:
        return precedes(self, other)

    def __iter__(self) -> Iterator[int]:
        return iter(self.elems)

    def __len__(self) -> int:
        return len(self.elems)

    def __contains__(self, j) -> bool:
        return j in self.elems

    def __str__(self) -> str:
        return "{" + ", ".join(map(str, self.elems)) + "}" if self.elems else "∅"


def precedes(e1: IndexSet | Iterable[int], e2: IndexSet | Iterable[int]) -> bool:
    """Strict total order ``e1 ≺ e2``."""
    s1, s2 = set(e1), set(e2)
    if s1 == s2:
        return False
    inf = float("inf")
    return min(s1 - s2, default=inf) < min(s2 - s1, default=inf)


def _prefix_dims(kernel: Sequence[Sequence], m: int) -> list[int]:
    """``d[j] = dim(K + g_j)`` for ``j = 0..m``.

    Modulo ``g_j`` only coordinates ``j+1..m`` survive, so ``dim(K + g_j)``
    is ``j`` plus the rank of ``K`` restricted to those coordinates.  An
    echelon basis of ``K`` built from the last coordinate downward gives all
    these ranks at once: rows whose top index exceeds ``j`` stay independent,
    the others vanish.
    """
    rows = [list(reversed(v)) for v in kernel]
    _, pivots = bareiss_echelon(rows)
    tops = [m - 1 - p for p in pivots]  # 0-based index of the last nonzero entry
    return [j + sum(1 for t in tops if t >= j) for j in range(m + 1)]


def jump_set(alg: NilpotentAlgebra, xi: Sequence) -> IndexSet:
    """``J_xi`` computed from prefix dimensions of ``g(xi) + g_j``."""
    if not is_adapted(alg):
        raise ValueError(f"{alg}: basis is not adapted; use jordan_holder_basis first")
    m = alg.dim
    kernel = nullspace_int(b_matrix_int(alg, xi), m)
    d = _prefix_dims(kernel, m)
    return IndexSet(tuple(j for j in range(1, m + 1) if d[j] > d[j - 1]))


@dataclass(frozen=True)
class Stratum:
    e: IndexSet
    witnesses: tuple[Functional, ...]


@dataclass(frozen=True)
class StratificationReport:
    strata: tuple[Stratum, ...]
    height: int
    seed: int
    exhaustive: bool
    points: int = field(default=0, compare=False)

    @property
    def index_sets(self) -> list[IndexSet]:
        return [s.e for s in self.strata]

    def to_json(self) -> dict:
        return {
            "strata": [
                {"e": list(s.e), "witnesses": [[format_rational(x) for x in w] for w in s.witnesses]}
                for s in self.strata
            ],
            "height": self.height,
            "seed": self.seed,
            "exhaustive": self.exhaustive,
        }

    @classmethod
    def from_json(cls, data: dict) -> StratificationReport:
        strata = tuple(
            Stratum(IndexSet(tuple(s["e"])), tuple(vector(w) for w in s["witnesses"]))
            for s in data["strata"]
        )
        return cls(strata, int(data["height"]), int(data["seed"]), bool(data["exhaustive"]))


def lattice_points(
    m: int, height: int, seed: int, *, budget: int = DEFAULT_BUDGET, samples: int = DEFAULT_SAMPLES
) -> tuple[list[tuple[int, ...]], bool]:
    """Points to probe and whether they are the whole lattice ``[-h, h]^m``."""
    if height < 1:
        raise ValueError("height must be positive")
    side = range(-height, height + 1)
    if m * (2 * height + 1) ** m <= budget:
        return list(itertools.product(side, repeat=m)), True
    pts = [(0,) * m]
    for i in range(m):
        for c in side:
            if c:
                pts.append(tuple(c if k == i else 0 for k in range(m)))
    rng = random.Random(seed)
    pts.extend(tuple(rng.randint(-height, height) for _ in range(m)) for _ in range(samples))
    return pts, False


def _jump_sets_chunk(alg: NilpotentAlgebra, points: list[tuple[int, ...]]) -> list[tuple[int, ...]]:
    return [jump_set(alg, p).elems for p in points]


def stratify(
    alg: NilpotentAlgebra,
    height: int = 2,
    seed: int = DEFAULT_SEED,
    *,
    budget: int = DEFAULT_BUDGET,
    samples: int = DEFAULT_SAMPLES,
    workers: int = 1,
    on_point: Callable[[Functional, IndexSet], None] | None = None,
) -> StratificationReport:
    """Discover nonempty coarse strata by probing integer lattice points.

    The whole lattice ``[-height, height]^m`` is enumerated when
    ``m * (2*height + 1)**m <= budget``; otherwise the origin, all axis points
    and ``samples`` seeded random lattice points are used.  Up to three
    witnesses per stratum are kept, in probe order.  ``on_point`` receives
    every probed functional with its jump set.
    """
    points, exhaustive = lattice_points(alg.dim, height, seed, budget=budget, samples=samples)
    if workers > 1 and len(points) > 1000:
        size = -(-len(points) // workers)
        chunks = [points[i : i + size] for i in range(0, len(points), size)]
        with ProcessPoolExecutor(workers) as pool:
            results = [e for part in pool.map(_jump_sets_chunk, [alg] * len(chunks), chunks) for e in part]
    else:
        results = _jump_sets_chunk(alg, points)

    found: dict[IndexSet, list[Functional]] = {}
    for p, elems in zip(points, results):
        e = IndexSet(elems)
        xi = vector(p)
        if on_point is not None:
            on_point(xi, e)
        wit = found.setdefault(e, [])
        if len(wit) < WITNESS_CAP:
            wit.append(xi)
    strata = tuple(Stratum(e, tuple(found[e])) for e in sorted(found))
    return StratificationReport(strata, height, seed, exhaustive, len(points))


def coarse_length_lower_bound(report: StratificationReport) -> int:
    return len(report.strata)


class GenericSamplingError(RuntimeError):
    pass


def generic_stratum(
    alg: NilpotentAlgebra,
    seed: int = DEFAULT_SEED,
    *,
    batch: int = 24,
    coord_range: int = 100,
    retries: int = 8,
) -> IndexSet:
    """Jump set of the dense open stratum (the ``≺``-least one).

    Each draw takes ``batch`` random integer functionals, keeps those of
    maximal ``rank B_xi`` and returns the ``≺``-least of their jump sets.
    Draws are repeated (doubling the coordinate range) until two consecutive
    independent draws agree.
    """
    rng = random.Random(seed)
    previous = None
    for _ in range(retries):
        best_rank, best = -1, None
        for _ in range(batch):
            xi = [rng.randint(-coord_range, coord_range) for _ in range(alg.dim)]
            r = rank(b_matrix_int(alg, xi))
            if r < best_rank:
                continue
            e = jump_set(alg, xi)
            if r > best_rank or e < best:
                best_rank, best = r, e
        if best == previous:
            return best
        previous = best
        coord_range *= 2
    raise GenericSamplingError(
        f"{alg}: generic stratum not stable after {retries} draws; enlarge the sampling range"
    )
