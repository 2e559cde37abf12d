"""Exact model of the unitary dual of the Heisenberg group ``H_{2n+1}``.

The dual is ``X = Γ1 ⊔ Γ2`` where ``Γ1 ≅ R^×`` parametrizes the
infinite-dimensional irreducible representations (by the value of the
functional on the center) and ``Γ2 ≅ R^{2n}`` is the space of characters.
A set ``F ⊆ X`` is closed iff ``F ∩ Γ1`` is closed in ``R^×``, ``F ∩ Γ2`` is
closed in ``R^{2n}``, and ``Γ2 ⊆ F`` whenever 0 is an accumulation point of
``F ∩ Γ1``.  Subsets are described by finitely many intervals (part1) and
axis-aligned boxes (part2).

The multiplicative action ``t · O_xi = O_{t xi}`` scales both parts and sends
everything to the trivial character when ``t = 0``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .intervals import (
    INF,
    Box,
    Interval,
    box_closure,
    box_intersect,
    box_scale,
    boxes_complement,
    boxes_issubset,
    format_endpoint,
    full_box,
    merge_boxes,
    merge_intervals,
    point_box,
)
from .linalg import as_fraction

# reason codes, keyed to the three conditions of the quasi-compactness criterion
CHARACTER_PART_NOT_CLOSED = "character-part-not-closed"
CHARACTER_PART_UNBOUNDED = "character-part-unbounded"
INFINITE_PART_NOT_CLOSED = "infinite-part-not-closed"
INFINITE_PART_UNBOUNDED = "infinite-part-unbounded"
ZERO_ACCUMULATION_WITHOUT_CHARACTERS = "empty-character-part-with-0-accumulation"

CONDITION = {
    CHARACTER_PART_NOT_CLOSED: 1,
    CHARACTER_PART_UNBOUNDED: 1,
    INFINITE_PART_NOT_CLOSED: 2,
    INFINITE_PART_UNBOUNDED: 2,
    ZERO_ACCUMULATION_WITHOUT_CHARACTERS: 3,
}


def _remove_zero(intervals: Iterable[Interval]) -> list[Interval]:
    out = []
    for iv in intervals:
        if iv.contains(0):
            out.append(Interval(iv.lo, 0, iv.lo_closed, False))
            out.append(Interval(0, iv.hi, False, iv.hi_closed))
        else:
            out.append(iv)
    return out


@dataclass(frozen=True)
class DualSubset:
    """``part1 ⊆ R^×`` (intervals) together with ``part2 ⊆ R^{2n}`` (boxes).

    Construction canonicalizes: 0 is removed from part1, intervals are merged,
    empty and redundant boxes are dropped.
    """

    n: int
    part1: tuple[Interval, ...] = ()
    part2: tuple[Box, ...] = ()

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("n must be at least 1")
        d = 2 * self.n
        for box in self.part2:
            if len(box) != d:
                raise ValueError(f"box of dimension {len(box)} in R^{d}")
        object.__setattr__(self, "part1", merge_intervals(_remove_zero(self.part1)))
        object.__setattr__(self, "part2", merge_boxes(self.part2, d))

    @property
    def d(self) -> int:
        return 2 * self.n

    # named subsets
    @classmethod
    def empty(cls, n: int) -> DualSubset:
        return cls(n)

    @classmethod
    def gamma1(cls, n: int) -> DualSubset:
        return cls(n, (Interval.line(),))

    @classmethod
    def gamma2(cls, n: int) -> DualSubset:
        return cls(n, (), (full_box(2 * n),))

    @classmethod
    def whole(cls, n: int) -> DualSubset:
        return cls(n, (Interval.line(),), (full_box(2 * n),))

    @classmethod
    def origin(cls, n: int) -> DualSubset:
        """The distinguished point: the trivial character."""
        return cls(n, (), (point_box([0] * (2 * n)),))

    @property
    def is_empty(self) -> bool:
        return not self.part1 and not self.part2

    @property
    def part2_is_all(self) -> bool:
        return self.part2 == (full_box(self.d),)

    def only_part1(self) -> DualSubset:
        return DualSubset(self.n, self.part1, ())

    def only_part2(self) -> DualSubset:
        return DualSubset(self.n, (), self.part2)

    # JSON
    def to_json(self) -> dict:
        if not self.part2:
            part2 = "EMPTY"
        elif self.part2_is_all:
            part2 = "ALL"
        else:
            part2 = [_box_to_json(b) for b in self.part2]
        return {"n": self.n, "part1": [iv.to_json() for iv in self.part1], "part2": part2}

    @classmethod
    def from_json(cls, data: dict) -> DualSubset:
        n = int(data["n"])
        part1 = tuple(Interval.from_json(iv) for iv in data.get("part1", []))
        raw = data.get("part2", "EMPTY")
        if raw == "EMPTY":
            part2 = ()
        elif raw == "ALL":
            part2 = (full_box(2 * n),)
        elif isinstance(raw, list):
            part2 = tuple(_box_from_json(b, 2 * n) for b in raw)
        else:
            raise ValueError(f"part2 must be 'EMPTY', 'ALL' or a list of boxes, not {raw!r}")
        return cls(n, part1, part2)

    def __str__(self) -> str:
        p1 = " ∪ ".join(map(str, self.part1)) or "∅"
        if not self.part2:
            p2 = "∅"
        elif self.part2_is_all:
            p2 = "Γ2"
        else:
            p2 = " ∪ ".join("×".join(map(str, b)) for b in self.part2)
        return f"Γ1: {p1}; Γ2: {p2}"


def _box_to_json(box: Box) -> dict:
    out = {
        "min": [format_endpoint(iv.lo) for iv in box],
        "max": [format_endpoint(iv.hi) for iv in box],
    }
    lo_c = [iv.lo_closed or iv.lo == -INF for iv in box]
    hi_c = [iv.hi_closed or iv.hi == INF for iv in box]
    if all(lo_c) and all(hi_c):
        out["closed"] = True
    elif not any(iv.lo_closed for iv in box) and not any(iv.hi_closed for iv in box):
        out["closed"] = False
    else:
        # mixed endpoints, e.g. after intersecting an open and a closed box
        out["closed"] = False
        out["min_closed"] = [iv.lo_closed for iv in box]
        out["max_closed"] = [iv.hi_closed for iv in box]
    return out


def _box_from_json(data: dict, d: int) -> Box:
    lo, hi = data["min"], data["max"]
    if len(lo) != d or len(hi) != d:
        raise ValueError(f"box corners must have {d} coordinates")
    closed = bool(data.get("closed", True))
    lo_c = data.get("min_closed", [closed] * d)
    hi_c = data.get("max_closed", [closed] * d)
    return tuple(Interval(a, b, bool(x), bool(y)) for a, b, x, y in zip(lo, hi, lo_c, hi_c))


def _same_n(s: DualSubset, t: DualSubset) -> None:
    if s.n != t.n:
        raise ValueError(f"mixed ambient dimensions: n={s.n} and n={t.n}")


def accumulates_at_zero(s: DualSubset) -> bool:
    """Whether 0 is an accumulation point of part1.

    Canonical intervals never contain 0, so this happens exactly when some
    interval has 0 as an endpoint.
    """
    return any(iv.lo == 0 or iv.hi == 0 for iv in s.part1)


def _closure_part1(part1: Sequence[Interval]) -> tuple[Interval, ...]:
    # closure inside R^×: finite nonzero endpoints become closed, 0 stays out
    return tuple(
        Interval(iv.lo, iv.hi, iv.lo != 0 and iv.lo != -INF, iv.hi != 0 and iv.hi != INF)
        for iv in part1
    )


def closure(s: DualSubset) -> DualSubset:
    part2 = (full_box(s.d),) if accumulates_at_zero(s) else tuple(box_closure(b) for b in s.part2)
    return DualSubset(s.n, _closure_part1(s.part1), part2)


def union(s: DualSubset, t: DualSubset) -> DualSubset:
    _same_n(s, t)
    return DualSubset(s.n, s.part1 + t.part1, s.part2 + t.part2)


def intersect(s: DualSubset, t: DualSubset) -> DualSubset:
    _same_n(s, t)
    part1 = tuple(a.intersect(b) for a in s.part1 for b in t.part1)
    part2 = tuple(box_intersect(a, b) for a in s.part2 for b in t.part2)
    return DualSubset(s.n, part1, part2)


def complement(s: DualSubset) -> DualSubset:
    """``X \\ s``."""
    gaps = []
    lo, lo_closed = -INF, False
    for iv in s.part1:
        gaps.append(Interval(lo, iv.lo, lo_closed, not iv.lo_closed))
        lo, lo_closed = iv.hi, not iv.hi_closed
    gaps.append(Interval(lo, INF, lo_closed, False))
    return DualSubset(s.n, tuple(gaps), boxes_complement(s.part2, s.d))


def interior(s: DualSubset) -> DualSubset:
    return complement(closure(complement(s)))


def boundary(s: DualSubset) -> DualSubset:
    return intersect(closure(s), complement(interior(s)))


def issubset(s: DualSubset, t: DualSubset) -> bool:
    _same_n(s, t)
    # canonical part1 intervals are the connected components
    if not all(any(a.issubset(b) for b in t.part1) for a in s.part1):
        return False
    return boxes_issubset(s.part2, t.part2, s.d)


def set_equal(s: DualSubset, t: DualSubset) -> bool:
    return issubset(s, t) and issubset(t, s)


def is_closed(s: DualSubset) -> bool:
    return issubset(closure(s), s)


@dataclass(frozen=True)
class QCDecision:
    quasi_compact: bool
    reasons: tuple[str, ...] = ()

    @property
    def failed_conditions(self) -> tuple[int, ...]:
        return tuple(sorted({CONDITION[r] for r in self.reasons}))

    def to_json(self) -> dict:
        return {"quasi_compact": self.quasi_compact, "reasons": list(self.reasons)}


def is_quasi_compact(s: DualSubset) -> QCDecision:
    """Quasi-compactness in the non-Hausdorff topology of ``X``.

    ``s`` is quasi-compact iff (1) its character part is compact, (2) its
    part in ``Γ1`` is closed in ``R^×`` and bounded, and (3) if that part
    accumulates at 0, the character part is nonempty.
    """
    reasons = []
    part2 = s.only_part2()
    if not is_closed(part2):
        reasons.append(CHARACTER_PART_NOT_CLOSED)
    if not all(iv.is_bounded for box in s.part2 for iv in box):
        reasons.append(CHARACTER_PART_UNBOUNDED)
    if _closure_part1(s.part1) != s.part1:
        reasons.append(INFINITE_PART_NOT_CLOSED)
    if not all(iv.is_bounded for iv in s.part1):
        reasons.append(INFINITE_PART_UNBOUNDED)
    if accumulates_at_zero(s) and not s.part2:
        reasons.append(ZERO_ACCUMULATION_WITHOUT_CHARACTERS)
    return QCDecision(not reasons, tuple(reasons))


def r_act(t, s: DualSubset) -> DualSubset:
    """``t · s`` for the multiplicative action of R on the dual."""
    t = as_fraction(t)
    if t == 0:
        return DualSubset.empty(s.n) if s.is_empty else DualSubset.origin(s.n)
    return DualSubset(s.n, tuple(iv.scale(t) for iv in s.part1), tuple(box_scale(b, t) for b in s.part2))


def orbit(n: int, lam, params: Interval) -> DualSubset:
    """``{t · λ : t ∈ params}`` for the point ``λ ∈ Γ1``."""
    lam = as_fraction(lam)
    if lam == 0:
        raise ValueError("λ = 0 is not a point of Γ1")
    part1 = (params.scale(lam),)
    part2 = (point_box([0] * (2 * n)),) if params.contains(0) else ()
    return DualSubset(n, part1, part2)


def character_box(lo: Sequence, hi: Sequence, closed: bool = True) -> Box:
    return tuple(Interval(a, b, closed, closed) for a, b in zip(lo, hi))


def intersection_counterexample(n: int) -> tuple[DualSubset, DualSubset]:
    """Two quasi-compact sets whose intersection is not quasi-compact.

    Both share ``K1 = [-1, 0) ∪ (0, 1]`` in Γ1 and carry disjoint compact
    boxes ``[0, 1]^{2n}`` and ``[2, 3]^{2n}`` in Γ2.
    """
    k1 = (Interval(-1, 0, True, False), Interval(0, 1, False, True))
    d = 2 * n
    c = DualSubset(n, k1, (character_box([0] * d, [1] * d),))
    c_prime = DualSubset(n, k1, (character_box([2] * d, [3] * d),))
    return c, c_prime


__all__ = [
    "DualSubset",
    "QCDecision",
    "Interval",
    "accumulates_at_zero",
    "boundary",
    "character_box",
    "closure",
    "complement",
    "interior",
    "intersect",
    "intersection_counterexample",
    "is_closed",
    "is_quasi_compact",
    "issubset",
    "orbit",
    "r_act",
    "set_equal",
    "union",
]
