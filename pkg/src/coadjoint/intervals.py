"""Exact rational intervals and finite unions of axis-aligned boxes.

Endpoints are Fractions or ``±math.inf``; infinite endpoints are always open.
Set operations on box unions that are not closed under the box class
(complement, subset tests) go through the common cell decomposition of all
boxes involved: along every axis the finite endpoints cut the line into
points and open gaps, and every box is exactly a union of the resulting
product cells.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .linalg import as_fraction, format_rational

INF = math.inf

Box = tuple["Interval", ...]


def endpoint(value) -> Fraction | float:
    if isinstance(value, float) and math.isinf(value):
        return value
    if isinstance(value, str) and value.strip() in ("inf", "+inf", "-inf"):
        return -INF if value.strip() == "-inf" else INF
    return as_fraction(value)


def format_endpoint(value) -> int | str:
    if isinstance(value, float):
        return "-inf" if value < 0 else "inf"
    return format_rational(value)


@dataclass(frozen=True)
class Interval:
    lo: Fraction | float
    hi: Fraction | float
    lo_closed: bool = True
    hi_closed: bool = True

    def __post_init__(self):
        lo, hi = endpoint(self.lo), endpoint(self.hi)
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "hi", hi)
        if lo == -INF:
            object.__setattr__(self, "lo_closed", False)
        if hi == INF:
            object.__setattr__(self, "hi_closed", False)

    @classmethod
    def closed(cls, lo, hi) -> Interval:
        return cls(lo, hi, True, True)

    @classmethod
    def open(cls, lo, hi) -> Interval:
        return cls(lo, hi, False, False)

    @classmethod
    def point(cls, x) -> Interval:
        return cls(x, x, True, True)

    @classmethod
    def line(cls) -> Interval:
        return cls(-INF, INF, False, False)

    @property
    def is_empty(self) -> bool:
        return self.lo > self.hi or (self.lo == self.hi and not (self.lo_closed and self.hi_closed))

    @property
    def is_bounded(self) -> bool:
        return self.lo != -INF and self.hi != INF

    @property
    def is_closed(self) -> bool:
        """Closed as a subset of R."""
        return self.is_empty or (
            (self.lo == -INF or self.lo_closed) and (self.hi == INF or self.hi_closed)
        )

    def contains(self, x) -> bool:
        if x < self.lo or x > self.hi:
            return False
        if x == self.lo and not self.lo_closed:
            return False
        if x == self.hi and not self.hi_closed:
            return False
        return True

    def issubset(self, other: Interval) -> bool:
        if self.is_empty:
            return True
        if self.lo < other.lo or (self.lo == other.lo and self.lo_closed and not other.lo_closed):
            return False
        if self.hi > other.hi or (self.hi == other.hi and self.hi_closed and not other.hi_closed):
            return False
        return True

    def intersect(self, other: Interval) -> Interval:
        if self.lo > other.lo or (self.lo == other.lo and not self.lo_closed):
            lo, lo_c = self.lo, self.lo_closed
        else:
            lo, lo_c = other.lo, other.lo_closed
        if self.hi < other.hi or (self.hi == other.hi and not self.hi_closed):
            hi, hi_c = self.hi, self.hi_closed
        else:
            hi, hi_c = other.hi, other.hi_closed
        return Interval(lo, hi, lo_c, hi_c)

    def closure(self) -> Interval:
        if self.is_empty:
            return self
        return Interval(self.lo, self.hi, True, True)

    def scale(self, t: Fraction) -> Interval:
        if t == 0:
            raise ValueError("scaling by zero collapses the interval; handle separately")
        lo, hi = t * self.lo, t * self.hi
        if t > 0:
            return Interval(lo, hi, self.lo_closed, self.hi_closed)
        return Interval(hi, lo, self.hi_closed, self.lo_closed)

    def mergeable(self, other: Interval) -> bool:
        """Whether the union of two nonempty intervals is an interval."""
        a, b = (self, other) if _lo_key(self) <= _lo_key(other) else (other, self)
        return b.lo < a.hi or (b.lo == a.hi and (a.hi_closed or b.lo_closed))

    def hull(self, other: Interval) -> Interval:
        lo, lo_c = min((self.lo, not self.lo_closed), (other.lo, not other.lo_closed))
        hi, hi_c = max((self.hi, self.hi_closed), (other.hi, other.hi_closed))
        return Interval(lo, hi, not lo_c, hi_c)

    def to_json(self) -> dict:
        return {
            "lo": format_endpoint(self.lo),
            "hi": format_endpoint(self.hi),
            "lo_closed": self.lo_closed,
            "hi_closed": self.hi_closed,
        }

    @classmethod
    def from_json(cls, data: dict) -> Interval:
        return cls(data["lo"], data["hi"], bool(data.get("lo_closed", True)), bool(data.get("hi_closed", True)))

    def __str__(self) -> str:
        if self.is_empty:
            return "∅"
        if self.lo == self.hi:
            return f"{{{self.lo}}}"
        return f"{'[' if self.lo_closed else '('}{format_endpoint(self.lo)}, {format_endpoint(self.hi)}{']' if self.hi_closed else ')'}"


def _lo_key(iv: Interval):
    return (iv.lo, 0 if iv.lo_closed else 1)


def _sort_key(iv: Interval):
    return (iv.lo, 0 if iv.lo_closed else 1, iv.hi, 1 if iv.hi_closed else 0)


def merge_intervals(intervals: Iterable[Interval]) -> tuple[Interval, ...]:
    """Canonical form: sorted, disjoint, with mergeable neighbours merged."""
    ivs = sorted((iv for iv in intervals if not iv.is_empty), key=_sort_key)
    out: list[Interval] = []
    for iv in ivs:
        if out and out[-1].mergeable(iv):
            out[-1] = out[-1].hull(iv)
        else:
            out.append(iv)
    return tuple(out)


# --- boxes -------------------------------------------------------------------


def box_is_empty(box: Box) -> bool:
    return any(iv.is_empty for iv in box)


def box_contains(box: Box, p: Sequence) -> bool:
    return all(iv.contains(x) for iv, x in zip(box, p))


def box_intersect(a: Box, b: Box) -> Box:
    return tuple(x.intersect(y) for x, y in zip(a, b))


def box_issubset(a: Box, b: Box) -> bool:
    return box_is_empty(a) or all(x.issubset(y) for x, y in zip(a, b))


def box_closure(box: Box) -> Box:
    return tuple(iv.closure() for iv in box)


def box_scale(box: Box, t: Fraction) -> Box:
    return tuple(iv.scale(t) for iv in box)


def full_box(d: int) -> Box:
    return tuple(Interval.line() for _ in range(d))


def point_box(p: Sequence) -> Box:
    return tuple(Interval.point(x) for x in p)


def _axis_pieces(values: Iterable) -> list[tuple[Interval, Fraction]]:
    pts = sorted({v for v in values if not (isinstance(v, float) and math.isinf(v))})
    if not pts:
        return [(Interval.line(), Fraction(0))]
    pieces = [(Interval(-INF, pts[0], False, False), pts[0] - 1)]
    for a, b in zip(pts, pts[1:]):
        pieces.append((Interval.point(a), a))
        pieces.append((Interval.open(a, b), (a + b) / 2))
    pieces.append((Interval.point(pts[-1]), pts[-1]))
    pieces.append((Interval(pts[-1], INF, False, False), pts[-1] + 1))
    return pieces


def cells(d: int, *box_lists: Sequence[Box]) -> Iterable[tuple[Box, tuple]]:
    """Common refinement of all given boxes: ``(cell, sample point)`` pairs."""
    axes = []
    for k in range(d):
        vals = [v for boxes in box_lists for b in boxes for v in (b[k].lo, b[k].hi)]
        axes.append(_axis_pieces(vals))
    for combo in itertools.product(*axes):
        yield tuple(c for c, _ in combo), tuple(s for _, s in combo)


def union_contains(boxes: Sequence[Box], p: Sequence) -> bool:
    return any(box_contains(b, p) for b in boxes)


def boxes_issubset(a: Sequence[Box], b: Sequence[Box], d: int) -> bool:
    """Whether the union of ``a`` lies inside the union of ``b``."""
    a = [x for x in a if not box_is_empty(x)]
    if not a:
        return True
    if all(any(box_issubset(x, y) for y in b) for x in a):
        return True
    return all(
        union_contains(b, s) for _, s in cells(d, a, b) if union_contains(a, s)
    )


def boxes_complement(boxes: Sequence[Box], d: int) -> tuple[Box, ...]:
    boxes = [b for b in boxes if not box_is_empty(b)]
    if not boxes:
        return (full_box(d),)
    return merge_boxes([c for c, s in cells(d, boxes) if not union_contains(boxes, s)], d)


def merge_boxes(boxes: Iterable[Box], d: int) -> tuple[Box, ...]:
    """Coalesce boxes that differ on one axis only and whose intervals there
    are mergeable; drop empty boxes and boxes contained in another one."""
    boxes = [b for b in boxes if not box_is_empty(b)]
    changed = True
    while changed:
        changed = False
        for k in range(d):
            groups: dict[tuple, list[Interval]] = {}
            for b in boxes:
                groups.setdefault(b[:k] + b[k + 1 :], []).append(b[k])
            merged = []
            for rest, ivs in groups.items():
                m = merge_intervals(ivs)
                if len(m) < len(ivs):
                    changed = True
                merged.extend(rest[:k] + (iv,) + rest[k:] for iv in m)
            boxes = merged
    kept = []
    for i, b in enumerate(boxes):
        if any(box_issubset(b, c) and (b != c or j < i) for j, c in enumerate(boxes) if j != i):
            continue
        kept.append(b)
    return tuple(sorted(set(kept), key=lambda b: tuple(_sort_key(iv) for iv in b)))
