import itertools
import json
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from coadjoint import heisenberg_dual as hd
from coadjoint.heisenberg_dual import DualSubset
from coadjoint.intervals import INF, Interval

# --- strategies --------------------------------------------------------------

ENDS = [Fraction(k, 2) for k in range(-6, 7)]


@st.composite
def intervals(draw, allow_inf=True):
    pool = ENDS + ([-INF, INF] if allow_inf else [])
    a, b = sorted(draw(st.lists(st.sampled_from(pool), min_size=2, max_size=2)))
    return Interval(a, b, draw(st.booleans()), draw(st.booleans()))


@st.composite
def boxes(draw, d):
    return tuple(draw(intervals(allow_inf=draw(st.booleans()))) for _ in range(d))


@st.composite
def descriptors(draw, n=1):
    part1 = draw(st.lists(intervals(), max_size=3))
    choice = draw(st.integers(0, 5))
    if choice == 0:
        part2 = (hd.full_box(2 * n),)
    else:
        part2 = draw(st.lists(boxes(2 * n), max_size=2))
    return DualSubset(n, tuple(part1), tuple(part2))


ts = st.builds(Fraction, st.integers(-6, 6), st.integers(1, 3))

# sample points of X = Γ1 ⊔ Γ2 on a grid that includes all endpoints and midpoints
GRID = [Fraction(k, 4) for k in range(-28, 29)] + [Fraction(100), Fraction(-100)]
POINTS1 = [("1", x) for x in GRID if x != 0]
POINTS2 = [("2", p) for p in itertools.product(GRID[::2] + [Fraction(100)], repeat=2)]


def member(s: DualSubset, pt) -> bool:
    kind, x = pt
    if kind == "1":
        return any(iv.contains(x) for iv in s.part1)
    return any(all(iv.contains(c) for iv, c in zip(b, x)) for b in s.part2)


def same_points(s, t, pts):
    return all(member(s, p) == member(t, p) for p in pts)


# --- examples ----------------------------------------------------------------


def test_closure_examples():
    assert hd.closure(DualSubset(1, (Interval.closed(1, 2),))) == DualSubset(1, (Interval.closed(1, 2),))
    open_box = DualSubset(1, (), (hd.character_box([0, 0], [1, 1], closed=False),))
    assert hd.closure(open_box) == DualSubset(1, (), (hd.character_box([0, 0], [1, 1]),))
    near_zero = DualSubset(1, (Interval.open(0, 1),))
    c = hd.closure(near_zero)
    assert c.part1 == (Interval(0, 1, False, True),) and c.part2_is_all


def test_quasi_compact_examples():
    k1 = (Interval(-1, 0, True, False), Interval(0, 1, False, True))
    unit = (hd.character_box([0, 0], [1, 1]),)
    assert hd.is_quasi_compact(DualSubset(1, k1, unit)).quasi_compact
    no_chars = hd.is_quasi_compact(DualSubset(1, k1))
    assert not no_chars.quasi_compact and no_chars.failed_conditions == (3,)
    assert no_chars.reasons == ("empty-character-part-with-0-accumulation",)
    unbounded = hd.is_quasi_compact(DualSubset(1, (Interval(1, INF, True, False),)))
    assert unbounded.reasons == (hd.INFINITE_PART_UNBOUNDED,)
    half_open = hd.is_quasi_compact(DualSubset(1, (), (hd.character_box([0, 0], [1, 1], closed=False),)))
    assert half_open.failed_conditions == (1,)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_intersection_counterexample(n):
    c, c_prime = hd.intersection_counterexample(n)
    assert hd.is_quasi_compact(c).quasi_compact
    assert hd.is_quasi_compact(c_prime).quasi_compact
    inter = hd.intersect(c, c_prime)
    assert inter.part1 == c.part1 and not inter.part2
    decision = hd.is_quasi_compact(inter)
    assert not decision.quasi_compact and decision.failed_conditions == (3,)


@pytest.mark.parametrize("n", [1, 2])
def test_solving_series(n):
    g1, g2, x = DualSubset.gamma1(n), DualSubset.gamma2(n), DualSubset.whole(n)
    assert hd.closure(g1) == x
    assert hd.interior(g1) == g1
    assert hd.is_closed(g2)
    assert hd.boundary(g1) == g2
    assert hd.complement(g1) == g2


def test_r_act_examples():
    s = DualSubset(1, (Interval.closed(1, 2),), (hd.character_box([0, 0], [1, 1]),))
    assert hd.r_act(1, s) == s
    assert hd.r_act(0, s) == DualSubset.origin(1)
    assert hd.r_act(0, DualSubset.empty(1)) == DualSubset.empty(1)
    flipped = hd.r_act(-2, s)
    assert flipped.part1 == (Interval.closed(-4, -2),)


def test_orbit_closure_contains_all_characters():
    for lam in (Fraction(1), Fraction(-3, 2)):
        orb = hd.orbit(1, lam, Interval(0, 2, False, True))
        assert hd.closure(orb).part2_is_all
        assert not hd.closure(hd.orbit(1, lam, Interval.closed(1, 2))).part2
    with pytest.raises(ValueError):
        hd.orbit(1, 0, Interval.closed(1, 2))


def test_mixed_dimensions_rejected():
    with pytest.raises(ValueError):
        hd.union(DualSubset.empty(1), DualSubset.empty(2))
    with pytest.raises(ValueError):
        DualSubset(1, (), ((Interval.closed(0, 1),),))


def test_json_schema_and_mixed_boxes():
    c, _ = hd.intersection_counterexample(1)
    data = c.to_json()
    assert data["n"] == 1 and data["part2"] == [{"min": [0, 0], "max": [1, 1], "closed": True}]
    assert data["part1"][0] == {"lo": -1, "hi": 0, "lo_closed": True, "hi_closed": False}
    assert DualSubset.whole(1).to_json()["part2"] == "ALL"
    assert DualSubset.gamma1(1).to_json()["part2"] == "EMPTY"
    mixed = DualSubset(1, (), ((Interval(0, 1, True, False), Interval.closed(0, 1)),))
    assert DualSubset.from_json(json.loads(json.dumps(mixed.to_json()))) == mixed
    with pytest.raises(ValueError):
        DualSubset.from_json({"n": 1, "part2": "SOME"})


# --- properties --------------------------------------------------------------

PROP = settings(max_examples=1000)


@PROP
@given(descriptors(), descriptors())
def test_closure_axioms(s, u):
    c = hd.closure(s)
    assert hd.closure(c) == c
    assert hd.issubset(s, c)
    t = hd.union(s, u)
    assert hd.issubset(c, hd.closure(t))


@PROP
@given(descriptors())
def test_quasi_compact_reflections(s):
    if hd.is_quasi_compact(s).quasi_compact:
        p1 = s.only_part1()
        assert hd.intersect(hd.closure(p1), DualSubset.gamma1(1)) == p1
        assert hd.is_quasi_compact(s.only_part2()).quasi_compact


@PROP
@given(descriptors(), descriptors())
def test_union_of_quasi_compact_sets(s, t):
    if hd.is_quasi_compact(s).quasi_compact and hd.is_quasi_compact(t).quasi_compact:
        assert hd.is_quasi_compact(hd.union(s, t)).quasi_compact


@PROP
@given(ts, ts, descriptors())
def test_r_space_axioms(t, u, s):
    assert hd.r_act(1, s) == s
    assert hd.r_act(t, hd.r_act(u, s)) == hd.r_act(t * u, s)
    origin = DualSubset.origin(1)
    assert hd.r_act(0, s) == (origin if not s.is_empty else DualSubset.empty(1))
    assert hd.r_act(t, origin) == origin


@settings(max_examples=150)
@given(descriptors(), descriptors())
def test_set_operations_pointwise(s, t):
    u, i, c = hd.union(s, t), hd.intersect(s, t), hd.complement(s)
    for p in POINTS1 + POINTS2:
        in_s, in_t = member(s, p), member(t, p)
        assert member(u, p) == (in_s or in_t)
        assert member(i, p) == (in_s and in_t)
        assert member(c, p) == (not in_s)


@settings(max_examples=150)
@given(descriptors(), descriptors())
def test_subset_and_equality(s, t):
    assert hd.issubset(hd.intersect(s, t), s)
    assert hd.set_equal(hd.intersect(s, s), s)
    assert hd.set_equal(hd.complement(hd.complement(s)), s)
    if hd.issubset(s, t):
        assert same_points(hd.intersect(s, t), s, POINTS1 + POINTS2)


@settings(max_examples=150)
@given(descriptors())
def test_interior_and_boundary(s):
    i, c, b = hd.interior(s), hd.closure(s), hd.boundary(s)
    assert hd.issubset(i, s) and hd.interior(i) == i
    assert hd.is_closed(b)
    assert hd.set_equal(hd.union(i, b), c)
    assert hd.intersect(i, b).is_empty


@settings(max_examples=200)
@given(descriptors())
def test_canonical_form_is_stable(s):
    again = DualSubset.from_json(json.loads(json.dumps(s.to_json())))
    assert again == s
    assert all(not iv.contains(0) for iv in s.part1)


@settings(max_examples=100)
@given(descriptors(n=2), descriptors(n=2))
def test_closure_axioms_n2(s, u):
    c = hd.closure(s)
    assert hd.closure(c) == c and hd.issubset(s, c)
    assert hd.issubset(c, hd.closure(hd.union(s, u)))
