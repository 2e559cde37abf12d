import itertools
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from coadjoint import catalog
from coadjoint.lie import b_matrix, coadjoint_act, is_character, stabilizer
from coadjoint.linalg import Subspace, rank, rref
from coadjoint.stratification import (
    GenericSamplingError,
    IndexSet,
    StratificationReport,
    generic_stratum,
    jump_set,
    lattice_points,
    precedes,
    stratify,
)

from conftest import SMALL, rational_vectors

H1 = catalog.heisenberg(1).algebra
F4 = catalog.filiform(4).algebra


def naive_jump_set(alg, xi):
    """Stacked-basis ranks of g(xi) + g_j, straight from the definition."""
    stab = list(stabilizer(alg, xi).basis)
    m = alg.dim
    dims = [rank(stab + [alg.basis_vector(i) for i in range(1, j + 1)]) for j in range(m + 1)]
    return IndexSet(tuple(j for j in range(1, m + 1) if dims[j] > dims[j - 1]))


def pivot_columns(alg, xi):
    _, piv = rref(b_matrix(alg, xi))
    return IndexSet(tuple(p + 1 for p in piv))


algebra_and_functional = st.sampled_from(SMALL).flatmap(
    lambda name: st.tuples(st.just(catalog.get(name).algebra), rational_vectors(catalog.get(name).algebra.dim))
)

index_sets = st.sets(st.integers(1, 7), max_size=7).map(lambda s: IndexSet(tuple(s)))


class TestJumpSet:
    def test_examples(self):
        assert jump_set(H1, (1, 0, 0)) == IndexSet((2, 3))
        assert jump_set(H1, (0, 1, 0)) == IndexSet()
        assert jump_set(F4, (1, 0, 0, 0)) == IndexSet((2, 4))
        assert jump_set(F4, (0, 1, 0, 0)) == IndexSet((3, 4))

    def test_rejects_non_adapted_basis(self):
        from coadjoint.lie import NilpotentAlgebra

        with pytest.raises(ValueError):
            jump_set(NilpotentAlgebra.from_brackets(3, {(1, 2): {3: 1}}), (0, 0, 1))

    @given(algebra_and_functional)
    def test_agrees_with_naive_definition(self, af):
        alg, xi = af
        assert jump_set(alg, xi) == naive_jump_set(alg, xi)

    @given(algebra_and_functional)
    def test_pivot_column_cross_check(self, af):
        alg, xi = af
        assert jump_set(alg, xi) == pivot_columns(alg, xi)

    @given(algebra_and_functional)
    def test_size_is_form_rank(self, af):
        alg, xi = af
        e = jump_set(alg, xi)
        assert len(e) == rank(b_matrix(alg, xi)) and len(e) % 2 == 0

    @given(algebra_and_functional, st.fractions().filter(lambda t: t != 0))
    def test_scaling_invariance(self, af, t):
        alg, xi = af
        assert jump_set(alg, tuple(t * v for v in xi)) == jump_set(alg, xi)

    @given(algebra_and_functional)
    def test_empty_iff_character(self, af):
        alg, xi = af
        assert (len(jump_set(alg, xi)) == 0) == is_character(alg, xi)

    @given(algebra_and_functional, st.data())
    def test_orbit_invariance(self, af, data):
        alg, xi = af
        x = data.draw(rational_vectors(alg.dim, 3))
        assert jump_set(alg, coadjoint_act(alg, x, xi)) == jump_set(alg, xi)


class TestOrder:
    def test_examples(self):
        assert precedes(IndexSet((2, 3)), IndexSet((3, 4)))
        assert precedes(IndexSet((2, 3)), IndexSet())
        assert not precedes(IndexSet((2, 3)), IndexSet((2, 3)))

    @given(index_sets, index_sets)
    def test_trichotomy(self, a, b):
        if a == b:
            assert not a < b and not b < a
        else:
            assert (a < b) != (b < a)

    @given(index_sets, index_sets, index_sets)
    def test_transitive(self, a, b, c):
        if a < b and b < c:
            assert a < c

    @given(index_sets)
    def test_empty_is_maximum(self, a):
        assert a == IndexSet() or a < IndexSet()

    def test_rendering(self):
        assert str(IndexSet((4, 2))) == "{2, 4}" and str(IndexSet()) == "∅"
        with pytest.raises(ValueError):
            IndexSet((0,))


class TestStratify:
    def test_heisenberg_height_one(self):
        rep = stratify(H1, 1)
        assert rep.exhaustive and rep.points == 27
        assert rep.index_sets == [IndexSet((2, 3)), IndexSet()]

    @pytest.mark.parametrize("m", [4, 5, 6])
    def test_filiform_count(self, m):
        assert len(stratify(catalog.filiform(m).algebra, 1).strata) == m - 1

    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_abelian(self, n):
        rep = stratify(catalog.abelian(n).algebra, 2)
        assert rep.index_sets == [IndexSet()]

    @pytest.mark.parametrize("name", SMALL)
    def test_witnesses_recheck_and_no_duplicates(self, name):
        alg = catalog.get(name).algebra
        rep = stratify(alg, 1)
        assert len(set(rep.index_sets)) == len(rep.strata)
        assert rep.index_sets == sorted(rep.index_sets)
        assert IndexSet() in rep.index_sets
        for s in rep.strata:
            assert 1 <= len(s.witnesses) <= 3
            assert all(jump_set(alg, w) == s.e for w in s.witnesses)

    def test_heights_are_monotone(self):
        small = set(stratify(F4, 1).index_sets)
        large = set(stratify(F4, 2).index_sets)
        assert small <= large

    def test_brute_force_oracle(self):
        # every lattice point, via the naive definition
        found = {naive_jump_set(F4, p) for p in itertools.product(range(-1, 2), repeat=4)}
        assert found == set(stratify(F4, 1).index_sets)

    def test_deterministic_and_sampled_mode(self):
        alg = catalog.ut(5).algebra
        a = stratify(alg, 1, 7, samples=300)
        b = stratify(alg, 1, 7, samples=300)
        assert not a.exhaustive and a == b and a.to_json() == b.to_json()
        pts, exhaustive = lattice_points(alg.dim, 1, 7, samples=300)
        assert not exhaustive and pts[0] == (0,) * alg.dim and len(pts) == 1 + 2 * alg.dim + 300

    def test_callback_sees_every_point(self):
        seen = []
        rep = stratify(H1, 1, on_point=lambda xi, e: seen.append(e))
        assert len(seen) == rep.points
        assert set(seen) == set(rep.index_sets)

    def test_workers_give_the_same_report(self):
        alg = catalog.filiform(6).algebra
        assert stratify(alg, 1, workers=2).to_json() == stratify(alg, 1).to_json()

    def test_json_roundtrip(self):
        rep = stratify(F4, 1)
        back = StratificationReport.from_json(rep.to_json())
        assert back.to_json() == rep.to_json()
        assert set(rep.to_json()) == {"strata", "height", "seed", "exhaustive"}

    def test_bad_height(self):
        with pytest.raises(ValueError):
            stratify(H1, 0)


class TestGenericStratum:
    def test_examples(self):
        assert generic_stratum(H1) == IndexSet((2, 3))
        assert generic_stratum(catalog.abelian(3).algebra) == IndexSet()
        assert len(generic_stratum(catalog.ut(4).algebra)) == 4

    @pytest.mark.parametrize("name", SMALL)
    def test_is_least_discovered_stratum(self, name):
        alg = catalog.get(name).algebra
        assert generic_stratum(alg) == min(stratify(alg, 1).index_sets)

    def test_exhausted_retries_raise(self):
        with pytest.raises(GenericSamplingError):
            generic_stratum(catalog.ut(4).algebra, batch=1, coord_range=1, retries=1)
