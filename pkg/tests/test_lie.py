from fractions import Fraction

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from coadjoint import catalog
from coadjoint.lie import (
    NilpotentAlgebra,
    NotNilpotentError,
    ad_star,
    ascending_central_series,
    b_matrix,
    b_matrix_int,
    bracket,
    center,
    coadjoint_act,
    derived_subalgebra,
    is_adapted,
    is_character,
    jordan_holder_basis,
    jordan_holder_change,
    lower_central_series,
    rebase,
    stabilizer,
    validate,
)
from coadjoint.linalg import Subspace, nullspace, rank

from conftest import SMALL, rational_vectors

H1 = catalog.heisenberg(1).algebra
F4 = catalog.filiform(4).algebra


def X(alg, i):
    return alg.basis_vector(i)


def algebra_and_vectors(k=1, bound=5):
    return st.sampled_from(SMALL).flatmap(
        lambda name: st.tuples(
            st.just(catalog.get(name).algebra),
            *[rational_vectors(catalog.get(name).algebra.dim, bound) for _ in range(k)],
        )
    )


class TestValidate:
    def test_heisenberg_ok(self):
        assert validate(H1).ok

    def test_broken_antisymmetry(self):
        alg = NilpotentAlgebra.from_brackets(3, {(3, 2): {1: 1}, (2, 3): {1: 1}})
        report = validate(alg)
        assert ("antisymmetry", (2, 3, 1)) in [(v.kind, v.witness) for v in report.violations]

    def test_not_nilpotent(self):
        alg = NilpotentAlgebra.from_brackets(2, {(2, 1): {2: 1}})
        assert "nilpotency" in validate(alg).kinds()

    def test_jacobi_failure(self):
        # Jac(X5, X4, X2) = [X2, [X5, X4]] = [X2, X3] = -X1
        alg = NilpotentAlgebra.from_brackets(5, {(5, 4): {3: 1}, (3, 2): {1: 1}})
        assert validate(alg).kinds() == {"jacobi"}

    def test_non_adapted_order_is_flagged(self):
        alg = NilpotentAlgebra.from_brackets(3, {(1, 2): {3: 1}})
        assert validate(alg).kinds() == {"adaptedness"}

    @pytest.mark.parametrize("name", [e.label for e in catalog.default_entries()])
    def test_catalog_is_valid(self, name):
        assert validate(catalog.get(name).algebra).ok


class TestBracketsAndSeries:
    def test_heisenberg_relation(self):
        assert bracket(H1, X(H1, 3), X(H1, 2)) == X(H1, 1)

    def test_filiform_relation(self):
        assert bracket(F4, X(F4, 4), X(F4, 3)) == X(F4, 2)

    @given(algebra_and_vectors(1))
    def test_self_bracket_vanishes(self, av):
        alg, x = av
        assert not any(bracket(alg, x, x))

    @given(algebra_and_vectors(3, bound=3))
    def test_jacobi_on_random_elements(self, av):
        alg, x, y, z = av
        terms = (
            bracket(alg, x, bracket(alg, y, z)),
            bracket(alg, y, bracket(alg, z, x)),
            bracket(alg, z, bracket(alg, x, y)),
        )
        assert not any(sum(t) for t in zip(*terms))

    def test_derived_examples(self):
        assert derived_subalgebra(H1) == Subspace.coordinate([1], 3)
        for m in range(3, 9):
            alg = catalog.filiform(m).algebra
            assert derived_subalgebra(alg) == Subspace.coordinate(range(1, m - 1), m)
        assert derived_subalgebra(catalog.abelian(3).algebra).dim == 0

    def test_centers(self):
        for n in (1, 2, 3):
            assert center(catalog.heisenberg(n).algebra) == Subspace.coordinate([1], 2 * n + 1)
        assert center(catalog.abelian(3).algebra).dim == 3

    def test_filiform4_series(self):
        assert [s.dim for s in lower_central_series(F4)] == [4, 2, 1, 0]
        assert lower_central_series(F4)[1] == Subspace.coordinate([1, 2], 4)
        dims = [s.dim for s in ascending_central_series(F4)]
        assert dims[0] == 0 and dims[-1] == 4 and dims == sorted(set(dims))


class TestJordanHolder:
    def test_adapted_input_unchanged(self):
        assert jordan_holder_basis(H1) is H1
        ab = catalog.abelian(3).algebra
        assert jordan_holder_basis(ab) is ab

    def test_center_last_is_rebased(self):
        # basis (X, Y, Z) with [X, Y] = Z
        xyz = NilpotentAlgebra.from_brackets(3, {(1, 2): {3: 1}})
        adapted, basis = jordan_holder_change(xyz)
        assert validate(adapted).ok
        assert basis[0] == (0, 0, 1)

    def test_not_nilpotent_raises(self):
        with pytest.raises(NotNilpotentError):
            jordan_holder_basis(NilpotentAlgebra.from_brackets(2, {(2, 1): {2: 1}}))

    @given(st.sampled_from(SMALL), st.randoms(use_true_random=False))
    def test_shuffled_bases_are_repaired(self, name, rnd):
        alg = catalog.get(name).algebra
        perm = list(range(1, alg.dim + 1))
        rnd.shuffle(perm)
        shuffled = rebase(alg, [alg.basis_vector(i) for i in perm])
        fixed = jordan_holder_basis(shuffled)
        assert validate(fixed).ok and is_adapted(fixed)


class TestForms:
    def test_heisenberg_b_matrix(self):
        assert b_matrix(H1, (1, 0, 0)) == [[0, 0, 0], [0, 0, -1], [0, 1, 0]]
        assert not any(map(any, b_matrix(H1, (0, 0, 1))))
        assert not any(map(any, b_matrix(F4, (0, 0, 0, 0))))

    def test_stabilizer_examples(self):
        assert stabilizer(H1, (1, 0, 0)) == Subspace.coordinate([1], 3)
        assert stabilizer(F4, (0, 0, 0, 0)) == Subspace.full(4)
        assert stabilizer(F4, (1, 0, 0, 0)) == Subspace.coordinate([1, 3], 4)

    @given(algebra_and_vectors(1))
    def test_b_matrix_skew_even_rank(self, av):
        alg, xi = av
        b = b_matrix(alg, xi)
        m = alg.dim
        assert all(b[i][j] == -b[j][i] for i in range(m) for j in range(m))
        assert rank(b) % 2 == 0
        assert stabilizer(alg, xi).dim + rank(b) == m
        assert rank(b_matrix_int(alg, xi)) == rank(b)

    @given(algebra_and_vectors(1))
    def test_rank_matches_sympy(self, av):
        alg, xi = av
        b = b_matrix(alg, xi)
        sm = sympy.Matrix([[sympy.Rational(x.numerator, x.denominator) for x in r] for r in b])
        assert rank(b) == sm.rank()

    @given(algebra_and_vectors(1))
    def test_characters_have_full_stabilizer(self, av):
        alg, xi = av
        assert is_character(alg, xi) == (stabilizer(alg, xi).dim == alg.dim)


class TestCoadjointAction:
    def test_heisenberg_example(self):
        assert coadjoint_act(H1, X(H1, 2), (1, 0, 0)) == (1, 0, 1)

    @given(algebra_and_vectors(1))
    def test_zero_element_acts_trivially(self, av):
        alg, xi = av
        assert coadjoint_act(alg, (0,) * alg.dim, xi) == xi

    @given(algebra_and_vectors(2))
    def test_characters_are_fixed(self, av):
        alg, x, coeffs = av
        chars = nullspace([list(v) for v in derived_subalgebra(alg).basis], alg.dim)
        xi = tuple(sum((c * v[k] for c, v in zip(coeffs, chars)), Fraction(0)) for k in range(alg.dim))
        assert is_character(alg, xi)
        assert coadjoint_act(alg, x, xi) == xi

    @given(algebra_and_vectors(2, bound=3))
    def test_first_order_expansion(self, av):
        alg, x, xi = av
        t = Fraction(1, 1000)
        tx = tuple(t * v for v in x)
        moved = coadjoint_act(alg, tx, xi)
        linear = tuple(a + t * b for a, b in zip(xi, ad_star(alg, x, xi)))
        err = max(abs(a - b) for a, b in zip(moved, linear))
        scale = 1 + max(abs(v) for v in x + xi) ** (alg.dim + 1)
        assert err <= scale * t * t

    @given(algebra_and_vectors(3, bound=3))
    def test_action_composes_along_a_line(self, av):
        alg, x, _, xi = av
        s, u = Fraction(1, 3), Fraction(-2, 5)
        xs = tuple(s * v for v in x)
        xu = tuple(u * v for v in x)
        xsu = tuple((s + u) * v for v in x)
        assert coadjoint_act(alg, xs, coadjoint_act(alg, xu, xi)) == coadjoint_act(alg, xsu, xi)
