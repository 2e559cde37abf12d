from fractions import Fraction

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from coadjoint import catalog

settings.register_profile(
    "repo",
    derandomize=True,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("repo")

# small but structurally varied algebras used by the property tests
SMALL = [
    "heisenberg:1",
    "heisenberg:2",
    "filiform:4",
    "filiform:5",
    "ut:3",
    "ut:4",
    "g0_st:1,1",
    "g_st:1/2,-3",
    "abelian:2",
]


@pytest.fixture(scope="session")
def small_algebras():
    return {name: catalog.get(name).algebra for name in SMALL}


def rationals(bound: int = 5, den: int = 4):
    return st.builds(
        Fraction, st.integers(-bound * den, bound * den), st.integers(1, den)
    )


def rational_vectors(m: int, bound: int = 5, den: int = 4):
    return st.lists(rationals(bound, den), min_size=m, max_size=m).map(tuple)


def integer_vectors(m: int, bound: int = 4):
    return st.lists(st.integers(-bound, bound), min_size=m, max_size=m).map(tuple)
