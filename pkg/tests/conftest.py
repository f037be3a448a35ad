import random

import pytest
from hypothesis import settings
from hypothesis import strategies as st

from fricke.arith import Coord
from fricke.oracles import random_poly

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


def polys(n=3, degree=3, terms=4, coord=Coord.TPRIME):
    """Hypothesis strategy: small random polynomials driven by a seed."""
    return st.integers(0, 2**32 - 1).map(
        lambda s: random_poly(random.Random(s), n, degree=degree, terms=terms, coord=coord))


def exponent_vectors(n_max=4, bound=4):
    return st.integers(1, n_max).flatmap(
        lambda n: st.lists(st.integers(-bound, bound), min_size=n, max_size=n).map(tuple))


@pytest.fixture
def rng():
    return random.Random(1234)
