import random
from fractions import Fraction

import pytest

from exactmath import Matrix


def F(*args):
    return Fraction(*args)


def random_matrix(rng: random.Random, m: int, n: int, lo=-9, hi=9) -> Matrix:
    return Matrix([[Fraction(rng.randint(lo, hi)) for _ in range(n)]
                   for _ in range(m)])


def random_regular(rng: random.Random, n: int) -> Matrix:
    """A random square matrix with nonzero determinant (rejection sampling)."""
    from exactmath import det
    while True:
        a = random_matrix(rng, n, n)
        if det(a) != 0:
            return a


@pytest.fixture
def rng():
    return random.Random(20260823)
