import random

import pytest

from classprod.fields import GF, QQ
from classprod.matrix import Matrix, transvection


def random_matrix(field, n, rng, lo=-3, hi=3, invertible=True):
    """Uniform random matrix; resamples until invertible when asked."""
    while True:
        if field.kind == "Q":
            m = Matrix(field, [[rng.randint(lo, hi) for _ in range(n)]
                               for _ in range(n)])
        else:
            m = Matrix(field, [[rng.randrange(field.p) for _ in range(n)]
                               for _ in range(n)])
        if not invertible or not m.det().is_zero():
            return m


def random_noncentral(field, n, rng, lo=-3, hi=3):
    while True:
        m = random_matrix(field, n, rng, lo, hi)
        if not m.is_scalar():
            return m


def random_sl(field, n, rng, steps=12):
    """Random product of transvections; exact determinant 1."""
    m = Matrix.identity(field, n)
    slots = [(i, j) for i in range(1, n + 1) for j in range(1, n + 1) if i != j]
    for _ in range(steps):
        i, j = rng.choice(slots)
        if field.kind == "Q":
            a = rng.randint(-3, 3)
        else:
            a = rng.randrange(field.p)
        m = m * transvection(field, n, i, j, a)
    return m


def random_gl(field, n, rng):
    return random_matrix(field, n, rng, invertible=True)


@pytest.fixture
def rng():
    return random.Random(20240817)


@pytest.fixture(params=["Q", "F2", "F3", "F5", "F7"])
def any_field(request):
    return QQ if request.param == "Q" else GF(int(request.param[1:]))
