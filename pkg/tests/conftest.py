import itertools
from pathlib import Path

import numpy as np
import pytest

from alglab import make_algebra

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"

FIXTURE_FILES = [
    "heisenberg_f5.json",
    "leibniz2_f3.json",
    "leibniz2_f7.json",
    "mat2x2_f2.json",
    "abelian2_f7_action.json",
]


def heisenberg(p=5):
    """[e,f] = z, [f,e] = -z on basis (e, f, z)."""
    T = np.zeros((3, 3, 3), dtype=np.int64)
    T[0, 1, 2] = 1
    T[1, 0, 2] = p - 1
    return make_algebra(p, 3, T, 1, 1)


def leibniz2(p=3):
    """[e1,e1] = e2, all other products zero."""
    T = np.zeros((2, 2, 2), dtype=np.int64)
    T[0, 0, 1] = 1
    return make_algebra(p, 2, T, 1, 1)


def mat2x2(p=2):
    """Full 2x2 matrix algebra with [x,y] = xy, basis (E11, E12, E21, E22)."""
    idx = {(1, 1): 0, (1, 2): 1, (2, 1): 2, (2, 2): 3}
    T = np.zeros((4, 4, 4), dtype=np.int64)
    for (a, b), (c, d) in itertools.product(idx, idx):
        if b == c:
            T[idx[(a, b)], idx[(c, d)], idx[(a, d)]] = 1
    return make_algebra(p, 4, T, 1, 0)


def abelian(p, dim):
    return make_algebra(p, dim, np.zeros((dim, dim, dim), dtype=np.int64), 1, 1)


def zero_algebra(p=2):
    return make_algebra(p, 0, np.zeros((0, 0, 0), dtype=np.int64), 1, 1)


def random_elements(rng, p, dim, count):
    return [np.asarray([rng.randrange(p) for _ in range(dim)], dtype=np.int64)
            for _ in range(count)]


@pytest.fixture
def heis5():
    return heisenberg(5)


@pytest.fixture
def lez3():
    return leibniz2(3)


@pytest.fixture
def mat2():
    return mat2x2(2)
