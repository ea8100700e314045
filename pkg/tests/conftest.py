from __future__ import annotations

import pytest

from tonnetz.analysis import enumerate_generic
from tonnetz.core import length_vector


def torus_instances():
    """All generic reduced k=3 vectors with n <= 16, plus the k=4 example."""
    out = [L for n in range(7, 17) for L in enumerate_generic(n, 3)]
    out.append(length_vector(1, 2, 4, 8))
    return out


INSTANCES = torus_instances()


def ids(Ls):
    return [f"{L.n}-{'-'.join(map(str, L.lengths))}" for L in Ls]


@pytest.fixture
def classical():
    return length_vector(3, 4, 5)
