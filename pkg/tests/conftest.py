import numpy as np
import pytest

from dirac1d.extensions import BoundaryPair

I2 = np.eye(2)
Z2 = np.zeros((2, 2))


@pytest.fixture
def free_pair():
    # C = 1, D = 0: the unperturbed operator
    return BoundaryPair(I2, Z2)


@pytest.fixture
def neumann_like_pair():
    # C = 0, D = 1: S = -1 everywhere, no bound states
    return BoundaryPair(Z2, I2)


@pytest.fixture
def double_pair():
    # double eigenvalue at lambda = 0
    return BoundaryPair(np.diag([-0.5, 0.5]), I2)


@pytest.fixture
def rank_one_pair():
    # one eigenvalue at lambda = -3m/5
    return BoundaryPair(np.diag([-1.0, 1.0]), np.diag([1.0, 0.0]))
