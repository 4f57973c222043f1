import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from dirac1d.extensions import BoundaryPair, random_admissible
from dirac1d.scattering import T0Evaluator
from dirac1d.spectrum import eigenvalues_closed_form
from dirac1d.topology import (
    R_matrix,
    gamma_edge,
    lambda_of_edge_param,
    levinson_verdict,
    winding,
)

seeds = st.integers(0, 10**6)
I2 = np.eye(2)


def test_r_matrix_limits_and_unitarity_of_gamma():
    assert np.allclose(R_matrix(np.inf), I2)
    assert np.allclose(R_matrix(-np.inf), np.zeros((2, 2)))
    # |R_jj| <= 1 and R is diagonal
    for y in (-2.0, 0.0, 0.3, 100.0):
        R = R_matrix(y)
        assert R[0, 1] == 0 and R[1, 0] == 0
        assert np.all(np.abs(np.diag(R)) <= 1.0 + 1e-14)


def test_edge_map_values_unitary():
    pair = random_admissible(4)
    for edge, params in (
        ("B1", (-np.inf, -0.5, 0.0, 2.0, np.inf)),
        ("B2", (-np.inf, -1.0, 0.0, 1.0, np.inf)),
        ("B3", (-np.inf, 0.7, np.inf)),
        ("B4", (0.0, 1.0)),
    ):
        for p in params:
            g = gamma_edge(pair, edge, p)
            assert np.abs(g @ g.conj().T - I2).max() < 1e-10
    with pytest.raises(ValueError):
        gamma_edge(pair, "B5", 0.0)


def test_corner_consistency():
    pair = random_admissible(9)
    # B1 at y = +inf meets B2 at the +m threshold, etc.
    assert np.abs(gamma_edge(pair, "B1", np.inf) - gamma_edge(pair, "B2", np.inf)).max() < 1e-10
    assert np.abs(gamma_edge(pair, "B3", np.inf) - gamma_edge(pair, "B2", -np.inf)).max() < 1e-10
    assert np.abs(gamma_edge(pair, "B1", -np.inf) - gamma_edge(pair, "B4", 0.0)).max() < 1e-10
    assert np.abs(gamma_edge(pair, "B3", -np.inf) - gamma_edge(pair, "B4", 1.0)).max() < 1e-10


def test_lambda_edge_coordinate():
    m = 1.0
    assert lambda_of_edge_param(50.0, m) == pytest.approx(1.0, rel=1e-12)
    assert lambda_of_edge_param(-50.0, m) == pytest.approx(-1.0, rel=1e-12)
    assert abs(lambda_of_edge_param(1e-8, m)) > 1e7


def test_canonical_windings(free_pair, neumann_like_pair, double_pair, rank_one_pair):
    assert winding(free_pair).winding == 0
    assert winding(neumann_like_pair).winding == 0
    assert winding(double_pair).winding == -2
    assert winding(rank_one_pair).winding == -1


def test_loop_closure_is_tight(double_pair):
    loop = winding(double_pair)
    assert loop.closure_residual < 1e-6
    assert len(loop.samples) > 100


def test_verdict_structure(rank_one_pair):
    verdict = levinson_verdict(rank_one_pair)
    assert verdict.winding == -1
    assert verdict.eigen_count == 1
    assert verdict.holds


@given(seeds)
@settings(max_examples=40, deadline=None)
def test_levinson_identity_random_pairs(seed):
    pair = random_admissible(seed)
    verdict = levinson_verdict(pair)
    assert verdict.winding == -verdict.eigen_count


def test_winding_invariant_under_equivalence():
    pair = random_admissible(17)
    K = np.array([[1.0, 2j], [0.0, 3.0]])
    scaled = BoundaryPair(K @ pair.C, K @ pair.D)
    assert winding(pair).winding == winding(scaled).winding
