import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from dirac1d.errors import OriginEvaluation
from dirac1d.extensions import BoundaryPair, classify, random_admissible
from dirac1d.spectrum import (
    _positive_roots,
    eigenfunction,
    eigenvalue_oracle_scan,
    eigenvalues_closed_form,
    gap_weyl,
    predicted_count,
    smallest_singular_value,
)

seeds = st.integers(0, 10**6)


def boundary_traces(value, delta=1e-6):
    """(G1 f, G2 f) from one-sided samples of a two-component function."""
    fp = value(delta)
    fm = value(-delta)
    g1 = np.array([fp[0] - fm[0], fm[1] - fp[1]])
    g2 = 0.5 * np.array([fm[1] + fp[1], fm[0] + fp[0]])
    return g1, g2


def test_positive_roots_basic():
    assert _positive_roots(1.0, -3.0, 2.0, 1.0) == [1.0, 2.0]
    assert _positive_roots(1.0, 3.0, 2.0, 1.0) == []
    assert _positive_roots(0.0, 2.0, -1.0, 1.0) == [0.5]
    # tangency: coincident roots merge, multiplicity decided elsewhere
    assert _positive_roots(1.0, -2.0, 1.0, 1.0) == [1.0]
    # roundoff guard: barely negative discriminant at a tangency
    assert _positive_roots(1.0, -2.0, 1.0 + 1e-15, 1.0) == [pytest.approx(1.0)]


def test_canonical_spectra(free_pair, neumann_like_pair, double_pair, rank_one_pair):
    assert eigenvalues_closed_form(free_pair).total_count == 0
    assert eigenvalues_closed_form(neumann_like_pair).total_count == 0
    rep = eigenvalues_closed_form(double_pair)
    assert rep.total_count == 2
    assert len(rep.eigenvalues) == 1
    assert rep.eigenvalues[0].lam == pytest.approx(0.0, abs=1e-8)
    assert rep.eigenvalues[0].multiplicity == 2
    rep = eigenvalues_closed_form(rank_one_pair)
    assert rep.total_count == 1
    assert rep.eigenvalues[0].lam == pytest.approx(-0.6, abs=1e-8)


def test_spectrum_scales_with_mass(rank_one_pair):
    pair = BoundaryPair(rank_one_pair.C, rank_one_pair.D, mass=2.5)
    rep = eigenvalues_closed_form(pair)
    assert rep.eigenvalues[0].lam == pytest.approx(-0.6 * 2.5, abs=1e-8)


def test_eigenvalue_makes_boundary_matrix_singular(double_pair, rank_one_pair):
    for pair in (double_pair, rank_one_pair):
        for e in eigenvalues_closed_form(pair).eigenvalues:
            assert smallest_singular_value(pair, e.lam) < 1e-10


@given(seeds)
@settings(max_examples=60, deadline=None)
def test_count_matches_class_prediction(seed):
    pair = random_admissible(seed)
    rep = eigenvalues_closed_form(pair)
    assert rep.total_count == predicted_count(classify(pair))


@given(seeds)
@settings(max_examples=25, deadline=None)
def test_oracle_scan_agrees(seed):
    pair = random_admissible(seed)
    rep = eigenvalues_closed_form(pair)
    scan = eigenvalue_oracle_scan(pair)
    assert len(scan) == len(rep.eigenvalues)
    for e, lam in zip(rep.eigenvalues, scan):
        assert abs(e.lam - lam) < 1e-8


def test_gap_weyl_values():
    assert np.allclose(gap_weyl(2.0), 0.5 * np.diag([-2.0, 0.5]))


def _dirac_apply(f, x, m, h=1e-5):
    J = np.array([[0, -1], [1, 0]], dtype=complex)
    sigma3 = np.array([[1, 0], [0, -1]], dtype=complex)
    df = (f(x + h) - f(x - h)) / (2 * h)
    return J @ df + m * sigma3 @ f(x)


def test_eigenfunction_properties(rank_one_pair):
    rep = eigenvalues_closed_form(rank_one_pair)
    e = rep.eigenvalues[0]
    f = lambda x: eigenfunction(rank_one_pair, e, 0, x)
    # solves the equation away from the interaction point
    for x in (0.4, -0.9, 2.0):
        res = _dirac_apply(f, x, rank_one_pair.mass) - e.lam * f(x)
        assert np.abs(res).max() < 1e-6
    # satisfies the (C, D) boundary condition
    g1, g2 = boundary_traces(f)
    assert np.abs(rank_one_pair.C @ g1 - rank_one_pair.D @ g2).max() < 1e-8
    with pytest.raises(OriginEvaluation):
        f(0.0)
    with pytest.raises(IndexError):
        eigenfunction(rank_one_pair, e, 1, 0.5)


def test_double_eigenfunctions_boundary_condition(double_pair):
    rep = eigenvalues_closed_form(double_pair)
    e = rep.eigenvalues[0]
    assert e.multiplicity == 2
    for idx in range(2):
        f = lambda x: eigenfunction(double_pair, e, idx, x)
        g1, g2 = boundary_traces(f)
        assert np.abs(double_pair.C @ g1 - double_pair.D @ g2).max() < 1e-8
