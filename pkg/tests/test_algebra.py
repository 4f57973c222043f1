import numpy as np
import pytest
from hypothesis import given, strategies as st

from dirac1d.algebra import (
    LaurentPoly,
    adjugate2,
    clear_ratio,
    det2,
    inverse2,
    is_hermitian,
    is_unitary,
    laurent_ratio_limit,
    mat2,
)
from dirac1d.errors import DegenerateLimit, Singular

finite = st.floats(-10, 10, allow_nan=False)


def cmat(vals):
    re, im = np.array(vals[:4]).reshape(2, 2), np.array(vals[4:]).reshape(2, 2)
    return re + 1j * im


@given(st.lists(finite, min_size=8, max_size=8))
def test_inverse_roundtrip(vals):
    M = cmat(vals)
    if abs(det2(M)) <= 1e-6:
        return
    assert np.allclose(inverse2(M) @ M, np.eye(2), atol=1e-8)
    assert np.allclose(M @ inverse2(M), np.eye(2), atol=1e-8)


def test_det_adjugate_identity():
    M = mat2(1 + 2j, 3, -1j, 0.5)
    assert np.allclose(M @ adjugate2(M), det2(M) * np.eye(2))


def test_singular_raises():
    with pytest.raises(Singular):
        inverse2(mat2(1, 2, 2, 4))


def test_hermitian_unitary_predicates():
    assert is_hermitian(mat2(1, 2 + 1j, 2 - 1j, 3), 1e-14)
    assert not is_hermitian(mat2(1, 2 + 1j, 2 + 1j, 3), 1e-10)
    th = 0.7
    U = np.array([[np.cos(th), -np.sin(th)], [np.sin(th), np.cos(th)]], dtype=complex)
    assert is_unitary(U, 1e-14)
    assert not is_unitary(2 * U, 1e-10)


def test_laurent_product_and_eval():
    p = LaurentPoly.monomial(2, 3.0) + LaurentPoly.monomial(-1, 1j)
    q = LaurentPoly.monomial(1, 2.0)
    r = p * q
    for s in (0.3, 1.0, 2.0):
        assert abs(r(s) - p(s) * q(s)) < 1e-12


def test_laurent_window_overflow():
    p = LaurentPoly.monomial(4, 1.0)
    with pytest.raises(ValueError):
        p * LaurentPoly.monomial(1, 1.0)


def test_clear_ratio_matches_direct_division():
    num = [[LaurentPoly.monomial(-2, 1.0) + LaurentPoly.constant(2.0) for _ in range(2)] for _ in range(2)]
    den = LaurentPoly.monomial(-2, 1.0) + LaurentPoly.monomial(2, 0.5)
    for s in (0.2, 0.7, 1.0):
        direct = np.full((2, 2), num[0][0](s) / den(s))
        assert np.allclose(laurent_ratio_limit(num, den, s), direct, atol=1e-12)


def test_clear_ratio_endpoint():
    # (1 + s^2)/(1 + s) -> 1 at s = 0 even when both carry an s^{-1} prefactor
    num = [[LaurentPoly.monomial(-1, 1.0) + LaurentPoly.monomial(1, 1.0) for _ in range(2)] for _ in range(2)]
    den = LaurentPoly.monomial(-1, 1.0) + LaurentPoly.constant(1.0)
    assert np.allclose(laurent_ratio_limit(num, den, 0.0), np.ones((2, 2)))


def test_clear_ratio_divergent_raises():
    num = [[LaurentPoly.monomial(-2, 1.0) for _ in range(2)] for _ in range(2)]
    den = LaurentPoly.constant(1.0)
    with pytest.raises(DegenerateLimit):
        clear_ratio(num, den)
