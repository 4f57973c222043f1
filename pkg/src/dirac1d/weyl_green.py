"""Closed-form spectral data of the free operator and its point perturbations.

Provides the momentum branch k(z), the Weyl function M and its boundary
values on both sides of the real axis, the defect-space vectors h1, h2,
and the free and perturbed Green kernels.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .algebra import det2, inverse2
from .errors import (
    AtThreshold,
    DiagonalPoint,
    InGap,
    NearEigenvalue,
    OnSpectrum,
    OriginEvaluation,
    PoleAtMinusM,
    Singular,
)
from .extensions import BoundaryPair

PLUS_I0 = "+i0"
MINUS_I0 = "-i0"


@dataclass(frozen=True)
class EnergyPoint:
    """A real energy approached from above or below the real axis."""

    lam: float
    side: str = PLUS_I0

    def __post_init__(self):
        if self.side not in (PLUS_I0, MINUS_I0):
            raise ValueError("side must be '+i0' or '-i0'")

    def regime(self, m: float) -> str:
        return "gap" if abs(self.lam) < m else "continuum"


@dataclass(frozen=True)
class GammaVectors:
    h1: np.ndarray
    h2: np.ndarray


def k_of_z(z: complex, m: float) -> complex:
    """sqrt(z^2 - m^2) on the branch with positive imaginary part."""
    z = complex(z)
    if z.imag == 0.0 and abs(z.real) >= m:
        raise OnSpectrum("z lies on the continuous spectrum; use k_boundary")
    k = np.sqrt(z * z - m * m + 0j)  # principal root; Re >= 0
    if k.imag <= 0:
        k = -k
    return complex(k)


def k_boundary(lam: float, side: str, m: float) -> complex:
    """Boundary values k(lambda +- i0) of the momentum branch."""
    if abs(lam) == m:
        raise AtThreshold("k has a branch point at |lambda| = m")
    # factored products avoid cancellation near the thresholds
    if abs(lam) < m:
        return 1j * np.sqrt((m - lam) * (m + lam))
    root = np.sqrt((abs(lam) - m) * (abs(lam) + m))
    sgn = 1.0 if lam > 0 else -1.0
    return complex(sgn * root if side == PLUS_I0 else -sgn * root)


def weyl_M(z, m: float) -> np.ndarray:
    """The Weyl function M(z) = (1/2) diag(ik/(m+z), i(m+z)/k).

    Accepts a complex z off the spectrum (real values inside the gap are
    allowed) or an EnergyPoint for boundary values lambda +- i0.
    """
    if isinstance(z, EnergyPoint):
        lam = z.lam
        if abs(lam) == m:
            raise AtThreshold("Weyl function boundary value at a threshold")
        if abs(lam + m) < 1e-14 * m:
            raise PoleAtMinusM("m + lambda vanishes")
        k = k_boundary(lam, z.side, m)
    else:
        z = complex(z)
        if abs(z + m) < 1e-14 * m:
            raise PoleAtMinusM("m + z vanishes")
        k = k_of_z(z, m)
        lam = z
    return 0.5 * np.array(
        [[1j * k / (m + lam), 0.0], [0.0, 1j * (m + lam) / k]], dtype=complex
    )


def B_matrix(lam: float, m: float) -> np.ndarray:
    """Positive diagonal square root satisfying i*B(lam)^2 = M(lam + i0)."""
    if abs(lam) <= m:
        raise InGap("B(lambda) is defined for |lambda| > m only")
    ratio = (lam - m) / (lam + m)  # positive on both branches
    r = ratio**0.25
    return np.array([[r / np.sqrt(2), 0.0], [0.0, 1.0 / (r * np.sqrt(2))]])


def gamma_vectors(z, m: float, x: float) -> GammaVectors:
    """Defect-space solutions h1_z(x), h2_z(x) of the adjoint equation.

    For real z inside the gap the +i0 boundary value of k is used, so the
    vectors decay exponentially on both half-lines.
    """
    if x == 0.0:
        raise OriginEvaluation("h-vectors are defined for x != 0")
    z = complex(z)
    if z.imag == 0.0 and abs(z.real) < m:
        k = k_boundary(z.real, PLUS_I0, m)
    else:
        k = k_of_z(z, m)
    sx = 1.0 if x > 0 else -1.0
    phase = np.exp(1j * k * abs(x)) / 2.0
    h1 = phase * np.array([sx, 1j * k / (m + z)], dtype=complex)
    h2 = phase * np.array([1j * (m + z) / k, -sx], dtype=complex)
    return GammaVectors(h1=h1, h2=h2)


def green_free(x: float, y: float, z: complex, m: float) -> np.ndarray:
    """Integral kernel of the free resolvent at spectral parameter z."""
    if x == y:
        raise DiagonalPoint("free Green kernel is defined a.e., not at x = y")
    z = complex(z)
    k = k_of_z(z, m)
    s = 1.0 if x > y else -1.0
    return (np.exp(1j * k * abs(x - y)) / 2.0) * np.array(
        [[1j * (m + z) / k, s], [-s, 1j * k / (m + z)]], dtype=complex
    )


def coupling_matrix(pair: BoundaryPair, z) -> np.ndarray:
    """(D M(z) - C)^{-1} D, the finite-dimensional factor of the resolvent
    difference between the perturbed and free operators."""
    M = weyl_M(z, pair.mass)
    try:
        inv = inverse2(pair.D @ M - pair.C)
    except Singular as exc:
        raise NearEigenvalue("D M(z) - C is numerically singular") from exc
    return inv @ pair.D


def green_perturbed(x: float, y: float, z: complex, pair: BoundaryPair) -> np.ndarray:
    """Kernel of the perturbed resolvent via the rank-two Krein correction."""
    if x == 0.0 or y == 0.0:
        raise OriginEvaluation("kernel arguments must avoid the interaction point")
    if x == y:
        raise DiagonalPoint("perturbed Green kernel is defined a.e., not at x = y")
    z = complex(z)
    A = coupling_matrix(pair, z)
    g = gamma_vectors(z, pair.mass, x)
    gbar = gamma_vectors(np.conj(z), pair.mass, y)
    Hx = np.column_stack([g.h1, g.h2])
    Hy = np.column_stack([gbar.h1, gbar.h2])
    return green_free(x, y, z, pair.mass) - Hx @ A @ Hy.conj().T
