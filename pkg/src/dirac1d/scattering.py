"""On-shell scattering data: T_eps, its boundary limit T0, N, S, free fibers.

T0(lambda) = -2i B (D M(lambda+i0) - C)^{-1} D B is evaluated through exact
Laurent-polynomial cancellation in the compactified branch parameter
s in [0, 1] (s = 0 at the thresholds +-m, s = 1 at +-infinity), so the
threshold and infinity limits come out of the same closed form instead of
an extrapolation.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .algebra import LaurentPoly, clear_ratio, inverse2
from .errors import InGap, NearSingular, Singular
from .extensions import BoundaryPair, RankOneD, classify
from .weyl_green import PLUS_I0, B_matrix, EnergyPoint, weyl_M

SQRT2 = np.sqrt(2.0)


@dataclass(frozen=True)
class ContinuumPoint:
    """A point of the closed extended continuum, encoded as (branch, s).

    branch is +1 for [m, +inf], -1 for [-inf, -m]; s = ((|lam|-m)/(|lam|+m))**(1/4)
    runs from 0 at the threshold to 1 at infinity.
    """

    branch: int
    s: float

    def __post_init__(self):
        if self.branch not in (+1, -1):
            raise ValueError("branch must be +1 or -1")
        if not 0.0 <= self.s <= 1.0:
            raise ValueError("s must lie in [0, 1]")

    @classmethod
    def from_energy(cls, lam: float, m: float) -> "ContinuumPoint":
        if abs(lam) < m:
            raise InGap("energy lies in the spectral gap")
        s = ((abs(lam) - m) / (abs(lam) + m)) ** 0.25
        return cls(branch=+1 if lam > 0 else -1, s=float(s))

    @classmethod
    def threshold(cls, branch: int) -> "ContinuumPoint":
        return cls(branch=branch, s=0.0)

    @classmethod
    def infinity(cls, branch: int = +1) -> "ContinuumPoint":
        return cls(branch=branch, s=1.0)

    def energy(self, m: float) -> float:
        """The energy this point represents; +-inf at s = 1."""
        s4 = self.s**4
        if s4 >= 1.0:
            return self.branch * np.inf
        return self.branch * m * (1.0 + s4) / (1.0 - s4)


def as_point(point, m: float) -> ContinuumPoint:
    if isinstance(point, ContinuumPoint):
        return point
    return ContinuumPoint.from_energy(float(point), m)


class T0Evaluator:
    """Per-pair closed form of T0 on both branches.

    The numerator matrix -2i B adj(DM - C) D B and the denominator
    det(DM - C) are assembled once per branch as Laurent polynomials in s
    (M = (i/2) diag(s^2, s^-2) on the positive branch, slots swapped on the
    negative one; B = (1/sqrt 2) diag(s, 1/s), likewise swapped), cleared of
    the common negative power of s, and then evaluated pointwise.
    """

    def __init__(self, pair: BoundaryPair):
        self.pair = pair
        self._branches = {
            +1: self._assemble(+1),
            -1: self._assemble(-1),
        }

    def _assemble(self, branch: int):
        C, D = self.pair.C, self.pair.D
        if branch == +1:
            m_diag = [LaurentPoly.monomial(2, 0.5j), LaurentPoly.monomial(-2, 0.5j)]
            b_diag = [LaurentPoly.monomial(1, 1 / SQRT2), LaurentPoly.monomial(-1, 1 / SQRT2)]
        else:
            m_diag = [LaurentPoly.monomial(-2, 0.5j), LaurentPoly.monomial(2, 0.5j)]
            b_diag = [LaurentPoly.monomial(-1, 1 / SQRT2), LaurentPoly.monomial(1, 1 / SQRT2)]

        # A = D M - C, entrywise Laurent (M diagonal)
        A = [[D[j, k] * m_diag[k] - LaurentPoly.constant(C[j, k]) for k in range(2)] for j in range(2)]
        det = A[0][0] * A[1][1] - A[0][1] * A[1][0]
        adj = [[A[1][1], -A[0][1]], [-A[1][0], A[0][0]]]
        # X = adj(A) @ D
        X = [[adj[j][0] * D[0, k] + adj[j][1] * D[1, k] for k in range(2)] for j in range(2)]
        num = [[(-2j) * (b_diag[j] * X[j][k] * b_diag[k]) for k in range(2)] for j in range(2)]
        return clear_ratio(num, det)

    def at(self, branch: int, s: float) -> np.ndarray:
        num_c, den_c = self._branches[branch]
        powers = float(s) ** np.arange(num_c.shape[-1], dtype=float)
        if s == 0.0:
            return num_c[:, :, 0] / den_c[0]
        return (num_c @ powers) / (den_c @ powers)

    def at_many(self, branch: int, s: np.ndarray) -> np.ndarray:
        """Vectorized evaluation; returns shape (len(s), 2, 2)."""
        num_c, den_c = self._branches[branch]
        s = np.asarray(s, dtype=float)
        powers = s[:, None] ** np.arange(num_c.shape[-1], dtype=float)[None, :]  # (n, K)
        num = np.einsum("jkc,nc->njk", num_c, powers)
        den = powers @ den_c
        return num / den[:, None, None]

    def at_point(self, point: ContinuumPoint) -> np.ndarray:
        return self.at(point.branch, point.s)


def T0(point, pair: BoundaryPair) -> np.ndarray:
    """Boundary limit T0 at an interior energy, a threshold, or infinity.

    point is either a real energy with |lambda| > m or a ContinuumPoint.
    """
    pt = as_point(point, pair.mass)
    return T0Evaluator(pair).at_point(pt)


def T_eps(lam: float, eps: float, pair: BoundaryPair) -> np.ndarray:
    """Regularized scattering matrix piece at lambda + i*eps, eps > 0."""
    m = pair.mass
    if abs(lam) <= m:
        raise InGap("T_eps requires |lambda| > m")
    if not eps > 0:
        raise ValueError("eps must be positive")
    B = B_matrix(lam, m)
    M = weyl_M(lam + 1j * eps, m)
    try:
        inv = inverse2(pair.D @ M - pair.C)
    except Singular as exc:
        raise NearSingular(
            "D M(lambda + i eps) - C singular for an admissible pair; corrupted input"
        ) from exc
    return -2j * B @ inv @ pair.D @ B


def N_matrix(point) -> np.ndarray:
    """The branch-dependent constant unitary relating T0 to the S-matrix.

    Accepts a real energy (|lambda| > m is not checked against a mass here:
    only the sign of the branch matters) or a ContinuumPoint.
    """
    branch = point.branch if isinstance(point, ContinuumPoint) else (+1 if point > 0 else -1)
    if branch < 0:
        return np.array([[1.0, 1.0], [-1j, 1j]], dtype=complex) / SQRT2
    return np.array([[-1j, 1j], [1.0, 1.0]], dtype=complex) / SQRT2


def S_matrix(point, pair: BoundaryPair) -> np.ndarray:
    """Scattering matrix S = 1 + N* T0 N at an extended-continuum point."""
    pt = as_point(point, pair.mass)
    N = N_matrix(pt)
    return np.eye(2) + N.conj().T @ T0(pt, pair) @ N


def t0_rank_one(lam: float, pair: BoundaryPair) -> np.ndarray:
    """Scalar-reduction route to T0 for rank-one-D pairs.

    Uses (DM - C)^{-1} D = q (m_w - ell)^{-1} q* with q spanning ker(D)-perp,
    m_w = <q, M(lambda+i0) q> and ell the reduced coupling; valid for
    interior energies |lambda| > m.
    """
    cls = classify(pair)
    if not isinstance(cls, RankOneD):
        raise ValueError("scalar reduction applies to rank-one-D pairs only")
    m = pair.mass
    p = cls.p
    q = np.array([p[1].conj(), -p[0].conj()])
    B = B_matrix(lam, m)
    M = weyl_M(EnergyPoint(lam, PLUS_I0), m)
    m_w = q.conj() @ M @ q
    return -2j * np.outer(B @ q, (q.conj() @ B)) / (m_w - cls.ell)


@dataclass(frozen=True)
class FreeFiber:
    """Eigendata of the 2x2 momentum-space symbol of the free operator."""

    p: float
    energy: float
    xi_plus: np.ndarray
    xi_minus: np.ndarray


def free_fiber(p: float, m: float) -> FreeFiber:
    """Normalized eigenvectors of h(p) = [[m, -ip], [ip, -m]]."""
    e = np.sqrt(p * p + m * m)
    norm = np.sqrt(2.0 * (p * p + m * m + m * e))
    xi_p = np.array([m + e, 1j * p], dtype=complex) / norm
    xi_m = np.array([1j * p, m + e], dtype=complex) / norm
    return FreeFiber(p=float(p), energy=float(e), xi_plus=xi_p, xi_minus=xi_m)


def symbol_h(p: float, m: float) -> np.ndarray:
    return np.array([[m, -1j * p], [1j * p, -m]], dtype=complex)
