"""Bound states of the perturbed operator inside the gap (-m, m).

The eigenvalue condition det(D M(lambda+i0) - C) = 0 is linearized by the
substitution t = sqrt((m - lambda)/(m + lambda)), t in (0, inf), giving a
real quadratic per pair class.  An independent singular-value scan of the
same matrix provides the verification oracle.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from scipy.integrate import quad

from .errors import DegenerateQuadratic, OriginEvaluation
from .extensions import BoundaryPair, InvertibleD, PairClass, RankOneD, ZeroD, classify
from .weyl_green import gamma_vectors

KERNEL_SV_TOL = 1e-10  # singular values below this count as kernel directions
LAMBDA_MARGIN = 1e-12  # roots mapping within this of +-m are rejected


@dataclass(frozen=True)
class Eigenvalue:
    lam: float
    multiplicity: int
    t_root: float
    kernel_basis: list = field(default_factory=list)


@dataclass(frozen=True)
class SpectralReport:
    eigenvalues: list
    total_count: int
    pair_class: PairClass


def gap_weyl(t: float) -> np.ndarray:
    """M(lambda + i0) inside the gap expressed in the t variable."""
    return 0.5 * np.array([[-t, 0.0], [0.0, 1.0 / t]], dtype=complex)


def _positive_roots(a: float, b: float, c: float, scale: float):
    """Positive real roots of a t^2 + b t + c with real coefficients."""
    tol = 1e-14 * max(scale, 1.0)
    if abs(a) <= tol:
        if abs(b) <= tol:
            if abs(c) <= tol:
                raise DegenerateQuadratic("all coefficients vanish")
            return []
        t = -c / b
        return [t] if t > 0 else []
    disc = b * b - 4.0 * a * c
    if disc < 0:
        # roundoff guard at a tangency: treat a barely negative discriminant
        # as a double root; the kernel dimension fixes the multiplicity
        if disc > -1e-12 * max(b * b, abs(4.0 * a * c), 1e-300):
            t = -b / (2.0 * a)
            return [t] if t > 0 else []
        return []
    sq = np.sqrt(disc)
    # stable quadratic formula
    q = -0.5 * (b + np.copysign(sq, b) if b != 0 else -sq)
    roots = []
    if q != 0:
        roots = [q / a, c / q]
    else:
        roots = [0.0, 0.0] if disc == 0 else [sq / a, -sq / a]
    roots = sorted(r for r in roots if r > 0)
    # tangency: merge numerically coincident roots, the kernel dimension
    # decides the multiplicity
    merged = []
    for r in roots:
        if merged and abs(r - merged[-1]) <= 1e-9 * (1.0 + abs(r)):
            continue
        merged.append(r)
    return merged


def _kernel_at(pair: BoundaryPair, t: float):
    W = pair.D @ gap_weyl(t) - pair.C
    u, sv, vh = np.linalg.svd(W)
    scale = max(np.abs(pair.C).max(), np.abs(pair.D).max(), 1.0)
    below = sv <= KERNEL_SV_TOL * scale
    if not below.any():
        below = sv <= sv.min() * (1.0 + 1e-12)  # root was found, keep the closest direction
    basis = [vh[i].conj() for i in range(2) if below[i]]
    return basis


def eigenvalues_closed_form(pair: BoundaryPair) -> SpectralReport:
    """All gap eigenvalues with multiplicities, from the per-class quadratic."""
    m = pair.mass
    cls = classify(pair)
    scale = max(np.abs(pair.C).max(), np.abs(pair.D).max())
    if isinstance(cls, ZeroD):
        roots = []
    elif isinstance(cls, InvertibleD):
        L = cls.lambda_matrix
        l11, l22 = L[0, 0].real, L[1, 1].real
        det_l = np.linalg.det(L).real
        roots = _positive_roots(0.5 * l22, det_l - 0.25, -0.5 * l11, scale=max(abs(l11), abs(l22), abs(det_l)))
    else:  # RankOneD
        p1, p2 = cls.p
        roots = _positive_roots(abs(p2) ** 2, 2.0 * cls.ell, -abs(p1) ** 2, scale=max(1.0, abs(cls.ell)))
    eigs = []
    for t in roots:
        lam = m * (1.0 - t * t) / (1.0 + t * t)
        if not (-m + LAMBDA_MARGIN < lam < m - LAMBDA_MARGIN):
            continue
        basis = _kernel_at(pair, t)
        eigs.append(Eigenvalue(lam=float(lam), multiplicity=len(basis), t_root=float(t), kernel_basis=basis))
    eigs.sort(key=lambda e: e.lam)
    return SpectralReport(
        eigenvalues=eigs,
        total_count=sum(e.multiplicity for e in eigs),
        pair_class=cls,
    )


def predicted_count(cls: PairClass) -> int:
    """Eigenvalue count read off the classification data alone (no roots)."""
    if isinstance(cls, ZeroD):
        return 0
    if isinstance(cls, InvertibleD):
        l11 = cls.lambda_matrix[0, 0].real
        l22 = cls.lambda_matrix[1, 1].real
        if l11 < 0 and l22 > 0:
            return 2
        if l11 >= 0 and l22 <= 0:
            return 0
        return 1
    p1, p2 = cls.p
    if abs(p1) > 0 and abs(p2) > 0:
        return 1
    if abs(p2) == 0 and cls.trace_cd_star > 0:
        return 1
    if abs(p1) == 0 and cls.trace_cd_star < 0:
        return 1
    return 0


def smallest_singular_value(pair: BoundaryPair, lam: float) -> float:
    t = np.sqrt((pair.mass - lam) / (pair.mass + lam))
    W = pair.D @ gap_weyl(t) - pair.C
    return float(np.linalg.svd(W, compute_uv=False)[-1])


def _golden_minimize(f, a: float, b: float, tol: float = 1e-13):
    """Golden-section minimization on [a, b]."""
    invphi = (np.sqrt(5.0) - 1.0) / 2.0
    c = b - invphi * (b - a)
    d = a + invphi * (b - a)
    fc, fd = f(c), f(d)
    while (b - a) > tol * (1.0 + abs(a) + abs(b)):
        if fc < fd:
            b, d, fd = d, c, fc
            c = b - invphi * (b - a)
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + invphi * (b - a)
            fd = f(d)
    x = 0.5 * (a + b)
    return x, f(x)


def _sv_gap_measure(pair: BoundaryPair, t: float) -> float:
    """Smallest singular value of D M(lambda+i0) - C in the t variable,
    normalized by the size of the assembled terms.  Dividing by the largest
    singular value instead would miss double kernels, where both singular
    values vanish together."""
    W = pair.D @ gap_weyl(t) - pair.C
    scale = max(
        np.abs(pair.C).max(),
        0.5 * np.abs(pair.D).max() * max(t, 1.0 / t),
        1e-300,
    )
    sv = np.linalg.svd(W, compute_uv=False)
    return float(sv[-1] / scale)


def eigenvalue_oracle_scan(pair: BoundaryPair, grid_points: int = 2001) -> list:
    """Independent eigenvalue locator: scan the smallest relative singular
    value of D M(lambda+i0) - C over the gap and refine grid minima by golden
    section.  The scan runs in v = ln t, so eigenvalues crowding the
    thresholds |lambda| -> m are resolved as well as those near lambda = 0."""
    if grid_points < 1000:
        raise ValueError("scan needs at least 1000 grid points")
    m = pair.mass
    V = 16.0  # t in [e^-16, e^16]; covers all gap energies beyond 1e-12 of +-m
    grid = np.linspace(-V, V, grid_points)
    vals = np.array([_sv_gap_measure(pair, float(np.exp(v))) for v in grid])
    hits = []
    for i in range(1, grid_points - 1):
        if vals[i] <= vals[i - 1] and vals[i] <= vals[i + 1]:
            v, fv = _golden_minimize(
                lambda v: _sv_gap_measure(pair, float(np.exp(v))), grid[i - 1], grid[i + 1]
            )
            if fv < KERNEL_SV_TOL:
                t = np.exp(v)
                hits.append(m * (1.0 - t * t) / (1.0 + t * t))
    hits.sort()
    # deduplicate refinements converging to the same minimum
    out = []
    for x in hits:
        if out and abs(x - out[-1]) < 1e-8 * m:
            continue
        out.append(float(x))
    return out


def eigenfunction(pair: BoundaryPair, eig: Eigenvalue, kernel_index: int, x: float) -> np.ndarray:
    """L2-normalized eigenfunction sample built from the defect vectors."""
    if x == 0.0:
        raise OriginEvaluation("eigenfunctions are evaluated away from the origin")
    if kernel_index >= eig.multiplicity:
        raise IndexError("kernel_index exceeds the eigenvalue multiplicity")
    xi = eig.kernel_basis[kernel_index]
    m = pair.mass

    def value(pt: float) -> np.ndarray:
        g = gamma_vectors(eig.lam, m, pt)
        return xi[0] * g.h1 + xi[1] * g.h2

    kappa = np.sqrt(m * m - eig.lam * eig.lam)
    cutoff = 40.0 / kappa
    dens = lambda pt: float(np.sum(np.abs(value(pt)) ** 2))
    norm_sq = quad(dens, -cutoff, -1e-12)[0] + quad(dens, 1e-12, cutoff)[0]
    return value(x) / np.sqrt(norm_sq)
