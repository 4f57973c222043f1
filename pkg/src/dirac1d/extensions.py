"""Admissible boundary pairs (C, D): construction, classification, equivalence.

A pair (C, D) of 2x2 complex matrices selects one self-adjoint realization
of the Dirac operator with a point interaction at the origin through the
boundary condition C*G1 f = D*G2 f.  Admissibility means CD* is hermitian
and CC* + DD* is invertible.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Union

import numpy as np

from .algebra import det2, inverse2, is_hermitian, is_unitary
from .errors import ClassificationAmbiguous, NotAdmissible, NotUnitary

# arithmetic tolerance (roundoff) vs class-boundary tolerance (rank decisions)
ARITH_TOL = 1e-12
CLASS_TOL = 1e-8


@dataclass(frozen=True)
class BoundaryPair:
    """An admissible (C, D) with the mass of the underlying Dirac operator."""

    C: np.ndarray
    D: np.ndarray
    mass: float = 1.0

    def __post_init__(self):
        object.__setattr__(self, "C", np.asarray(self.C, dtype=complex))
        object.__setattr__(self, "D", np.asarray(self.D, dtype=complex))
        if self.C.shape != (2, 2) or self.D.shape != (2, 2):
            raise ValueError("C and D must be 2x2")
        if not (np.all(np.isfinite(self.C)) and np.all(np.isfinite(self.D))):
            raise ValueError("C and D must have finite entries")
        if not self.mass > 0:
            raise ValueError("mass must be positive")

    def require_admissible(self, tol: float = CLASS_TOL):
        if not check_admissible(self.C, self.D, tol):
            raise NotAdmissible("pair fails CD* hermiticity or CC*+DD* invertibility")
        return self


@dataclass(frozen=True)
class InvertibleD:
    lambda_matrix: np.ndarray  # hermitian D^{-1} C

    tag = "invertible_d"


@dataclass(frozen=True)
class RankOneD:
    p: np.ndarray  # unit vector spanning ker(D)
    ell: float  # reduced real coupling constant
    trace_cd_star: float

    tag = "rank_one_d"


@dataclass(frozen=True)
class ZeroD:
    tag = "zero_d"


PairClass = Union[InvertibleD, RankOneD, ZeroD]


def check_admissible(C: np.ndarray, D: np.ndarray, tol: float = CLASS_TOL) -> bool:
    """True iff CD* is hermitian within tol and |det(CC*+DD*)| > tol."""
    C = np.asarray(C, dtype=complex)
    D = np.asarray(D, dtype=complex)
    cd = C @ D.conj().T
    gram = C @ C.conj().T + D @ D.conj().T
    return is_hermitian(cd, tol) and abs(det2(gram)) > tol


def from_unitary(U: np.ndarray, mass: float = 1.0, tol: float = CLASS_TOL) -> BoundaryPair:
    """One-to-one parametrization C = (1-U)/2, D = i(1+U)/2 from U in U(2)."""
    U = np.asarray(U, dtype=complex)
    if not is_unitary(U, tol):
        raise NotUnitary("input matrix is not unitary within tolerance")
    C = 0.5 * (np.eye(2) - U)
    D = 0.5j * (np.eye(2) + U)
    return BoundaryPair(C, D, mass)


def haar_unitary(rng: np.random.Generator) -> np.ndarray:
    """Haar-distributed U(2) sample: orthonormalized complex-Gaussian columns
    times a uniform global phase."""
    z = (rng.standard_normal((2, 2)) + 1j * rng.standard_normal((2, 2))) / np.sqrt(2)
    q1 = z[:, 0] / np.linalg.norm(z[:, 0])
    w = z[:, 1] - q1 * (q1.conj() @ z[:, 1])
    q2 = w / np.linalg.norm(w)
    phase = np.exp(1j * rng.uniform(0.0, 2.0 * np.pi))
    return phase * np.column_stack([q1, q2])


def _rng_for(seed) -> np.random.Generator:
    # counter-based generator so sweep items are replayable from (seed, index)
    return np.random.Generator(np.random.Philox(np.random.SeedSequence(seed)))


def random_admissible(seed, mass: float = 1.0) -> BoundaryPair:
    """Deterministic Haar-random admissible pair.

    seed may be an int or a sequence of ints (e.g. (sweep_seed, index)).
    """
    U = haar_unitary(_rng_for(seed))
    return from_unitary(U, mass)


def classify(pair: BoundaryPair, tol: float = CLASS_TOL) -> PairClass:
    """Sort an admissible pair into the invertible-D / rank-one-D / zero-D case.

    For rank-one D the reduced data is extracted directly: with p spanning
    ker(D), q the orthogonal unit vector and u = Dq, admissibility forces
    Cq = ell*u with ell real, and ell = <u, Cq>/<u, u>.
    """
    C, D = pair.C, pair.D
    scale = max(np.abs(C).max(), np.abs(D).max(), 1e-300)
    sv = np.linalg.svd(D, compute_uv=False)
    if sv[0] <= tol * scale:
        return ZeroD()
    if abs(det2(D)) > tol * scale * scale:
        lam = inverse2(D) @ C
        if not is_hermitian(lam, 1e-8 * max(np.abs(lam).max(), 1.0)):
            raise NotAdmissible("D^{-1}C is not hermitian; pair is not admissible")
        return InvertibleD(0.5 * (lam + lam.conj().T))
    if sv[1] <= tol * scale:
        _, _, vh = np.linalg.svd(D)
        p = vh[1].conj()  # right singular vector for the vanishing value
        # deterministic phase: make the largest component real positive
        j = int(np.argmax(np.abs(p)))
        p = p * (np.abs(p[j]) / p[j])
        q = np.array([p[1].conj(), -p[0].conj()])
        u = D @ q
        ell_c = (u.conj() @ (C @ q)) / (u.conj() @ u)
        if abs(ell_c.imag) > 1e-6 * max(abs(ell_c), 1.0):
            raise NotAdmissible("reduced coupling is not real; pair is not admissible")
        return RankOneD(p=p, ell=float(ell_c.real), trace_cd_star=float(np.trace(C @ D.conj().T).real))
    raise ClassificationAmbiguous(
        "det(D) and the smallest singular value are both borderline; pair sits near a class boundary"
    )


def equivalent(pair_a: BoundaryPair, pair_b: BoundaryPair, tol: float = 1e-10) -> bool:
    """Whether (C_a, D_a) = K (C_b, D_b) for some invertible K.

    Decided by comparing orthogonal projectors onto the row spaces of the
    2x4 blocks [C D]; this avoids special-casing singular D.
    """

    def row_projector(pair):
        M = np.hstack([pair.C, pair.D])  # 2x4, full row rank by admissibility
        G = M @ M.conj().T
        return M.conj().T @ np.linalg.solve(G, M)

    return bool(np.abs(row_projector(pair_a) - row_projector(pair_b)).max() <= tol)


# ---------------------------------------------------------------------------
# JSON wire format: a 2x2 complex matrix is [[[re,im],[re,im]],[[re,im],[re,im]]]


def matrix_to_json(M: np.ndarray) -> list:
    M = np.asarray(M, dtype=complex)
    return [[[float(M[i, j].real), float(M[i, j].imag)] for j in range(2)] for i in range(2)]


def matrix_from_json(obj) -> np.ndarray:
    if isinstance(obj, str):
        obj = json.loads(obj)
    arr = np.asarray(obj, dtype=float)
    if arr.shape != (2, 2, 2):
        raise ValueError("matrix JSON must be 2x2 of [re, im] pairs")
    return arr[..., 0] + 1j * arr[..., 1]
