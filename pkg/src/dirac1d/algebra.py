"""2x2 complex matrix helpers and Laurent-polynomial arithmetic.

All matrices are plain (2, 2) complex numpy arrays.  Inversion uses the
adjugate/determinant closed form, never elimination.  Laurent polynomials
live on the fixed degree window [-4, 4]; that window is closed under the
products formed elsewhere in the package (diagonal factors contribute
degrees +-1, Weyl-function entries +-2).
"""
from __future__ import annotations

import numpy as np

from .errors import DegenerateLimit, Singular

WINDOW = 4  # tracked degrees are -WINDOW..WINDOW

# relative threshold below which a Laurent coefficient counts as zero
_COEFF_TOL = 1e-11


def mat2(a11, a12, a21, a22) -> np.ndarray:
    return np.array([[a11, a12], [a21, a22]], dtype=complex)


def det2(M: np.ndarray) -> complex:
    return M[0, 0] * M[1, 1] - M[0, 1] * M[1, 0]


def adjugate2(M: np.ndarray) -> np.ndarray:
    return np.array([[M[1, 1], -M[0, 1]], [-M[1, 0], M[0, 0]]], dtype=complex)


def inverse2(M: np.ndarray, tol_scale: float = 1e-12) -> np.ndarray:
    """Closed-form inverse of a 2x2 matrix.

    Raises Singular when |det M| falls below tol_scale times the squared
    max-entry scale; for the matrices handled here that signals a candidate
    eigenvalue rather than a request for a pseudo-inverse.
    """
    d = det2(M)
    scale = max(np.abs(M).max(), 1.0)
    if abs(d) <= tol_scale * scale * scale:
        raise Singular(f"determinant {d} below tolerance")
    return adjugate2(M) / d


def is_hermitian(M: np.ndarray, tol: float) -> bool:
    return bool(np.abs(M - M.conj().T).max() <= tol)


def is_unitary(M: np.ndarray, tol: float) -> bool:
    return bool(np.abs(M @ M.conj().T - np.eye(2)).max() <= tol)


class LaurentPoly:
    """Complex Laurent polynomial in one real variable s > 0.

    Coefficients are stored densely on the window [-WINDOW, WINDOW];
    coeffs[d + WINDOW] is the coefficient of s**d.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        if coeffs is None:
            self.coeffs = np.zeros(2 * WINDOW + 1, dtype=complex)
        else:
            self.coeffs = np.asarray(coeffs, dtype=complex)
            if self.coeffs.shape != (2 * WINDOW + 1,):
                raise ValueError("coefficient vector must have length %d" % (2 * WINDOW + 1))

    @classmethod
    def constant(cls, c) -> "LaurentPoly":
        p = cls()
        p.coeffs[WINDOW] = c
        return p

    @classmethod
    def monomial(cls, degree: int, c=1.0) -> "LaurentPoly":
        if abs(degree) > WINDOW:
            raise ValueError("degree outside tracked window")
        p = cls()
        p.coeffs[degree + WINDOW] = c
        return p

    def __add__(self, other):
        other = _as_laurent(other)
        return LaurentPoly(self.coeffs + other.coeffs)

    __radd__ = __add__

    def __sub__(self, other):
        other = _as_laurent(other)
        return LaurentPoly(self.coeffs - other.coeffs)

    def __rsub__(self, other):
        return _as_laurent(other) - self

    def __neg__(self):
        return LaurentPoly(-self.coeffs)

    def __mul__(self, other):
        if isinstance(other, LaurentPoly):
            full = np.convolve(self.coeffs, other.coeffs)
            mid = 2 * WINDOW
            out = full[mid - WINDOW : mid + WINDOW + 1]
            tail = np.abs(np.concatenate([full[: mid - WINDOW], full[mid + WINDOW + 1 :]]))
            scale = max(np.abs(full).max(), 1.0)
            if tail.size and tail.max() > 1e-10 * scale:
                raise ValueError("product leaves the tracked degree window")
            return LaurentPoly(out)
        return LaurentPoly(self.coeffs * other)

    __rmul__ = __mul__

    def __call__(self, s: float) -> complex:
        if s <= 0:
            raise ValueError("direct evaluation requires s > 0; use laurent_ratio_limit at s = 0")
        degrees = np.arange(-WINDOW, WINDOW + 1)
        return complex(np.sum(self.coeffs * np.asarray(s, dtype=float) ** degrees))

    def min_degree(self, rel_tol: float = _COEFF_TOL):
        """Smallest degree whose coefficient is nonzero relative to the largest one."""
        mags = np.abs(self.coeffs)
        top = mags.max()
        if top == 0.0:
            return None
        idx = np.nonzero(mags > rel_tol * top)[0]
        return int(idx[0]) - WINDOW

    def __repr__(self):
        terms = [
            f"({c:.3g})*s^{d - WINDOW}" for d, c in enumerate(self.coeffs) if c != 0
        ]
        return "LaurentPoly(" + (" + ".join(terms) if terms else "0") + ")"


def _as_laurent(x) -> LaurentPoly:
    if isinstance(x, LaurentPoly):
        return x
    return LaurentPoly.constant(x)


def clear_ratio(num, den: LaurentPoly):
    """Shift a matrix of Laurent numerators and a Laurent denominator so the
    denominator becomes an ordinary polynomial with nonzero constant term.

    Returns (num_coeffs, den_coeffs) with num_coeffs of shape (2, 2, K) and
    den_coeffs of shape (K,), both in ascending powers of s.  The ratio is
    unchanged since both sides are multiplied by the same power of s.
    """
    dmin = den.min_degree()
    if dmin is None:
        raise DegenerateLimit("denominator vanishes to all tracked orders")
    shift = -dmin  # multiply num and den by s**shift
    den_scale = np.abs(den.coeffs).max()

    K = 2 * WINDOW + 1
    num_c = np.zeros((2, 2, K), dtype=complex)
    num_scale = max(
        max(np.abs(num[j][k].coeffs).max() for j in range(2) for k in range(2)), 1e-300
    )
    for j in range(2):
        for k in range(2):
            c = num[j][k].coeffs  # degrees -W..W
            # degree d becomes d + shift; drop coefficients that would land
            # below degree 0 only if they are numerically zero
            for i, cv in enumerate(c):
                d = i - WINDOW + shift
                if d < 0:
                    if abs(cv) > _COEFF_TOL * num_scale:
                        raise DegenerateLimit(
                            "numerator diverges faster than the denominator at s = 0"
                        )
                    continue
                if d < K:
                    num_c[j, k, d] = cv
                elif abs(cv) > _COEFF_TOL * num_scale:
                    raise DegenerateLimit("cleared numerator leaves the tracked window")
    den_c = np.zeros(K, dtype=complex)
    for i, cv in enumerate(den.coeffs):
        d = i - WINDOW + shift
        if 0 <= d < K:
            den_c[d] = cv
        elif abs(cv) > _COEFF_TOL * den_scale:
            raise DegenerateLimit("cleared denominator leaves the tracked window")
    # zero out sub-threshold junk in the denominator's constant term check
    if abs(den_c[0]) <= _COEFF_TOL * den_scale:
        raise DegenerateLimit("denominator constant term vanishes after clearing")
    return num_c, den_c


def laurent_ratio_limit(num, den: LaurentPoly, s: float) -> np.ndarray:
    """Entrywise value of num/den at s in [0, 1], including s = 0.

    num is a 2x2 nested sequence of LaurentPoly, den a LaurentPoly.  The
    endpoint s = 0 is evaluated by leading-coefficient cancellation; for
    s > 0 the cleared polynomial form is used, which agrees with naive
    pointwise division wherever the latter is well conditioned.
    """
    num_c, den_c = clear_ratio(num, den)
    if s == 0.0:
        return num_c[:, :, 0] / den_c[0]
    powers = np.asarray(s, dtype=float) ** np.arange(num_c.shape[-1])
    return (num_c @ powers) / (den_c @ powers)
