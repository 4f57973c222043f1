"""Grid realization of the wave operator in the inverted-energy coordinates.

In the representation where the thresholds +-m sit at x = +-infinity and
the energies +-infinity meet at x = 0, the wave operator acts as
W = 1 + R(momentum) T0(lambda(position)); both factors are explicit, so W
is realized on a periodic grid by an FFT multiplier composed with a
pointwise 2x2 multiplication.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import OriginOrThreshold
from .extensions import BoundaryPair
from .scattering import T0Evaluator
from .topology import R_matrix


@dataclass(frozen=True)
class GridSpec:
    half_width: float = 40.0
    points: int = 4096

    def __post_init__(self):
        n = self.points
        if n < 2 or (n & (n - 1)) != 0:
            raise ValueError("points must be a power of two")
        if not self.half_width > 0:
            raise ValueError("half_width must be positive")

    @property
    def spacing(self) -> float:
        return 2.0 * self.half_width / self.points

    @property
    def x_nodes(self) -> np.ndarray:
        # offset half a cell so x = 0 (the pole of lambda(x)) is never a node
        j = np.arange(self.points)
        return (j + 0.5) * self.spacing - self.half_width

    @property
    def momentum_nodes(self) -> np.ndarray:
        return 2.0 * np.pi * np.fft.fftfreq(self.points, d=self.spacing)


@dataclass(frozen=True)
class GridFunction:
    values: np.ndarray  # shape (N, 2) complex

    def __post_init__(self):
        object.__setattr__(self, "values", np.asarray(self.values, dtype=complex))
        if self.values.ndim != 2 or self.values.shape[1] != 2:
            raise ValueError("values must have shape (N, 2)")
        if not np.all(np.isfinite(self.values)):
            raise ValueError("grid function must be finite")

    def norm(self) -> float:
        return float(np.linalg.norm(self.values))


def lambda_of_x(x: float, m: float) -> float:
    """lambda(x) = m (e^x + 1)/(e^x - 1); poles +-m at x = +-infinity."""
    if x == 0.0:
        raise OriginOrThreshold("lambda(x) has a pole at x = 0")
    ex = np.exp(x)
    return m * (ex + 1.0) / (ex - 1.0)


def x_of_lambda(lam: float, m: float) -> float:
    """Inverse coordinate change, x = ln((lambda + m)/(lambda - m))."""
    if abs(lam) <= m:
        raise OriginOrThreshold("x(lambda) requires |lambda| > m")
    return float(np.log((lam + m) / (lam - m)))


def gaussian_probe(grid: GridSpec, center: float = 0.0, width: float = 1.0) -> GridFunction:
    """Standard smooth test function with both components excited."""
    x = grid.x_nodes
    env = np.exp(-((x - center) ** 2) / (2.0 * width**2))
    vals = np.stack([env, 0.5 * env], axis=1).astype(complex)
    return GridFunction(vals / np.linalg.norm(vals))


def T_of_position(pair: BoundaryPair, grid: GridSpec) -> np.ndarray:
    """Samples T0(lambda(x_j)) on the grid; shape (N, 2, 2)."""
    ev = T0Evaluator(pair)
    x = grid.x_nodes
    m = pair.mass
    lam = m * (np.exp(x) + 1.0) / (np.exp(x) - 1.0)
    s = ((np.abs(lam) - m) / (np.abs(lam) + m)) ** 0.25
    out = np.empty((grid.points, 2, 2), dtype=complex)
    for branch in (+1, -1):
        mask = (lam > 0) if branch == +1 else (lam < 0)
        if mask.any():
            out[mask] = ev.at_many(branch, s[mask])
    return out


def _r_diagonal(grid: GridSpec) -> np.ndarray:
    """Entries R_11, R_22 of the diagonal multiplier on the momentum nodes."""
    xi = grid.momentum_nodes
    a = 2.0 * np.pi * xi
    th = np.tanh(a)
    sech = np.empty_like(a)
    big = np.abs(a) > 350.0
    sech[big] = 0.0
    sech[~big] = 1.0 / np.cosh(a[~big])
    r11 = 0.5 * (th - 1j * sech + 1.0)
    r22 = 0.5 * (th + 1j * sech + 1.0)
    return np.stack([r11, r22], axis=1)  # (N, 2)


def apply_R_multiplier(f: GridFunction, grid: GridSpec) -> GridFunction:
    """Fourier multiplier by the diagonal symbol R, componentwise."""
    r = _r_diagonal(grid)
    fhat = np.fft.fft(f.values, axis=0)
    return GridFunction(np.fft.ifft(r * fhat, axis=0))


def wave_operator_apply(pair: BoundaryPair, f: GridFunction, grid: GridSpec) -> GridFunction:
    """W f = f + R(momentum) applied to T0(lambda(position)) f."""
    T = T_of_position(pair, grid)
    tf = GridFunction(np.einsum("njk,nk->nj", T, f.values))
    return GridFunction(f.values + apply_R_multiplier(tf, grid).values)


def isometry_defect(pair: BoundaryPair, grid: GridSpec, probe: GridFunction | None = None) -> float:
    """Relative norm change of the discretized wave operator on a probe."""
    if probe is None:
        probe = gaussian_probe(grid)
    out = wave_operator_apply(pair, probe, grid)
    n0 = probe.norm()
    return abs(out.norm() - n0) / n0


def bound_state_trace(pair: BoundaryPair, grid: GridSpec) -> float:
    """Exploratory bound-state count trace(1 - W W*) from the dense W.

    Periodic discretization of a non-periodic symbol converges slowly near
    the box boundary, so this is a soft diagnostic, not a certified count.
    """
    n = grid.points
    if n > 1024:
        raise ValueError("dense assembly is limited to N <= 1024")
    T = T_of_position(pair, grid)  # (N, 2, 2)
    r = _r_diagonal(grid)  # (N, 2)
    F = np.fft.fft(np.eye(n), axis=0)
    R_blocks = [np.fft.ifft(r[:, c, None] * F, axis=0) for c in range(2)]
    W = np.zeros((2 * n, 2 * n), dtype=complex)
    for row in range(2):
        for col in range(2):
            W[row * n : (row + 1) * n, col * n : (col + 1) * n] = R_blocks[row] @ np.diag(
                T[:, row, col]
            )
    W += np.eye(2 * n)
    return float(2 * n - np.sum(np.abs(W) ** 2))
