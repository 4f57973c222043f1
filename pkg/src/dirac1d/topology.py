"""Winding of the boundary determinant and the integer bound-state identity.

The unitary-valued map Gamma(x, y) = 1 + R(y) T0(lambda(x)) extends
continuously to the compactified square; its restriction to the boundary
has a determinant winding number equal to minus the number of bound states.
The loop is traversed so that the calibration pair (C = diag(-1/2, 1/2),
D = 1), which carries a double eigenvalue at 0, yields winding -2.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import NonClosure
from .extensions import BoundaryPair
from .scattering import T0Evaluator
from .spectrum import eigenvalues_closed_form

EDGE_Y_CUTOFF = 3.0  # |tanh(2 pi y) -+ 1| < 3e-8 beyond this
MAX_REFINE = 24
PHASE_CAP = 0.5 * np.pi


@dataclass(frozen=True)
class LoopSample:
    edge: str
    param: float
    gamma: np.ndarray
    det: complex
    unwrapped_phase: float


@dataclass(frozen=True)
class BoundaryLoop:
    samples: list
    winding: int
    closure_residual: float


@dataclass(frozen=True)
class LevinsonReport:
    winding: int
    eigen_count: int
    holds: bool
    closure_residual: float
    samples_used: int


def R_matrix(y: float) -> np.ndarray:
    """Momentum-side multiplier symbol; R(-inf) = 0, R(+inf) = 1."""
    if np.isposinf(y):
        return np.eye(2, dtype=complex)
    if np.isneginf(y):
        return np.zeros((2, 2), dtype=complex)
    a = 2.0 * np.pi * y
    if abs(a) > 350.0:  # cosh overflows; limits are exact
        th, sech = np.sign(a), 0.0
    else:
        th, sech = np.tanh(a), 1.0 / np.cosh(a)
    return 0.5 * np.array(
        [[th - 1j * sech + 1.0, 0.0], [0.0, th + 1j * sech + 1.0]], dtype=complex
    )


def lambda_of_edge_param(x: float, m: float) -> float:
    """Energy coordinate along the scattering edge, lambda = m(e^x+1)/(e^x-1)."""
    ex = np.exp(x)
    return m * (ex + 1.0) / (ex - 1.0)


def gamma_edge(pair: BoundaryPair, edge: str, param: float) -> np.ndarray:
    """Value of the boundary map on one of the four edges.

    B1: 1 + R(y) T0(m)        (y = param)
    B2: 1 + T0(lambda(x))     (x = param; x < 0 covers lambda < -m, x > 0
                               covers lambda > m, x = 0 the common value at
                               +-infinity)
    B3: 1 + R(y) T0(-m)       (y = param)
    B4: 1
    """
    ev = T0Evaluator(pair)
    eye = np.eye(2, dtype=complex)
    if edge == "B1":
        return eye + R_matrix(param) @ ev.at(+1, 0.0)
    if edge == "B3":
        return eye + R_matrix(param) @ ev.at(-1, 0.0)
    if edge == "B4":
        return eye
    if edge != "B2":
        raise ValueError("edge must be one of B1, B2, B3, B4")
    if param == 0.0:
        return eye + ev.at(+1, 1.0)
    if np.isposinf(param):
        return eye + ev.at(+1, 0.0)
    if np.isneginf(param):
        return eye + ev.at(-1, 0.0)
    lam = lambda_of_edge_param(param, pair.mass)
    branch = +1 if lam > 0 else -1
    s = ((abs(lam) - pair.mass) / (abs(lam) + pair.mass)) ** 0.25
    return eye + ev.at(branch, s)


class _Segment:
    """One edge of the loop with its own parameter in [0, 1]."""

    def __init__(self, edge: str, value, init_params):
        self.edge = edge
        self.value = value  # t in [0,1] -> (display_param, Mat2C)
        self.params = list(init_params)


def _edge_y(t: float) -> float:
    if t <= 0.0:
        return -np.inf
    if t >= 1.0:
        return np.inf
    return -EDGE_Y_CUTOFF + 2.0 * EDGE_Y_CUTOFF * t


def _build_segments(pair: BoundaryPair, ev: T0Evaluator):
    eye = np.eye(2, dtype=complex)
    t0_plus = ev.at(+1, 0.0)
    t0_minus = ev.at(-1, 0.0)

    def seg_threshold_plus(t):
        y = _edge_y(t)
        return y, eye + R_matrix(y) @ t0_plus

    def seg_scattering(t):
        # from the +m threshold through +-infinity to the -m threshold
        if t <= 0.5:
            branch, s = +1, 2.0 * t
        else:
            branch, s = -1, 2.0 * (1.0 - t)
        return (branch * (1.0 + s)), eye + ev.at(branch, min(s, 1.0))

    def seg_threshold_minus(t):
        y = _edge_y(1.0 - t)  # traversed from +inf back to -inf
        return y, eye + R_matrix(y) @ t0_minus

    def seg_free(t):
        return t, eye

    n_y = 31
    n_s = 33
    return [
        _Segment("B1", seg_threshold_plus, np.linspace(0.0, 1.0, n_y + 2)),
        _Segment("B2", seg_scattering, np.linspace(0.0, 1.0, 2 * n_s)),
        _Segment("B3", seg_threshold_minus, np.linspace(0.0, 1.0, n_y + 2)),
        _Segment("B4", seg_free, np.linspace(0.0, 1.0, 3)),
    ]


def winding(pair: BoundaryPair, refine_tol: float = 0.05) -> BoundaryLoop:
    """Adaptive phase accumulation of det Gamma along the closed boundary loop."""
    ev = T0Evaluator(pair)
    segments = _build_segments(pair, ev)

    samples = []
    total = 0.0
    prev_det = None
    for seg in segments:
        params = seg.params
        cache = {}

        def val(t):
            if t not in cache:
                cache[t] = seg.value(t)
            return cache[t]

        for _ in range(MAX_REFINE):
            dets = [np.linalg.det(val(t)[1]) for t in params]
            incs = np.angle(np.array(dets[1:]) / np.array(dets[:-1]))
            bad = np.nonzero(np.abs(incs) >= PHASE_CAP)[0]
            if bad.size == 0:
                break
            new_params = set(params)
            for i in bad:
                new_params.add(0.5 * (params[i] + params[i + 1]))
            params = sorted(new_params)
        else:
            raise NonClosure("phase increments stay above the cap after maximum refinement")
        seg.params = params
        for t in params:
            disp, g = val(t)
            d = np.linalg.det(g)
            if prev_det is not None:
                total += float(np.angle(d / prev_det))
            prev_det = d
            samples.append(
                LoopSample(edge=seg.edge, param=float(disp), gamma=g, det=complex(d), unwrapped_phase=total)
            )
    # close the loop back to the first sample
    total += float(np.angle(samples[0].det / prev_det))
    wind = int(round(total / (2.0 * np.pi)))
    residual = abs(total / (2.0 * np.pi) - wind)
    if residual >= refine_tol:
        raise NonClosure(f"loop phase fails to close: residual {residual:.3g}")
    return BoundaryLoop(samples=samples, winding=wind, closure_residual=float(residual))


def levinson_verdict(pair: BoundaryPair) -> LevinsonReport:
    """Winding of the boundary determinant vs the bound-state count."""
    loop = winding(pair)
    report = eigenvalues_closed_form(pair)
    return LevinsonReport(
        winding=loop.winding,
        eigen_count=report.total_count,
        holds=loop.winding == -report.total_count,
        closure_residual=loop.closure_residual,
        samples_used=len(loop.samples),
    )
