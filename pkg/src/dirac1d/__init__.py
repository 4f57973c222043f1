"""Numerical toolkit for 1-D Dirac operators with a point interaction.

Bound states, on-shell scattering, Green kernels, a grid realization of the
wave operator, and the integer identity between the boundary-determinant
winding and the bound-state count, for admissible boundary pairs (C, D).
"""

from .errors import Dirac1dError
from .extensions import (
    BoundaryPair,
    InvertibleD,
    RankOneD,
    ZeroD,
    check_admissible,
    classify,
    equivalent,
    from_unitary,
    haar_unitary,
    random_admissible,
)
from .scattering import ContinuumPoint, S_matrix, T0, T0Evaluator, T_eps, free_fiber
from .spectrum import (
    SpectralReport,
    eigenfunction,
    eigenvalue_oracle_scan,
    eigenvalues_closed_form,
    predicted_count,
)
from .topology import LevinsonReport, levinson_verdict, winding
from .waveop import GridFunction, GridSpec, bound_state_trace, isometry_defect, wave_operator_apply
from .weyl_green import EnergyPoint, green_free, green_perturbed, weyl_M

__version__ = "0.1.0"

__all__ = [
    "BoundaryPair",
    "ContinuumPoint",
    "Dirac1dError",
    "EnergyPoint",
    "GridFunction",
    "GridSpec",
    "InvertibleD",
    "LevinsonReport",
    "RankOneD",
    "S_matrix",
    "SpectralReport",
    "T0",
    "T0Evaluator",
    "T_eps",
    "ZeroD",
    "bound_state_trace",
    "check_admissible",
    "classify",
    "eigenfunction",
    "eigenvalue_oracle_scan",
    "eigenvalues_closed_form",
    "equivalent",
    "free_fiber",
    "from_unitary",
    "green_free",
    "green_perturbed",
    "haar_unitary",
    "isometry_defect",
    "levinson_verdict",
    "predicted_count",
    "random_admissible",
    "wave_operator_apply",
    "weyl_M",
    "winding",
]
