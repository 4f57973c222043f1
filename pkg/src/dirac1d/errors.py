"""Exception hierarchy for the dirac1d package."""


class Dirac1dError(Exception):
    """Base class for all errors raised by dirac1d."""


class Singular(Dirac1dError):
    """2x2 matrix has determinant below the singularity tolerance."""


class DegenerateLimit(Dirac1dError):
    """Leading coefficients vanish to all tracked orders in a Laurent ratio."""


class NotUnitary(Dirac1dError):
    """Input matrix fails the unitarity check."""


class ClassificationAmbiguous(Dirac1dError):
    """det(D) and the rank-one singular value are both borderline zero."""


class OnSpectrum(Dirac1dError):
    """Spectral parameter lies on the continuous spectrum."""


class AtThreshold(Dirac1dError):
    """Energy equals one of the threshold values +-m."""


class InGap(Dirac1dError):
    """Energy lies inside the spectral gap (-m, m) where it is not allowed."""


class PoleAtMinusM(Dirac1dError):
    """Evaluation at z = -m where the Weyl function has a pole factor."""


class OriginEvaluation(Dirac1dError):
    """Pointwise evaluation requested at x = 0 where sgn is undefined."""


class DiagonalPoint(Dirac1dError):
    """Green kernel requested on the diagonal x = y."""


class NearEigenvalue(Dirac1dError):
    """Resolvent evaluation too close to an eigenvalue."""


class NearSingular(Dirac1dError):
    """Matrix unexpectedly singular for an admissible pair."""


class DegenerateQuadratic(Dirac1dError):
    """All coefficients of the bound-state equation vanish."""


class OriginOrThreshold(Dirac1dError):
    """Argument of the energy/position change of variables out of domain."""


class NonClosure(Dirac1dError):
    """Boundary-loop phase fails to close to an integer winding."""


class NotAdmissible(Dirac1dError):
    """Boundary pair violates the admissibility conditions."""
