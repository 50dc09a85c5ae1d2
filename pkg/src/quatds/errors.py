"""Exception types raised across the package."""


class QuatdsError(Exception):
    pass


class ZeroDivisorError(QuatdsError, ZeroDivisionError):
    """Inverse requested for a quaternion of (numerically) zero norm."""


class SingularDenominatorError(QuatdsError, ZeroDivisionError):
    """N(cq + d) vanishes at the evaluation point."""


class DomainError(QuatdsError, ValueError):
    pass


class BasisDecompositionError(QuatdsError):
    pass


class NotARootError(QuatdsError, ValueError):
    pass


class SolverDegenerateError(QuatdsError):
    pass


class DiagramMismatchError(QuatdsError):
    pass


class DegreeOverflowError(QuatdsError, ValueError):
    pass


class ConfigError(QuatdsError, ValueError):
    pass
