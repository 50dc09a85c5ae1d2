"""Exact quaternionic analysis on the ball and the group Sp(1,1).

Submodules: quaternion, group, lie, representations, polynomial, fueter,
forms, quadrature, arithmetic.  ``quatds.cli`` is the command line entry.
"""
from ._core import BACKEND
from .errors import (BasisDecompositionError, ConfigError, DegreeOverflowError, DiagramMismatchError,
                     DomainError, NotARootError, QuatdsError, SingularDenominatorError,
                     SolverDegenerateError, ZeroDivisorError)
from .quaternion import Quaternion
from .group import QMatrix2

__version__ = "0.1.0"

__all__ = [
    "BACKEND", "Quaternion", "QMatrix2", "QuatdsError", "ZeroDivisorError", "SingularDenominatorError",
    "DomainError", "BasisDecompositionError", "NotARootError", "SolverDegenerateError",
    "DiagramMismatchError", "DegreeOverflowError", "ConfigError", "__version__",
]
