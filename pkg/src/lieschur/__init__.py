"""Exact computer algebra for Schur-multiplicator witnesses of L/I^n.

Free associative and free Lie algebras, the Magnus embedding, enveloping
algebras of finite-dimensional or free abelian quotients in PBW normal form,
their Hopf structure, and rank certification of witness families.
"""

from .errors import (CaseMismatchError, ConfigError, CriterionUnavailableError, DegreeCapError,
                     LieSchurError, NotInIdealError, PresentationError)
from .scalar import FieldSpec, Scalar, int_to_scalar

__version__ = "0.1.0"

__all__ = ["CaseMismatchError", "ConfigError", "CriterionUnavailableError", "DegreeCapError",
           "FieldSpec", "LieSchurError", "NotInIdealError", "PresentationError", "Scalar",
           "int_to_scalar"]
