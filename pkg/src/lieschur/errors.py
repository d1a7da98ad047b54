"""Exception hierarchy shared by every module of the package."""


class LieSchurError(Exception):
    pass


class FieldMismatchError(LieSchurError, ValueError):
    pass


class AlphabetMismatchError(LieSchurError, ValueError):
    pass


class PresentationError(LieSchurError, ValueError):
    """Invalid quotient presentation (antisymmetry, Jacobi, projection)."""


class NotInIdealError(LieSchurError, ValueError):
    pass


class CriterionUnavailableError(LieSchurError, ValueError):
    """Dynkin test requested where it would divide by the characteristic."""


class DegreeCapError(LieSchurError, ArithmeticError):
    """A product in U(L/I) produced a term above the configured degree cap."""

    def __init__(self, message, degree=None, cap=None):
        super().__init__(message)
        self.degree = degree
        self.cap = cap


class CaseMismatchError(LieSchurError, ValueError):
    pass


class ParseError(LieSchurError, ValueError):
    def __init__(self, message, text=None, pos=None):
        if text is not None and pos is not None:
            message = f"{message} at column {pos + 1} in {text!r}"
        super().__init__(message)
        self.text = text
        self.pos = pos


class ConfigError(LieSchurError, ValueError):
    def __init__(self, message, location=None):
        if location:
            message = f"{location}: {message}"
        super().__init__(message)
        self.location = location


class LiftMismatchError(LieSchurError, ValueError):
    """A family parameter's lift to U(L) does not project onto it."""
