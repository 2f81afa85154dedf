"""Exception hierarchy shared by all chgkit modules."""


class ChgkitError(Exception):
    """Base class for every error raised by chgkit."""


# number fields
class NotMonic(ChgkitError, ValueError):
    pass


class ReducibleDetected(ChgkitError, ValueError):
    pass


class InvalidInvolution(ChgkitError, ValueError):
    pass


class MixedFields(ChgkitError, TypeError):
    pass


class DivisionByZero(ChgkitError, ZeroDivisionError):
    pass


class NoInvolution(ChgkitError):
    pass


class ParseError(ChgkitError, ValueError):
    """Malformed textual input. ``line`` is set for line-oriented formats."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


# linear algebra
class DimensionMismatch(ChgkitError, ValueError):
    pass


class Singular(ChgkitError, ZeroDivisionError):
    pass


class NotHermitian(ChgkitError, ValueError):
    pass


class FieldLacksSqrt2(ChgkitError):
    pass


class NotRealElement(ChgkitError, ValueError):
    pass


class EmbeddingError(ChgkitError):
    pass


class DegenerateRestriction(ChgkitError):
    pass


class DependentBasis(ChgkitError):
    pass


# group membership and incidence geometry
class NotUnitary(ChgkitError):
    pass


class DetNotOne(ChgkitError):
    pass


class BadRange(ChgkitError, ValueError):
    pass


class SmallMatrixNotMember(ChgkitError):
    pass


class NotIsotropic(ChgkitError, ValueError):
    pass


class NotAChain(ChgkitError, ValueError):
    pass


class EqualPoints(ChgkitError, ValueError):
    pass


class AllEqual(ChgkitError, ValueError):
    pass


# parabolic subgroup
class ConstraintViolated(ChgkitError, ValueError):
    pass


class NotInP(ChgkitError):
    pass


class NotDecomposable(ChgkitError):
    pass


# proportionality data
class InvariantViolation(ChgkitError, ValueError):
    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
