"""Exception hierarchy shared by every module of the package."""


class BiHomError(Exception):
    """Base class for all errors raised by :mod:`bihom`."""


class DimensionMismatch(BiHomError, ValueError):
    pass


class SingularMap(BiHomError, ArithmeticError):
    """A linear map has zero determinant and cannot be inverted."""


class InvariantError(BiHomError, ValueError):
    """A structural invariant (commuting maps, skew-symmetry, ...) is violated.

    ``location`` names the offending field when the error comes from parsing.
    """

    def __init__(self, message, location=None):
        if location:
            message = f"{location}: {message}"
        super().__init__(message)
        self.location = location


class NotCommuting(InvariantError):
    pass


class NotRegular(InvariantError):
    pass


class NotMultiplicative(InvariantError):
    pass


class NotMorphism(InvariantError):
    pass


class NotEndomorphism(NotMorphism):
    pass


class BadParameter(BiHomError, ValueError):
    pass


class UnknownIdentity(BiHomError, KeyError):
    pass


class FormatError(BiHomError, ValueError):
    def __init__(self, message, location=None):
        if location:
            message = f"{location}: {message}"
        super().__init__(message)
        self.location = location


class DocumentSyntaxError(FormatError):
    """The document is not well-formed JSON."""


class SchemaError(FormatError):
    """The document is JSON but has missing, extra or mistyped fields."""
