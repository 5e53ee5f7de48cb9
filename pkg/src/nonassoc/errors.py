"""Exception hierarchy shared by every module of the package."""


class AlgebraError(Exception):
    """Base class for all errors raised by nonassoc."""


class FieldError(AlgebraError, ValueError):
    """Invalid field specification (non-prime modulus, characteristic 2)."""


class BadCharacteristic(AlgebraError):
    """The operation needs a characteristic other than the algebra's."""


class CharacteristicTooSmall(BadCharacteristic):
    pass


class FieldNotFinite(AlgebraError):
    pass


class SearchSpaceTooLarge(AlgebraError):
    pass


class AlgebraFormatError(AlgebraError, ValueError):
    """Malformed algebra description; ``path`` names the offending field."""

    def __init__(self, message, path=None):
        self.path = path
        if path:
            message = f"{path}: {message}"
        super().__init__(message)


class MismatchedAlgebras(AlgebraError, ValueError):
    pass


class NotIdempotent(AlgebraError):
    pass


class ZeroElement(AlgebraError):
    pass


class NotFlexibleIdempotent(AlgebraError):
    pass


class NotFlexible(AlgebraError):
    pass


class NotSemisimple(AlgebraError):
    pass


class NotAnAxis(AlgebraError):
    pass


class CentralAxis(AlgebraError):
    pass


class SameAxis(AlgebraError):
    pass


class NotEigenvector(AlgebraError):
    pass


class NotCommuting(AlgebraError):
    pass


class ComponentsNotDirectSum(AlgebraError):
    pass


class PreconditionFailed(AlgebraError):
    pass


class BadParameters(AlgebraError, ValueError):
    pass
