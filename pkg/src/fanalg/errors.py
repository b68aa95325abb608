"""Exception types shared across the package."""


class FanAlgError(Exception):
    """Base class for every error raised by fanalg."""


class ZeroVectorError(FanAlgError):
    pass


class NonPrimitiveError(FanAlgError):
    pass


class DegenerateConeError(FanAlgError):
    pass


class NotStronglyConvexError(FanAlgError):
    pass


class BudgetExceededError(FanAlgError):
    pass


class OutsideSupportError(FanAlgError):
    pass


class DimensionMismatchError(FanAlgError):
    pass


class NonPositiveInputError(FanAlgError):
    pass


class UnsupportedSupportError(FanAlgError):
    pass


class ZeroPolynomialError(FanAlgError):
    pass


class NonMonicDivisorError(FanAlgError):
    pass


class AdjacentPairError(FanAlgError):
    pass


class StageMismatchError(FanAlgError):
    pass


class UnsupportedFormatError(FanAlgError):
    pass


class InputError(FanAlgError):
    """Malformed problem description (CLI / JSON front end)."""
