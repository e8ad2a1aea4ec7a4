"""Exception hierarchy for the houghton package."""


__all__ = [
    "HoughtonError",
    "InputError",
    "ZeroSumViolation",
    "NotBijective",
    "BadPoint",
    "RayOutOfRange",
    "RayCountMismatch",
    "SameRay",
    "EqualPoints",
    "NotFinitary",
    "ParseError",
    "TauOutsideH2",
    "WrongShape",
    "BadP",
    "NotInUp",
    "Shrinking",
    "SizeMismatch",
    "TrivialPhi",
    "UnsupportedConfiguration",
    "NeedThreeRays",
    "BudgetExceeded",
    "TooLarge",
]


class HoughtonError(Exception):
    """Base class for every error raised by this package."""


class InputError(HoughtonError, ValueError):
    """Invalid user input (bad element data, bad word text, bad parameters)."""


class ZeroSumViolation(InputError):
    pass


class NotBijective(InputError):
    pass


class BadPoint(InputError):
    pass


class RayOutOfRange(InputError):
    pass


class RayCountMismatch(InputError):
    pass


class SameRay(InputError):
    pass


class EqualPoints(InputError):
    pass


class NotFinitary(InputError):
    pass


class ParseError(InputError):
    def __init__(self, message, position=None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position


class TauOutsideH2(InputError):
    pass


class WrongShape(InputError):
    pass


class BadP(InputError):
    pass


class NotInUp(InputError):
    pass


class Shrinking(InputError):
    pass


class SizeMismatch(InputError):
    pass


class TrivialPhi(InputError):
    pass


class UnsupportedConfiguration(HoughtonError):
    """The operation is defined, but not for this number of rays."""


class NeedThreeRays(UnsupportedConfiguration):
    pass


class BudgetExceeded(HoughtonError):
    """A search hit its configured element-count cap."""


class TooLarge(BudgetExceeded):
    pass
