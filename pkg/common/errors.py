"""
Error hierarchy shared by every module.

Each error carries a stable `code` (its class name) and an optional
`certificate` dict. The CLI maps certificate-bearing failures to exit code 1
and input problems to exit code 2.
"""
from typing import Optional


class PlaneBalanceError(ValueError):
    def __init__(self, message: str, certificate: Optional[dict] = None):
        super().__init__(message)
        self.message = message
        self.certificate = certificate or {}

    @property
    def code(self) -> str:
        return type(self).__name__

    def __str__(self) -> str:
        return self.message


# geometry
class MixedMode(PlaneBalanceError):
    pass


class ZeroVector(PlaneBalanceError):
    pass


class DuplicateArgument(PlaneBalanceError):
    pass


# balance
class OddM(PlaneBalanceError):
    pass


class NotBalanced(PlaneBalanceError):
    pass


class NotUniform(PlaneBalanceError):
    pass


class AmbiguousPairing(PlaneBalanceError):
    pass


class InconsistentConstants(PlaneBalanceError):
    pass


# recurrence
class RootCountMismatch(PlaneBalanceError):
    pass


class ClosureViolation(PlaneBalanceError):
    pass


# canonical
class SingularFrame(PlaneBalanceError):
    pass


class NotNormalized(PlaneBalanceError):
    pass


class NoGridMatch(PlaneBalanceError):
    pass


class DegenerateStep(PlaneBalanceError):
    pass


class ResidualTooLarge(PlaneBalanceError):
    pass


# search
class BudgetExceeded(PlaneBalanceError):
    pass


# input / usage
class ConfigFileError(PlaneBalanceError):
    pass


class UsageError(PlaneBalanceError):
    pass


# failures that certify "the property does not hold" rather than bad input
CERTIFICATE_ERRORS = (
    NotBalanced,
    NotUniform,
    NoGridMatch,
    ResidualTooLarge,
    AmbiguousPairing,
    InconsistentConstants,
    DuplicateArgument,
    NotNormalized,
    SingularFrame,
    DegenerateStep,
    OddM,
    RootCountMismatch,
    ClosureViolation,
)
