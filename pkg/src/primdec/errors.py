"""Exception types shared across the package."""

from __future__ import annotations


class PrimdecError(Exception):
    """Base class for every library-specific error."""


class NotPrime(PrimdecError):
    """The modulus is not an odd prime."""


class TooLarge(PrimdecError):
    """The modulus exceeds the configured index-table cap."""


class ToleranceExceeded(PrimdecError):
    """A floating-point character computation drifted past its tolerance."""


class NotADivisor(PrimdecError):
    """Requested character order does not divide p - 1."""


class DuplicateShift(PrimdecError):
    """Shift lists for character sums must be pairwise distinct."""


class IsPerfectPower(PrimdecError):
    """The polynomial is an m-th power, so the Weil hypothesis fails."""


class NotMonic(PrimdecError):
    """Polynomial argument must be monic."""


class FieldMismatch(PrimdecError):
    """Operands live over different prime fields."""


class KTooLarge(PrimdecError):
    """Correlation or search order exceeds the configured cap."""


class NotDistinct(PrimdecError):
    """Quadruple shifts must be pairwise distinct."""


class ZeroNotInB(PrimdecError):
    """The translate set must contain 0."""


class NotADecomposition(PrimdecError):
    """Certificate requested for a pair that does not decompose the primitive set."""


class SizesUnequal(PrimdecError):
    """The residual certificate needs |A| = |B|."""


class BadEpsilon(PrimdecError):
    """epsilon must lie strictly between 0 and 1/2."""


class MissingInput(PrimdecError):
    """A report-specific input is required but was not supplied."""


class DomainError(PrimdecError):
    """Argument outside the function's domain."""


class BudgetExceeded(PrimdecError):
    """Search ran out of wall-clock budget; partial results are attached."""

    def __init__(self, message: str, partial=None, examined: int = 0,
                 total: int | None = None):
        super().__init__(message)
        self.partial = list(partial) if partial is not None else []
        self.examined = examined
        self.total = total
