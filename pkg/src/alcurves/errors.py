"""Exception types raised by the library.

Every error raised intentionally by this package derives from
:class:`AlcurvesError`, so callers can catch one base type.  The leaf
classes are named for the condition they signal; the CLI maps them to
machine-readable error reports and stable exit codes.
"""


class AlcurvesError(Exception):
    """Base class for all errors raised by this package."""


class ValidationError(AlcurvesError):
    """A curve description violates a structural requirement."""


class NotIrreducible(ValidationError):
    """gcd(N, A_0, ..., A_r) > 1: the defining equation factors."""


class CharDividesN(ValidationError):
    """The characteristic divides the exponent N of y."""


class NotPrime(ValidationError):
    """The stated positive characteristic is not a prime number."""


class DuplicateBranchPoint(ValidationError):
    """Two branch points coincide (as constants, or as variable names)."""


class NotNormalized(ValidationError):
    """An operation requires branch points starting with 0 and 1."""


class InfinityUndefinedInCase3(AlcurvesError):
    """Local data at infinity was requested but N equals the exponent sum."""


class VariableMismatch(AlcurvesError):
    """A polynomial operation referenced an unknown or missing variable."""


class DenominatorDivisibleByP(AlcurvesError):
    """A rational number cannot be reduced modulo p (p divides its denominator)."""


class NotCoprime(AlcurvesError):
    """Two integers that must be coprime share a factor."""


class PochhammerZeroDenominator(AlcurvesError):
    """A series coefficient has a vanishing rising-factorial denominator."""


class NegativeDPrime(AlcurvesError):
    """The truncation order for a series-side coefficient is negative."""


class BasisReexpressionFailed(AlcurvesError):
    """An operator image could not be written in the target basis."""


class BlockViolation(AlcurvesError):
    """A matrix entry is nonzero outside the permitted character block."""


class InvalidSpecialization(AlcurvesError):
    """A substitution of constants for branch points degenerates the curve."""
