"""Exception hierarchy shared across the package."""


class BraidstatError(Exception):
    """Base class for all braidstat errors."""


class NonExactDivision(BraidstatError):
    """Polynomial division left a nonzero remainder (or a non-integer quotient)."""


class DivisionByZero(BraidstatError):
    """Division by the zero polynomial."""


class DimensionMismatch(BraidstatError):
    """Matrix dimensions are incompatible."""


class NegativeExponent(BraidstatError):
    """Substitution requires a plain polynomial (lowest exponent >= 0)."""


class ParseError(BraidstatError):
    """Malformed braid-word text."""


class GeneratorOutOfRange(BraidstatError):
    """Generator index outside [1, strands - 1]."""


class IndexOutOfRange(BraidstatError):
    """Burau generator index outside the valid range."""


class NotAPolynomial(BraidstatError):
    """Expected a polynomial in T (lowest exponent >= 0)."""


class NotOddPrime(BraidstatError):
    """The prime parameter must be an odd prime."""


class InfiniteInvariants(BraidstatError):
    """Operation undefined for the infinite-invariant sentinel."""


class BudgetExceeded(BraidstatError):
    """A configured resource budget was exhausted."""


class ZeroEntry(BraidstatError):
    """Family tuple entries must all be positive here."""


class VerificationFailure(BraidstatError):
    """A cross-check between independent computation routes disagreed."""
