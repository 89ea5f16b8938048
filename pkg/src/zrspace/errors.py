class ZrError(Exception):
    """Base class for all domain errors raised by this package."""


class DomainError(ZrError, ValueError):
    """An input lies outside the domain of an operation (zero valuation, bad modulus, ...)."""


class InvalidSubsetError(DomainError):
    """A subset mentions an element that is not in the carrier."""


class InvalidPosetError(DomainError):
    """A relation is not a partial order."""


class PreconditionError(DomainError):
    """A documented precondition does not hold for the given arguments."""


class ParseError(ZrError, ValueError):
    """Text input could not be parsed."""
