"""Exception types shared across the library."""


class DomainError(Exception):
    """Base class for all domain-level errors (CLI exit code 1)."""


class DivisionByZero(DomainError):
    pass


class InexactDivision(DomainError):
    """An exact quotient was requested but does not exist."""


class NotInGhostImage(DomainError):
    """A ghost vector is not the ghost of any Witt vector over the ring."""


class LengthUnderflow(DomainError):
    """Frobenius or restriction applied at Witt length 1."""


class ContextMismatch(DomainError):
    """Operands belong to different ring / Witt / form contexts."""


class NotAUnit(DomainError):
    pass


class NotMonogenic(DomainError):
    """The relative Cartier machinery supports a single generator only."""


class ImproperIdeal(DomainError):
    pass


class ParseError(DomainError):
    """Malformed element literal (CLI exit code 2)."""
