"""Exception hierarchy shared by every module."""


class CastellaError(Exception):
    """Base class for all library errors."""


class DomainError(CastellaError, ValueError):
    """The inputs lie outside the domain of the requested operation."""


class NotSameElementError(DomainError):
    pass


class NotPositiveError(DomainError):
    pass


class NotDivisibleError(DomainError):
    pass


class NotCoDivisorError(DomainError):
    pass


class NonInvertibleError(DomainError):
    pass


class ParseError(DomainError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} at byte {offset}")
        self.offset = offset


class ResourceLimitError(CastellaError):
    """An enumeration grew past the configured node cap."""


class InvariantViolation(CastellaError, AssertionError):
    """An internal self-check failed; indicates a bug, never bad input."""
