"""Exception hierarchy shared by every module."""


class CayleyError(Exception):
    """Base class for all errors raised by this package."""


class SizeMismatchError(CayleyError, ValueError):
    pass


class DomainError(CayleyError, ValueError):
    pass


class CapacityError(CayleyError):
    """Input is larger than the exhaustive algorithms are meant to handle."""


class PreconditionError(CayleyError, ValueError):
    pass


class ContractViolation(CayleyError, ValueError):
    pass


class NotLiftable(CayleyError):
    """A line-graph automorphism is not induced by any graph automorphism."""


class ParseError(CayleyError, ValueError):
    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
