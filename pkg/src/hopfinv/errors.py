"""Exception hierarchy shared by the whole package."""


class HopfInvError(Exception):
    """Base class for all package errors."""


class DomainError(HopfInvError, ValueError):
    """An argument lies outside the domain of the operation."""


class InvalidObjectError(HopfInvError, ValueError):
    """A combinatorial object violates its structural invariants."""


class NotSymmetricError(HopfInvError, ValueError):
    """A quasisymmetric function was expected to be symmetric but is not."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class ResourceError(HopfInvError, RuntimeError):
    """A size guard was exceeded."""


class ConsistencyError(HopfInvError, AssertionError):
    """Two computations that must agree did not. Always a bug."""
