"""Exception hierarchy shared by every module of the package."""


class GarsideError(Exception):
    """Base class for all errors raised by this package."""


class InputError(GarsideError, ValueError):
    """A token, word or argument is not valid for the given structure."""


class DomainError(GarsideError, ValueError):
    """An operation was applied outside its mathematical domain."""


class StructureMismatch(GarsideError, ValueError):
    """Two elements over different Garside structures were combined."""


class ResourceError(GarsideError, RuntimeError):
    """A configured size cap was exceeded."""


class VerificationError(GarsideError, AssertionError):
    """An exact self-check failed; this always indicates a bug."""
