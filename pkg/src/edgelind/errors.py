"""Exception hierarchy shared by the library and the command line."""


class EdgelindError(Exception):
    """Base class for all errors raised by edgelind."""


class InputError(EdgelindError, ValueError):
    """Malformed or out-of-range input (bad vertex, parse failure, ambient mismatch)."""

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class DomainError(EdgelindError, ValueError):
    """Input outside the scope of the theorem or operation (e.g. d(G) of an edgeless graph)."""


class PreconditionError(EdgelindError, ValueError):
    """A documented precondition does not hold (e.g. a non-minimal complex)."""


class ResourceError(EdgelindError, RuntimeError):
    """The computation exceeds a configured resource cap."""


class InternalError(EdgelindError, AssertionError):
    """Two independent computations disagree, or a structural invariant broke."""
