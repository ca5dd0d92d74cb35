"""Exception types shared across the package."""


class ResolverLabError(Exception):
    """Base class for all errors raised by resolver-lab."""


class IdealSyntaxError(ResolverLabError):
    """Malformed ideal or monomial text."""

    def __init__(self, message, line=None, col=None):
        self.line = line
        self.col = col
        if line is not None:
            message = f"line {line}, col {col}: {message}"
        super().__init__(message)


class CapExceededError(ResolverLabError):
    """A combinatorial cap (generator count, scan degree) was exceeded."""


class NotStableError(ResolverLabError):
    """Operation requires a stable ideal."""


class UnsupportedCharacteristicError(ResolverLabError):
    """Requested field characteristic is not supported by this operation."""


class GinNotConfidentError(ResolverLabError):
    """Generic initial ideal trials did not reach a confident result."""

    def __init__(self, message, result=None):
        self.result = result
        super().__init__(message)


class InvariantViolation(ResolverLabError):
    """A mathematically impossible state was reached; indicates a bug."""
