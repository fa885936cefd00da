"""Exception types shared across the package."""


class MlsError(Exception):
    """Base class for all errors raised by mlscover."""


class UsageError(MlsError, ValueError):
    """Invalid arguments: out-of-range vertices, bad sizes, bad parameters."""


class NotPrimeError(UsageError):
    """A multigraph modulus that is not a prime number."""


class ResourceLimitError(MlsError):
    """An exhaustive computation was refused because the input is too large."""


class OracleAxiomError(MlsError):
    """A connectivity oracle behaved in a way no symmetric, linearly bounded,
    submodular function can."""


class GraphFormatError(MlsError):
    """Base class for input document problems."""


class ParseError(GraphFormatError):
    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class ValidationError(GraphFormatError):
    """Well-formed input describing an invalid graph (self-loops, duplicates, ...)."""


class UnsupportedFormatError(GraphFormatError):
    """The requested format cannot represent the given object."""
