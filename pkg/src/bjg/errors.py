"""Exception hierarchy shared by all modules.

The CLI maps these onto its exit-code contract, so new error paths should
reuse one of the classes below instead of raising bare ValueError.
"""


class BjgError(Exception):
    """Base class for all package errors."""


class DomainError(BjgError):
    """Input outside the mathematical domain of an operation (e.g. x = 0)."""


class ConfigurationError(BjgError):
    """Inconsistent configuration, e.g. weight/vector dimension mismatch."""


class PreconditionError(BjgError):
    """A theorem hypothesis or constructor precondition does not hold."""


class CapacityError(BjgError):
    """A finite-support vector would exceed the declared capacity bound."""


class DataError(BjgError):
    """Malformed or schema-violating instance data."""


class VerificationError(BjgError):
    """A constructed witness failed its numeric re-verification.

    Indicates a tolerance misconfiguration or an internal bug, never a
    property of the input.
    """
