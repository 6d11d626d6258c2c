"""Exception hierarchy shared by all modules.

The CLI maps these onto process exit codes: usage/configuration problems
exit 2, verification failures exit 1, numerical evaluation failures exit 3.
"""


class FockbridgeError(Exception):
    """Base class for all package errors."""


class ConfigurationError(FockbridgeError):
    """A request that can never succeed: bad sizes, ranges, or file contents."""


class EnvelopeError(ConfigurationError):
    """Input outside the validated numerical envelope (growth bound, |z| range, truncation cap)."""


class RepresentationUnavailableError(ConfigurationError):
    """The requested integral representation does not exist for these parameters."""


class EvaluationFailureError(FockbridgeError):
    """An integrand produced a non-finite value at a quadrature node."""

    def __init__(self, message: str, node_index: int | None = None, node=None):
        super().__init__(message)
        self.node_index = node_index
        self.node = node
