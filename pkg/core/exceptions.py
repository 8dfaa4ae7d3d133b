# wheelhouse/core/exceptions.py
"""
Custom exceptions for the engine.

Every failure the CLI can report derives from WheelhouseError, which carries
the process exit code and a stable error code.
"""
from typing import Any, Dict, Optional


class WheelhouseError(Exception):
    """Base class for engine errors."""

    exit_code = 2
    message = "An unknown error occurred"

    @property
    def error_code(self):
        # Import ErrorCode dynamically to avoid circular imports
        from core.errors.codes import ErrorCode
        return getattr(self, "_error_code", None) or ErrorCode.INTERNAL_ERROR

    @error_code.setter
    def error_code(self, value) -> None:
        self._error_code = value

    def __init__(
        self,
        message: Optional[str] = None,
        exit_code: Optional[int] = None,
        error_code: Optional[str] = None,
        **context: Any,
    ):
        """
        Initialize engine error.

        Args:
            message: Error message
            exit_code: Process exit code for the CLI
            error_code: Error code from core.errors.codes
            **context: Extra fields reported alongside the message
        """
        if message:
            self.message = message
        if exit_code is not None:
            self.exit_code = exit_code
        if error_code:
            self.error_code = error_code
        self.context = context
        super().__init__(self.message)

    def to_dict(self) -> Dict[str, Any]:
        """
        Convert error to a dictionary for reports.

        Returns:
            Dictionary representation of error
        """
        code = self.error_code
        return {
            "error": self.message,
            "code": getattr(code, "value", code),
            "context": {k: _plain(v) for k, v in sorted(self.context.items())},
        }


def _plain(value: Any) -> Any:
    if isinstance(value, (list, tuple)):
        return [_plain(v) for v in value]
    if isinstance(value, (str, int, float, bool)) or value is None:
        return value
    return str(value)


# ---- Configuration Errors -----

class ConfigurationError(WheelhouseError):
    """Error for an invalid run configuration."""

    exit_code = 1
    message = "Invalid configuration"

    @property
    def error_code(self):
        from core.errors.codes import ErrorCode
        return ErrorCode.INVALID_CONFIG


class TruncationExceededError(WheelhouseError):
    """A component outside the truncation was requested."""

    exit_code = 1
    message = "Truncation exceeded"

    @property
    def error_code(self):
        from core.errors.codes import ErrorCode
        return ErrorCode.TRUNCATION_EXCEEDED


# ---- Operad Errors -----

class InvalidOperadError(WheelhouseError):
    """Unknown operad name or invalid structure constants."""

    exit_code = 1
    message = "Invalid operad"

    @property
    def error_code(self):
        from core.errors.codes import ErrorCode
        return ErrorCode.INVALID_OPERAD


class OperadAxiomError(InvalidOperadError):
    """Associativity, unit or equivariance fails on some basis triple."""

    message = "Operad axioms violated"

    @property
    def error_code(self):
        from core.errors.codes import ErrorCode
        return ErrorCode.AXIOM_FAILURE


class NonPositiveWeightError(InvalidOperadError):
    """The augmentation ideal has a basis element of weight zero."""

    message = "Augmentation ideal must have strictly positive weight"

    @property
    def error_code(self):
        from core.errors.codes import ErrorCode
        return ErrorCode.NONPOSITIVE_WEIGHT


class TraceAxiomError(WheelhouseError):
    """The trace map of a wheeled operad violates its axioms."""

    exit_code = 2
    message = "Trace axioms violated"

    @property
    def error_code(self):
        from core.errors.codes import ErrorCode
        return ErrorCode.TRACE_AXIOM_FAILURE


# ---- Chain Complex Errors -----

class ChainComplexError(WheelhouseError):
    """d∘d is nonzero on some block."""

    exit_code = 2
    message = "Differential does not square to zero"

    @property
    def error_code(self):
        from core.errors.codes import ErrorCode
        return ErrorCode.D_SQUARED_NONZERO


class EquivarianceError(WheelhouseError):
    """An action or idempotent fails to commute with a differential."""

    exit_code = 2
    message = "Action does not commute with the differential"

    @property
    def error_code(self):
        from core.errors.codes import ErrorCode
        return ErrorCode.ACTION_NOT_EQUIVARIANT


class RankDisagreementError(WheelhouseError):
    """Exact rank disagrees with an oracle."""

    exit_code = 2
    message = "Rank cross-check failed"

    @property
    def error_code(self):
        from core.errors.codes import ErrorCode
        return ErrorCode.RANK_DISAGREEMENT


# ---- Stability Errors -----

class StableRangeMismatchError(WheelhouseError):
    """Left and right sides differ on a block inside the stable range."""

    exit_code = 2
    message = "Stable-range comparison failed"

    @property
    def error_code(self):
        from core.errors.codes import ErrorCode
        return ErrorCode.STABLE_RANGE_MISMATCH


# ---- Cache Errors -----

class CacheError(WheelhouseError):
    """Cache read or write failed; callers log and bypass."""

    exit_code = 0
    message = "Cache unavailable"

    @property
    def error_code(self):
        from core.errors.codes import ErrorCode
        return ErrorCode.CACHE_UNAVAILABLE
