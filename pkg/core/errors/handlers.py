# core/errors/handlers.py
"""
Error handlers for the command-line front end.

Every failure is logged, written to stderr as a JSON error body and
turned into a process exit code; stdout stays reserved for reports.
"""
import json
import sys
import traceback
from typing import Any, Dict, Optional, TextIO

from pydantic import ValidationError

from ..exceptions import WheelhouseError
from ..logging import get_logger
from .codes import EXIT_CHECK_FAILED, EXIT_INVALID_CONFIG, ErrorCode, get_error_details

logger = get_logger(__name__)


def format_error_response(
    error_code: ErrorCode,
    message: Optional[str] = None,
    details: Optional[Dict[str, Any]] = None,
    exception: Optional[BaseException] = None,
    debug: bool = False,
) -> Dict[str, Any]:
    """
    Format an error body.

    Args:
        error_code: The error code enum value
        message: Optional custom message (overrides the default for the code)
        details: Optional context such as the offending block
        exception: Optional exception that caused the error
        debug: Include the traceback
    """
    info = get_error_details(error_code)
    body: Dict[str, Any] = {
        "error": message or info["message"],
        "code": error_code.value,
    }
    if details:
        body["details"] = details
    if debug and exception is not None:
        body["traceback"] = "".join(traceback.format_exception(type(exception), exception, exception.__traceback__))
    return body


def _emit(body: Dict[str, Any], stream: Optional[TextIO]) -> None:
    stream = stream or sys.stderr
    stream.write(json.dumps(body, sort_keys=True) + "\n")


def handle_engine_error(
    error: WheelhouseError, stream: Optional[TextIO] = None, debug: bool = False
) -> int:
    """Report a WheelhouseError; returns its exit code."""
    logger.error(
        "engine_error",
        error_type=error.__class__.__name__,
        message=error.message,
        exit_code=error.exit_code,
    )
    data = error.to_dict()
    body = format_error_response(
        error.error_code,
        message=data["error"],
        details=data["context"],
        exception=error,
        debug=debug,
    )
    _emit(body, stream)
    return error.exit_code


def handle_validation_error(
    error: ValidationError, stream: Optional[TextIO] = None, debug: bool = False
) -> int:
    """Pydantic validation of a run configuration failed."""
    logger.warning("validation_error", error=str(error))
    details = {
        "validation_errors": [
            {"loc": [str(x) for x in e["loc"]], "msg": e["msg"]} for e in error.errors()
        ]
    }
    body = format_error_response(
        ErrorCode.INVALID_CONFIG, message="Invalid run configuration",
        details=details, exception=error, debug=debug,
    )
    _emit(body, stream)
    return EXIT_INVALID_CONFIG


def handle_generic_error(
    error: Exception, stream: Optional[TextIO] = None, debug: bool = False
) -> int:
    logger.error(
        "unhandled_error",
        error_type=error.__class__.__name__,
        message=str(error),
        traceback=traceback.format_exc(),
    )
    body = format_error_response(
        ErrorCode.INTERNAL_ERROR, message=str(error) or None, exception=error, debug=debug
    )
    _emit(body, stream)
    return EXIT_CHECK_FAILED


def handle_error(error: Exception, stream: Optional[TextIO] = None, debug: bool = False) -> int:
    """Dispatch an exception to its handler and return the exit code."""
    if isinstance(error, WheelhouseError):
        return handle_engine_error(error, stream, debug)
    if isinstance(error, ValidationError):
        return handle_validation_error(error, stream, debug)
    return handle_generic_error(error, stream, debug)
