# core/errors/codes.py
"""
Error code definitions for wheelhouse.

This module defines error codes, messages, and associated process exit codes
to ensure consistent error reporting throughout the engine.
"""

from enum import Enum
from typing import Any, Dict

EXIT_OK = 0
EXIT_INVALID_CONFIG = 1
EXIT_CHECK_FAILED = 2


class ErrorCode(str, Enum):
    """Error codes for wheelhouse."""

    # Configuration errors (1000-1999)
    INVALID_CONFIG = "CFG_1001"
    INVALID_TRUNCATION = "CFG_1002"
    TRUNCATION_EXCEEDED = "CFG_1003"

    # Operad errors (2000-2999)
    INVALID_OPERAD = "OPD_2001"
    AXIOM_FAILURE = "OPD_2002"
    TRACE_AXIOM_FAILURE = "OPD_2003"
    NONPOSITIVE_WEIGHT = "OPD_2004"

    # Chain complex errors (3000-3999)
    D_SQUARED_NONZERO = "CPLX_3001"
    ACTION_NOT_EQUIVARIANT = "CPLX_3002"
    RANK_DISAGREEMENT = "CPLX_3003"

    # Stability checks (4000-4999)
    STABLE_RANGE_MISMATCH = "STAB_4001"

    # Cache errors (5000-5999)
    CACHE_UNAVAILABLE = "CACHE_5001"

    # Internal errors (9000-9999)
    INTERNAL_ERROR = "SRV_9001"


# Error details mapping
ERROR_DETAILS: Dict[ErrorCode, Dict[str, Any]] = {
    ErrorCode.INVALID_CONFIG: {
        "message": "Invalid run configuration",
        "exit_code": EXIT_INVALID_CONFIG,
    },
    ErrorCode.INVALID_TRUNCATION: {
        "message": "Truncation bounds must be positive",
        "exit_code": EXIT_INVALID_CONFIG,
    },
    ErrorCode.TRUNCATION_EXCEEDED: {
        "message": "Requested component lies outside the truncation",
        "exit_code": EXIT_INVALID_CONFIG,
    },
    ErrorCode.INVALID_OPERAD: {
        "message": "Unknown operad or malformed operad data",
        "exit_code": EXIT_INVALID_CONFIG,
    },
    ErrorCode.AXIOM_FAILURE: {
        "message": "Structure constants violate an operad axiom",
        "exit_code": EXIT_INVALID_CONFIG,
    },
    ErrorCode.TRACE_AXIOM_FAILURE: {
        "message": "Trace map is not a module map or does not kill commutators",
        "exit_code": EXIT_CHECK_FAILED,
    },
    ErrorCode.NONPOSITIVE_WEIGHT: {
        "message": "Augmentation ideal must sit in strictly positive weight",
        "exit_code": EXIT_INVALID_CONFIG,
    },
    ErrorCode.D_SQUARED_NONZERO: {
        "message": "Composite of consecutive differentials is nonzero",
        "exit_code": EXIT_CHECK_FAILED,
    },
    ErrorCode.ACTION_NOT_EQUIVARIANT: {
        "message": "Group action does not commute with the differential",
        "exit_code": EXIT_CHECK_FAILED,
    },
    ErrorCode.RANK_DISAGREEMENT: {
        "message": "Exact rank disagrees with a cross-check",
        "exit_code": EXIT_CHECK_FAILED,
    },
    ErrorCode.STABLE_RANGE_MISMATCH: {
        "message": "Stable comparison failed inside the stable range",
        "exit_code": EXIT_CHECK_FAILED,
    },
    ErrorCode.CACHE_UNAVAILABLE: {
        "message": "Cache backend is unavailable",
        "exit_code": EXIT_OK,
    },
    ErrorCode.INTERNAL_ERROR: {
        "message": "Internal error",
        "exit_code": EXIT_CHECK_FAILED,
    },
}


def get_error_details(code: ErrorCode) -> Dict[str, Any]:
    """Look up the message and exit code registered for an error code."""
    return ERROR_DETAILS.get(code, ERROR_DETAILS[ErrorCode.INTERNAL_ERROR])
