# tests/unit/core/test_errors.py
"""
Tests for error handling functionality.
"""
import io
import json

import pytest
from pydantic import BaseModel, ValidationError

from core.errors import ErrorCode, format_error_response, get_error_details, handle_error
from core.errors.codes import EXIT_CHECK_FAILED, EXIT_INVALID_CONFIG
from core.exceptions import (
    CacheError,
    ChainComplexError,
    ConfigurationError,
    OperadAxiomError,
    StableRangeMismatchError,
    TruncationExceededError,
)


class _Strict(BaseModel):
    value: int


class TestErrorHandling:
    """Test suite for error handling."""

    @pytest.mark.parametrize(
        "error, code, exit_code",
        [
            (ConfigurationError("bad flag"), ErrorCode.INVALID_CONFIG, 1),
            (TruncationExceededError("arity 9"), ErrorCode.TRUNCATION_EXCEEDED, 1),
            (OperadAxiomError("not associative"), ErrorCode.AXIOM_FAILURE, 1),
            (ChainComplexError("d∘d", block=(2, 1, 1)), ErrorCode.D_SQUARED_NONZERO, 2),
            (StableRangeMismatchError("mismatch", w=1, d=1), ErrorCode.STABLE_RANGE_MISMATCH, 2),
            (CacheError("disk"), ErrorCode.CACHE_UNAVAILABLE, 0),
        ],
    )
    def test_engine_errors(self, error, code, exit_code):
        stream = io.StringIO()
        assert handle_error(error, stream) == exit_code
        body = json.loads(stream.getvalue())
        assert body["code"] == code.value
        assert body["error"] == error.message

    def test_context_reaches_details(self):
        stream = io.StringIO()
        handle_error(ChainComplexError("d∘d != 0", block=(3, 2, 1)), stream)
        body = json.loads(stream.getvalue())
        assert body["details"]["block"] == [3, 2, 1]

    def test_validation_error_is_configuration(self):
        with pytest.raises(ValidationError) as info:
            _Strict(value="x")
        stream = io.StringIO()
        assert handle_error(info.value, stream) == EXIT_INVALID_CONFIG
        body = json.loads(stream.getvalue())
        assert body["code"] == ErrorCode.INVALID_CONFIG.value
        assert body["details"]["validation_errors"][0]["loc"] == ["value"]

    def test_unexpected_error_is_internal(self):
        stream = io.StringIO()
        assert handle_error(RuntimeError("oops"), stream) == EXIT_CHECK_FAILED
        assert json.loads(stream.getvalue())["code"] == ErrorCode.INTERNAL_ERROR.value

    def test_debug_adds_traceback(self):
        try:
            raise ConfigurationError("bad")
        except ConfigurationError as e:
            body = format_error_response(ErrorCode.INVALID_CONFIG, exception=e, debug=True)
        assert "ConfigurationError" in body["traceback"]

    def test_default_message_from_table(self):
        body = format_error_response(ErrorCode.RANK_DISAGREEMENT)
        assert body["error"] == get_error_details(ErrorCode.RANK_DISAGREEMENT)["message"]
        assert "details" not in body
