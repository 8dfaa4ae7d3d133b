from .codes import ERROR_DETAILS, ErrorCode, get_error_details
from .handlers import format_error_response, handle_error

__all__ = ['ERROR_DETAILS', 'ErrorCode', 'get_error_details', 'format_error_response', 'handle_error']
