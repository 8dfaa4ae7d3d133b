from .config import Settings, get_settings
from .logging import configure_logging, get_logger
from .cache import CacheBackend, CachedComputation
from .errors import ErrorCode

# Import exceptions at the end to avoid circular imports
from . import exceptions

__all__ = [
    'Settings', 'get_settings',
    'configure_logging', 'get_logger',
    'CacheBackend', 'CachedComputation',
    'ErrorCode',
    'exceptions'
]
