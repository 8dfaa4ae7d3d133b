# wheelhouse/core/logging.py
"""
Logging Configuration Module

This module configures logging for the engine using structlog
for structured logging with consistent formatting.

Log lines go to stderr: stdout is reserved for reports.
"""
import logging
import sys
from typing import Optional

import structlog

from .config import LogFormat, Settings


def configure_logging(
    settings: Optional[Settings] = None, log_level: Optional[int] = None
) -> None:
    """
    Configure structured logging.

    Args:
        settings: Engine settings (renderer and default level)
        log_level: Optional explicit level (logging.INFO, logging.DEBUG, ...)
    """
    processors = [
        structlog.stdlib.add_log_level,
        structlog.stdlib.add_logger_name,
        structlog.processors.TimeStamper(fmt="iso"),
        structlog.stdlib.PositionalArgumentsFormatter(),
        structlog.processors.StackInfoRenderer(),
        structlog.processors.format_exc_info,
        structlog.processors.UnicodeDecoder(),
    ]

    is_debug = bool(settings and settings.debug)
    if settings and settings.log_format == LogFormat.JSON:
        processors.append(structlog.processors.JSONRenderer(sort_keys=True))
    else:
        processors.append(structlog.dev.ConsoleRenderer(colors=False, sort_keys=False))

    structlog.configure(
        processors=processors,
        context_class=dict,
        logger_factory=structlog.stdlib.LoggerFactory(),
        wrapper_class=structlog.stdlib.BoundLogger,
        cache_logger_on_first_use=True,
    )

    if log_level is None:
        if is_debug:
            log_level = logging.DEBUG
        elif settings:
            log_level = logging.getLevelName(settings.log_level)
        else:
            log_level = logging.WARNING

    logging.basicConfig(
        format="%(message)s",
        level=log_level,
        stream=sys.stderr,
        force=True,
    )


def get_logger(name: str) -> structlog.stdlib.BoundLogger:
    """
    Get a logger with the given name.

    Args:
        name: Logger name, typically __name__

    Returns:
        Configured structlog logger
    """
    return structlog.get_logger(name)
