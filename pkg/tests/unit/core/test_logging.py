# tests/unit/core/test_logging.py
"""
Tests for logging configuration.
"""
import json
import logging

from core.config import LogFormat, Settings
from core.logging import configure_logging, get_logger


def test_level_from_settings(settings):
    configure_logging(settings)
    assert logging.getLogger().level == logging.WARNING

    configure_logging(settings.model_copy(update={"debug": True}))
    assert logging.getLogger().level == logging.DEBUG

    configure_logging(settings)


def test_debug_events_filtered_at_warning(capsys):
    configure_logging(Settings(_env_file=None, log_level="WARNING"))
    logger = get_logger("tests.logging")
    logger.debug("quiet_event")
    logger.warning("loud_event", n=3)

    err = capsys.readouterr().err
    assert "quiet_event" not in err
    assert "loud_event" in err


def test_json_renderer(capsys):
    configure_logging(Settings(_env_file=None, log_format=LogFormat.JSON), log_level=logging.INFO)
    get_logger("tests.logging").info("json_event", arity=4)

    line = capsys.readouterr().err.strip().splitlines()[-1]
    record = json.loads(line)
    assert record["event"] == "json_event"
    assert record["arity"] == 4

    configure_logging(Settings(_env_file=None))
