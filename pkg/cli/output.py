# cli/output.py
"""Writing rendered reports to stdout, --out files and the reports directory."""
import os
import re
import sys
import tempfile
from typing import Optional, TextIO

from core.logging import get_logger
from stability.report import ComparisonReport, OutputFormat, Report, render, render_json

logger = get_logger(__name__)


def _write_file(path: str, text: str) -> None:
    """Write via a temporary file in the same directory, then rename."""
    directory = os.path.dirname(os.path.abspath(path))
    os.makedirs(directory, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".wheelhouse-", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="") as f:
            f.write(text)
        os.replace(tmp, path)
    except OSError:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def emit(report: Report, fmt: OutputFormat, out: Optional[str] = None, stream: Optional[TextIO] = None) -> str:
    """Render the report and send it to --out or stdout."""
    text = render(report, fmt)
    if out:
        _write_file(out, text)
        logger.info("report_written", path=out, format=OutputFormat(fmt).value)
    else:
        (stream or sys.stdout).write(text)
    return text


def report_filename(report: ComparisonReport) -> str:
    """reports/<theorem>_<operad>.json with the operad made file-safe."""
    operad = re.sub(r"[^A-Za-z0-9]+", "_", report.operad).strip("_").lower()
    return f"{report.theorem.value}_{operad}.json"


def save_comparison(report: ComparisonReport, reports_dir: str) -> str:
    path = os.path.join(reports_dir, report_filename(report))
    _write_file(path, render_json(report))
    logger.info("comparison_saved", path=path)
    return path
