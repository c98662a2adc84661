"""Logging configuration for CLI environments."""

import logging
import sys

from proper_rationals.config import use_color

_LEVEL_COLORS = {
    logging.DEBUG: "\033[36m",
    logging.INFO: "\033[32m",
    logging.WARNING: "\033[33m",
    logging.ERROR: "\033[31m",
    logging.CRITICAL: "\033[1;31m",
}
_RESET = "\033[0m"


class _ColorFormatter(logging.Formatter):
    def format(self, record: logging.LogRecord) -> str:
        color = _LEVEL_COLORS.get(record.levelno, "")
        return f"{color}{record.levelname}{_RESET}: {record.getMessage()}"


def setup_logging(level: int = logging.INFO) -> None:
    """
    Configure root logger for CLI output.

    Uses human-readable format. All log output goes to stderr, so stdout
    carries only reports. Level names are coloured on a terminal unless
    NO_COLOR is set.

    This function is idempotent and safe to call multiple times.
    """
    root_logger = logging.getLogger()

    # Skip if already configured
    if root_logger.handlers:
        return

    root_logger.setLevel(level)

    handler = logging.StreamHandler(sys.stderr)
    formatter: logging.Formatter = (
        _ColorFormatter() if use_color() else logging.Formatter("%(levelname)s: %(message)s")
    )
    handler.setFormatter(formatter)

    root_logger.addHandler(handler)
