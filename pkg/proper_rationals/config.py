"""Configuration management for the application."""

import logging
import os
import sys
from pathlib import Path

from dotenv import load_dotenv

_DEFAULT_MAX_NUM = 30
_DEFAULT_MAX_DEN = 30
_DEFAULT_ROOT_BOUND = 20


def load_config() -> None:
    """Load environment variables from .env file if it exists."""
    env_file = Path.cwd() / ".env"
    if env_file.exists():
        load_dotenv(env_file)
    else:
        # Try loading from the package directory
        package_dir = Path(__file__).parent
        env_file = package_dir / ".env"
        if env_file.exists():
            load_dotenv(env_file)


def _get_int(name: str, default: int, minimum: int) -> int:
    raw = os.getenv(name)
    if raw is None or not raw.strip():
        return default
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"{name} must be an integer, got {raw!r}") from None
    if value < minimum:
        raise ValueError(f"{name} must be >= {minimum}, got {value}")
    return value


def get_default_box() -> tuple[int, int]:
    """Get the default search box from environment, with fallback to 30 x 30.

    Returns:
        Tuple of (max_abs_numerator, max_denominator)

    Raises:
        ValueError: If either variable is not an integer or is out of range
    """
    return (
        _get_int("PROPER_RATIONALS_MAX_NUM", _DEFAULT_MAX_NUM, minimum=1),
        _get_int("PROPER_RATIONALS_MAX_DEN", _DEFAULT_MAX_DEN, minimum=2),
    )


def get_search_bound() -> int:
    """Get the proper-root search bound used by the vieta command (default 20)."""
    return _get_int("PROPER_RATIONALS_ROOT_BOUND", _DEFAULT_ROOT_BOUND, minimum=2)


def get_log_level() -> int:
    """Get the log level from environment, defaulting to INFO.

    Raises:
        ValueError: If the level name is unknown
    """
    name = os.getenv("PROPER_RATIONALS_LOG_LEVEL", "INFO").strip().upper()
    level = logging.getLevelName(name)
    if not isinstance(level, int):
        raise ValueError(f"PROPER_RATIONALS_LOG_LEVEL is not a log level: {name!r}")
    return level


def use_color() -> bool:
    """Colour log output only on a terminal and only when NO_COLOR is unset."""
    if "NO_COLOR" in os.environ:
        return False
    return sys.stderr.isatty()
