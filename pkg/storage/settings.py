"""
Configuration lookup for the laboratory.

Values are read from Streamlit secrets when the web front end is running,
then from environment variables (a local .env file is loaded first).
"""
import os
import logging
from typing import Optional

from dotenv import load_dotenv

try:
    import streamlit as st
    HAS_STREAMLIT = True
except ImportError:
    HAS_STREAMLIT = False

logger = logging.getLogger(__name__)

DEFAULT_FLOAT_PRECISION = 53
MIN_FLOAT_PRECISION = 24
MAX_FLOAT_PRECISION = 4096
DEFAULT_EXACT_LIMIT = 5000
DEFAULT_LOG_LEVEL = "WARNING"

load_dotenv()


def _lookup(name: str) -> Optional[str]:
    """
    Read a setting from Streamlit secrets or the environment.

    Args:
        name: Setting name (e.g., "INVERSIO_FLOAT_PRECISION")

    Returns:
        Raw string value, or None if the setting is not configured
    """
    if HAS_STREAMLIT:
        try:
            if hasattr(st, 'secrets') and st.secrets:
                value = st.secrets.get(name)
                if value is not None:
                    return str(value)
        except (AttributeError, KeyError, TypeError, FileNotFoundError):
            # No secrets.toml outside the web app
            pass

    return os.getenv(name)


def _lookup_int(name: str, default: int, low: int, high: int) -> int:
    raw = _lookup(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        value = int(raw)
    except ValueError:
        logger.warning("Ignoring %s=%r: not an integer, using %d", name, raw, default)
        return default
    if not low <= value <= high:
        logger.warning("Ignoring %s=%d: outside [%d, %d], using %d", name, value, low, high, default)
        return default
    return value


def get_float_precision() -> int:
    """
    Get the default binary precision for Float mode.

    Returns:
        Precision in bits (53 unless INVERSIO_FLOAT_PRECISION overrides it)
    """
    return _lookup_int(
        "INVERSIO_FLOAT_PRECISION",
        DEFAULT_FLOAT_PRECISION,
        MIN_FLOAT_PRECISION,
        MAX_FLOAT_PRECISION,
    )


def get_exact_limit() -> int:
    """Largest trial count the sample-size search evaluates in Exact mode"""
    return _lookup_int("INVERSIO_EXACT_LIMIT", DEFAULT_EXACT_LIMIT, 1, 10**6)


def get_log_level() -> str:
    """Logging level name for the command-line front end"""
    level = (_lookup("INVERSIO_LOG_LEVEL") or DEFAULT_LOG_LEVEL).upper()
    if level not in ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"):
        logger.warning("Ignoring INVERSIO_LOG_LEVEL=%r, using %s", level, DEFAULT_LOG_LEVEL)
        return DEFAULT_LOG_LEVEL
    return level
