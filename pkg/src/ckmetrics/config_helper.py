"""
Configuration helper for ckmetrics.

Resolves the environment-driven settings. A ``.env`` file in the working
directory is honoured, the process environment wins over it, and the
configured default applies when neither sets a value.
"""

import os
from typing import Optional, TextIO

from dotenv import load_dotenv

from .config import DEFAULT_CONFIG
from .errors import ConfigError

COLOR_ENV_VAR = "CKM_COLOR"
COLOR_MODES = ("auto", "always", "never")


def get_color_mode(environ: Optional[dict] = None) -> str:
    """
    Read the table colour mode.

    Priority:
    1. ``CKM_COLOR`` in ``environ`` (the process environment by default)
    2. ``CKM_COLOR`` from a ``.env`` file
    3. ``DEFAULT_CONFIG.report.color``

    Raises:
        ConfigError: the variable holds something other than auto/always/never.
    """
    if environ is None:
        load_dotenv(override=False)
        environ = os.environ

    mode = environ.get(COLOR_ENV_VAR, "").strip().lower() or DEFAULT_CONFIG.report.color
    if mode not in COLOR_MODES:
        raise ConfigError(f"{COLOR_ENV_VAR} must be one of {', '.join(COLOR_MODES)}, got '{mode}'")
    return mode


def use_color(stream: TextIO, environ: Optional[dict] = None) -> bool:
    """Whether table output written to ``stream`` should carry colour."""
    mode = get_color_mode(environ)
    if mode == "always":
        return True
    if mode == "never":
        return False
    try:
        return stream.isatty()
    except (AttributeError, ValueError):
        return False
