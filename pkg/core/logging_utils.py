"""
core/logging_utils.py
Logger setup shared by the CLI and the scripts.

Library modules only call logging.getLogger(__name__); handlers are
attached here, once, by whatever front end is running.
"""

from __future__ import annotations

import logging
import sys
from typing import IO, Optional, Union

LOG_FORMAT = "%(levelname)s %(name)s: %(message)s"
PACKAGE_LOGGERS = ("core", "lang", "cli", "scripts")

_HANDLER_NAME = "sigma-diagnostics"


def setup_logging(level: Union[int, str] = "WARNING", stream: Optional[IO[str]] = None) -> None:
    """Route the package loggers to `stream` (stderr by default), replacing an earlier handler."""
    handler = logging.StreamHandler(stream or sys.stderr)
    handler.set_name(_HANDLER_NAME)
    handler.setFormatter(logging.Formatter(LOG_FORMAT))
    for name in PACKAGE_LOGGERS:
        logger = logging.getLogger(name)
        for old in [h for h in logger.handlers if h.get_name() == _HANDLER_NAME]:
            logger.removeHandler(old)
        logger.addHandler(handler)
        logger.setLevel(level)
