"""
Logging setup: records go to stderr through rich so stdout stays parseable.
"""

import logging
import os
from typing import Optional, Union

from rich.console import Console
from rich.logging import RichHandler

_ROOT = "torus_tqft"
_configured = False


def configure_logging(level: Optional[Union[str, int]] = None) -> logging.Logger:
    """Attach a RichHandler to the package logger.

    Args:
        level: Logging level name or number. Defaults to ``TORUS_TQFT_LOG_LEVEL`` or WARNING.

    Returns:
        The package root logger.
    """
    global _configured
    if level is None:
        level = os.getenv("TORUS_TQFT_LOG_LEVEL", "WARNING")
    if isinstance(level, str):
        level = logging.getLevelName(level.upper())
        if not isinstance(level, int):
            level = logging.WARNING

    logger = logging.getLogger(_ROOT)
    if not _configured:
        handler = RichHandler(
            console=Console(stderr=True),
            show_path=False,
            rich_tracebacks=True,
            markup=False,
        )
        handler.setFormatter(logging.Formatter("%(name)s: %(message)s"))
        logger.addHandler(handler)
        logger.propagate = False
        _configured = True
    logger.setLevel(level)
    return logger


def get_logger(name: str) -> logging.Logger:
    """Child logger under the package namespace."""
    if name.startswith(_ROOT):
        return logging.getLogger(name)
    return logging.getLogger(f"{_ROOT}.{name}")
