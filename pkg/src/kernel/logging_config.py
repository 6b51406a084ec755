# src/kernel/logging_config.py
from __future__ import annotations
import logging
import sys

from .config import LOG_FORMAT

ROOT_LOGGER = "wallcross"


def get_logger(name: str) -> logging.Logger:
    """Child of the package root so one `setup_logging` call controls everything."""
    if name.startswith("src."):
        name = name[len("src."):]
    return logging.getLogger(f"{ROOT_LOGGER}.{name}")


def setup_logging(verbosity: int = 0) -> logging.Logger:
    level = logging.WARNING
    if verbosity == 1:
        level = logging.INFO
    elif verbosity >= 2:
        level = logging.DEBUG

    root = logging.getLogger(ROOT_LOGGER)
    root.setLevel(level)
    if not root.handlers:
        handler = logging.StreamHandler(sys.stderr)
        handler.setFormatter(logging.Formatter(LOG_FORMAT))
        root.addHandler(handler)
    root.propagate = False
    return root
