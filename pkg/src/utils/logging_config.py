import logging
import os
import sys
from logging.handlers import RotatingFileHandler
from pathlib import Path

from src.utils.env import project_root

LOG_FORMAT = "%(asctime)s [%(levelname)s] %(name)s: %(message)s"
LOG_FILE = "mwis.log"
MAX_BYTES = 2 * 1024 * 1024
BACKUPS = 3


def log_dir() -> Path:
    configured = os.getenv("MWIS_LOG_DIR")
    return Path(configured) if configured else project_root() / "logs"


def console_level() -> int:
    """MWIS_LOG_LEVEL (a level name such as DEBUG or WARNING), INFO when unset or unknown."""
    level = logging.getLevelName(os.getenv("MWIS_LOG_LEVEL", "INFO").upper())
    return level if isinstance(level, int) else logging.INFO


def get_logger(name: str) -> logging.Logger:
    """Attach the solver log handlers to ``name`` once and return the logger.

    Everything at DEBUG goes to <log dir>/mwis.log (rotating); the console
    handler writes to stderr so stdout stays free for JSON and tables.
    """
    logger = logging.getLogger(name)
    if logger.handlers:
        return logger
    logger.setLevel(logging.DEBUG)
    logger.propagate = False

    directory = log_dir()
    directory.mkdir(parents=True, exist_ok=True)
    formatter = logging.Formatter(fmt=LOG_FORMAT)

    to_file = RotatingFileHandler(
        filename=str(directory / LOG_FILE), maxBytes=MAX_BYTES, backupCount=BACKUPS, encoding="utf-8"
    )
    to_file.setLevel(logging.DEBUG)
    to_console = logging.StreamHandler(stream=sys.stderr)
    to_console.setLevel(console_level())

    for handler in (to_file, to_console):
        handler.setFormatter(formatter)
        logger.addHandler(handler)
    return logger


def detach_handlers(name: str) -> None:
    """Close and drop the handlers get_logger attached; the logger propagates again."""
    logger = logging.getLogger(name)
    for handler in list(logger.handlers):
        logger.removeHandler(handler)
        handler.close()
    logger.propagate = True
