"""Logging utilities shared by the library and the CLI."""

import logging
import sys

LOG_FORMAT = "%(asctime)s [%(levelname)s] %(name)s: %(message)s"
DATE_FORMAT = "%Y-%m-%d %H:%M:%S"


def get_logger(name: str) -> logging.Logger:
    """Get a module logger under the package root logger."""
    return logging.getLogger(f"qpc.{name}")


def configure_logging(level: str = "WARNING") -> logging.Logger:
    """Attach a stderr handler to the package root logger.

    Calling it again only updates the level. Stdout stays reserved for
    command output.
    """
    root = logging.getLogger("qpc")
    root.setLevel(level.upper())

    if root.handlers:
        return root

    formatter = logging.Formatter(LOG_FORMAT, datefmt=DATE_FORMAT)

    console_handler = logging.StreamHandler(sys.stderr)
    console_handler.setFormatter(formatter)

    root.addHandler(console_handler)

    return root
