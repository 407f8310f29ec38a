"""structlog configuration shared by the library and the CLI."""

import logging
import os
import sys
from typing import Any, Dict, Optional

import numpy as np
import structlog

_LEVELS = {
    "TRACE": logging.DEBUG,
    "DEBUG": logging.DEBUG,
    "INFO": logging.INFO,
    "WARN": logging.WARNING,
    "WARNING": logging.WARNING,
    "ERROR": logging.ERROR,
    "CRITICAL": logging.CRITICAL,
}


# Sequences longer than this are logged as a summary.
_MAX_ITEMS = 16


def summarize_bulky_values(_, __, event_dict: Dict[str, Any]) -> Dict[str, Any]:
    """Replace arrays and long sequences (weight tensors, assignments) by a summary."""
    for key, value in event_dict.items():
        if isinstance(value, np.ndarray):
            if value.size > _MAX_ITEMS:
                event_dict[key] = f"<ndarray shape={value.shape} dtype={value.dtype}>"
            else:
                event_dict[key] = value.tolist()
        elif isinstance(value, (list, tuple)) and len(value) > _MAX_ITEMS:
            event_dict[key] = f"<{type(value).__name__} len={len(value)}>"
    return event_dict


class _ConsoleRenderer:
    """Render events as single lines::

        2026-10-19T10:56:04.566715Z  INFO mapsolve.memetic.solver: generation done index=3 size=8

    Floats are shortened to 6 significant digits so solver traces stay readable.
    """

    _LEVEL_COLORS = {
        "DEBUG": "\033[34m",
        "INFO": "\033[32m",
        "WARN": "\033[33m",
        "ERROR": "\033[31m",
    }
    _RESET = "\033[0m"
    _BOLD = "\033[1m"
    _DIM = "\033[2m"

    def __init__(self, colors: bool = True):
        self._colors = colors

    @staticmethod
    def _fmt(value: Any) -> str:
        if isinstance(value, float):
            return f"{value:.6g}"
        return str(value)

    def __call__(self, _logger, _method_name, event_dict: Dict[str, Any]) -> str:
        ts = event_dict.pop("timestamp", "")
        level = event_dict.pop("level", "info").upper()
        if level == "WARNING":
            level = "WARN"
        event = event_dict.pop("event", "")
        target = event_dict.pop("_logger_name", "")

        if self._colors:
            color = self._LEVEL_COLORS.get(level, "")
            level_str = f"{color}{level:>5}{self._RESET}"
            target_str = f" {self._DIM}{target}{self._RESET}:" if target else ""
            kvs = " ".join(
                f"{self._BOLD}{k}{self._RESET}={self._fmt(v)}" for k, v in event_dict.items()
            )
        else:
            level_str = f"{level:>5}"
            target_str = f" {target}:" if target else ""
            kvs = " ".join(f"{k}={self._fmt(v)}" for k, v in event_dict.items())

        line = f"{ts} {level_str}{target_str} {event}"
        if kvs:
            line += " " + kvs
        return line


def configure_logging(level: Optional[str] = None, log_format: Optional[str] = None) -> None:
    """Configure structlog for mapsolve.

    Safe to call repeatedly; the CLI calls it again after parsing -v/-q.
    """
    structlog.reset_defaults()

    # argument > environment > default
    level_name = (level or os.environ.get("MAPSOLVE_LOG_LEVEL", "WARN")).upper()
    fmt = (log_format or os.environ.get("MAPSOLVE_LOG_FORMAT", "pretty")).lower()
    numeric_level = _LEVELS.get(level_name, logging.WARNING)

    processors = [
        structlog.contextvars.merge_contextvars,
        structlog.processors.add_log_level,
        structlog.processors.StackInfoRenderer(),
        structlog.dev.set_exc_info,
        structlog.processors.TimeStamper(fmt="iso"),
        summarize_bulky_values,
    ]

    if fmt == "json":
        processors.append(structlog.processors.JSONRenderer())
    else:
        processors.append(_ConsoleRenderer(colors=sys.stderr.isatty()))

    structlog.configure(
        processors=processors,
        context_class=dict,
        logger_factory=structlog.PrintLoggerFactory(file=sys.stderr),
        wrapper_class=structlog.make_filtering_bound_logger(numeric_level),
        cache_logger_on_first_use=True,
    )


def get_logger(name: Optional[str] = None):
    """Get a lazy structlog logger bound to *name* for the console renderer.

    The proxy resolves the configuration on its first log call, so module
    level loggers pick up the levels the CLI sets after import.
    """
    if name:
        return structlog.get_logger(_logger_name=name)
    return structlog.get_logger()
