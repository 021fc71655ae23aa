"""
Logging configuration module.

Sets up application-wide logging with configurable log level.
Suppresses verbose plotting library logs to reduce noise.
"""

import logging
import os

# LogRecord attributes that are never treated as structured extras
_STANDARD_ATTRS = frozenset(vars(logging.LogRecord("", 0, "", 0, "", None, None))) | {"message", "asctime", "taskName"}


class CustomFormatter(logging.Formatter):
    """
    Log formatter that appends ``extra`` fields as key="value" pairs.
    """

    def format(self, record: logging.LogRecord) -> str:
        """
        Format the log record including extra fields.

        Args:
            record: Log record to format.

        Returns:
            Formatted log message with extra fields appended.
        """
        base_message = super().format(record)
        extra_fields = {key: value for key, value in record.__dict__.items() if key not in _STANDARD_ATTRS and not key.startswith("_")}
        if extra_fields:
            extra_str = " ".join(f'{k}="{_render(v)}"' for k, v in extra_fields.items())
            return f"{base_message}: {extra_str}"
        return base_message


def _render(value: object) -> str:
    if isinstance(value, float):
        return f"{value:.6g}"
    return str(value)


def configure_logging(level_name: str | None = None) -> None:
    """
    Configure application logging.

    Sets up:
    - Root logger with the given level, else LOG_LEVEL env var, else INFO
    - Timestamp, level, logger name, message and extra fields per line
    - WARNING level for matplotlib's internal loggers
    """
    resolved = (level_name or os.getenv("LOG_LEVEL", "INFO")).upper()
    level = getattr(logging, resolved, logging.INFO)

    root_logger = logging.getLogger()
    root_logger.setLevel(level)

    logging.getLogger("matplotlib").setLevel(logging.WARNING)

    # Remove existing handlers to avoid duplicates
    for handler in root_logger.handlers[:]:
        root_logger.removeHandler(handler)

    handler = logging.StreamHandler()
    handler.setLevel(level)
    handler.setFormatter(
        CustomFormatter(
            fmt="%(asctime)s %(levelname)s [%(name)s] %(message)s",
            datefmt="%Y-%m-%d %H:%M:%S",
        )
    )
    root_logger.addHandler(handler)
