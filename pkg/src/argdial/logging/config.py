"""
Structured logging configuration using loguru
"""

import sys
from pathlib import Path
from typing import Any

from loguru import logger


class LoggingConfig:
    """Centralized logging configuration using loguru"""

    @staticmethod
    def configure(
        component: str = "argdial",
        log_level: str = "WARNING",
        log_dir: str | None = None,
        structured: bool = False,
        enable_console: bool = True,
        rotation: str = "10 MB",
        retention: str = "1 week",
    ) -> None:
        """
        Configure logging for the library or the command line

        Args:
            component: Name bound into every record's extra
            log_level: Logging level (DEBUG, INFO, WARNING, ERROR, CRITICAL)
            log_dir: Directory for a log file; no file sink when omitted
            structured: Whether to serialize records as JSON
            enable_console: Whether to log to stderr
            rotation: Log rotation policy for the file sink
            retention: Log retention policy for the file sink
        """
        logger.remove()

        console_format = (
            "<green>{time:YYYY-MM-DD HH:mm:ss.SSS}</green> | "
            "<level>{level: <8}</level> | "
            "<cyan>{name}</cyan>:<cyan>{function}</cyan>:<cyan>{line}</cyan> | "
            f"<magenta>{component}</magenta> | "
            "<level>{message}</level>"
        )
        file_format = (
            "{time:YYYY-MM-DD HH:mm:ss.SSS} | "
            "{level: <8} | "
            "{name}:{function}:{line} | "
            f"{component} | "
            "{message}"
        )

        # stdout carries report bodies; logs only ever go to stderr
        if enable_console:
            logger.add(
                sys.stderr,
                format=console_format,
                level=log_level,
                colorize=not structured,
                serialize=structured,
            )

        if log_dir is not None:
            log_path = Path(log_dir)
            log_path.mkdir(parents=True, exist_ok=True)
            logger.add(
                log_path / f"{component}.log",
                format=file_format,
                level=log_level,
                rotation=rotation,
                retention=retention,
                serialize=structured,
            )

        logger.configure(extra={"component": component})

        logger.debug(
            f"Logging configured for '{component}'",
            log_level=log_level,
            structured=structured,
        )


class ContextualLogger:
    """Logger carrying argumentation context (scheme, argument, dialogue)"""

    def __init__(self, component: str, context: dict[str, Any] | None = None):
        self.component = component
        self.context = context or {}
        self._logger = logger.bind(component=component, **self.context)

    def with_context(self, **kwargs) -> "ContextualLogger":
        """Create a new logger with additional context"""
        new_context = {**self.context, **kwargs}
        return ContextualLogger(self.component, new_context)

    def debug(self, message: str, **kwargs) -> None:
        self._logger.bind(**kwargs).debug(message)

    def info(self, message: str, **kwargs) -> None:
        self._logger.bind(**kwargs).info(message)

    def warning(self, message: str, **kwargs) -> None:
        self._logger.bind(**kwargs).warning(message)

    def error(self, message: str, **kwargs) -> None:
        self._logger.bind(**kwargs).error(message)

    def exception(self, message: str, **kwargs) -> None:
        """Log exception with traceback and context"""
        self._logger.bind(**kwargs).exception(message)


def get_logger(component: str, **context) -> ContextualLogger:
    """Get a contextual logger for a package component"""
    return ContextualLogger(component, context)
