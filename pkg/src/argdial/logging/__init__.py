"""
Logging utilities for argdial
"""

from .config import ContextualLogger, LoggingConfig, get_logger

__all__ = [
    "LoggingConfig",
    "ContextualLogger",
    "get_logger",
]
