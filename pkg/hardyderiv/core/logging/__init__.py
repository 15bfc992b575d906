"""
Logging Module

Structured logging for the toolkit.
"""

from .logger import HardyDerivLogger, LogLevel, LogEntry, LogHandler, get_logger, configure_root_logger
from .handlers import ConsoleHandler, FileHandler, StructuredHandler, MemoryHandler
from .formatters import JSONFormatter, StandardFormatter, ColoredFormatter

__all__ = [
    "HardyDerivLogger",
    "LogLevel",
    "LogEntry",
    "LogHandler",
    "get_logger",
    "configure_root_logger",
    "ConsoleHandler",
    "FileHandler",
    "StructuredHandler",
    "MemoryHandler",
    "JSONFormatter",
    "StandardFormatter",
    "ColoredFormatter",
]
