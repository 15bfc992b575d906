"""
Centralized Logging Configuration

Sets up logging from the central configuration: console output on stderr,
and optional rotating text and JSON-lines files.
"""

from pathlib import Path
from typing import Any, Dict, List, Optional

from hardyderiv.core.config.central_config import CentralConfig, get_config
from hardyderiv.core.logging.formatters import ColoredFormatter, StandardFormatter
from hardyderiv.core.logging.handlers import ConsoleHandler, FileHandler, StructuredHandler
from hardyderiv.core.logging.logger import (
    ROOT_LOGGER_NAME,
    HardyDerivLogger,
    LogHandler,
    LogLevel,
    configure_root_logger,
)


class LoggingConfigurator:
    """
    Centralized logging configuration using central_config.

    Handles setup of console, file, and structured logging based on
    configuration from the central config module.
    """

    def __init__(self, config: Optional[CentralConfig] = None):
        """
        Initialize logging configurator.

        Args:
            config: Optional config instance (uses get_config() if None)
        """
        self.config = config or get_config()
        self.logging_config = self.config.get_logging_config()
        self._configured = False

    def _get_log_level(self) -> LogLevel:
        """Get log level from configuration."""
        return LogLevel.from_name(self.logging_config.get("level", "WARNING"), LogLevel.WARNING)

    def _ensure_log_directory(self, file_path: str) -> Path:
        """
        Ensure log directory exists.

        Args:
            file_path: Path to log file

        Returns:
            Path object for the log file
        """
        log_path = Path(file_path)
        log_path.parent.mkdir(parents=True, exist_ok=True)
        return log_path

    def build_handlers(self, level: LogLevel) -> List[LogHandler]:
        """Create the handlers enabled in the configuration."""
        handlers: List[LogHandler] = []
        include_context = self.logging_config.get("include_context", True)

        if self.logging_config.get("enable_console", True):
            console_handler = ConsoleHandler(name="console", level=level)
            formatter_cls = ColoredFormatter if self.logging_config.get("colored_console") else StandardFormatter
            console_handler.set_formatter(formatter_cls(
                fmt="{timestamp} [{level:8}] {logger}: {message}",
                include_context=include_context,
                include_location=self.logging_config.get("include_location", False)
            ))
            handlers.append(console_handler)

        if self.logging_config.get("enable_file", False):
            log_file = self._ensure_log_directory(self.logging_config["file_path"])
            file_handler = FileHandler(
                name="file",
                level=level,
                filename=str(log_file),
                max_size=self.logging_config.get("max_file_size", 10 * 1024 * 1024),
                backup_count=self.logging_config.get("backup_count", 5)
            )
            file_handler.set_formatter(StandardFormatter(
                include_context=include_context,
                include_location=True,
                include_correlation_id=True
            ))
            handlers.append(file_handler)

        if self.logging_config.get("enable_structured", False):
            structured_file = self._ensure_log_directory(self.logging_config["structured_file_path"])
            handlers.append(StructuredHandler(
                name="structured",
                level=level,
                filename=str(structured_file),
                max_size=self.logging_config.get("max_file_size", 10 * 1024 * 1024),
                backup_count=self.logging_config.get("backup_count", 5)
            ))

        return handlers

    def setup_logging(self, logger_name: str = ROOT_LOGGER_NAME) -> HardyDerivLogger:
        """
        Set up logging based on central configuration.

        Args:
            logger_name: Name for the root logger

        Returns:
            Configured root logger
        """
        level = self._get_log_level()
        handlers = self.build_handlers(level)

        root_logger = configure_root_logger(level, handlers)
        self._configured = True

        root_logger.debug(
            "Logging system configured",
            handlers_count=len(handlers),
            log_level=level.name,
            file_logging=self.logging_config.get("enable_file", False),
            structured_logging=self.logging_config.get("enable_structured", False),
        )

        return root_logger

    def get_logging_summary(self) -> Dict[str, Any]:
        """
        Get a summary of current logging configuration.

        Returns:
            Dictionary containing logging configuration summary
        """
        return {
            "configured": self._configured,
            "level": self.logging_config.get("level", "WARNING"),
            "handlers": {
                "console": self.logging_config.get("enable_console", True),
                "file": self.logging_config.get("enable_file", False),
                "structured": self.logging_config.get("enable_structured", False)
            },
            "file_paths": {
                "main": self.logging_config.get("file_path"),
                "structured": self.logging_config.get("structured_file_path")
            },
        }


def setup_logging_from_config(config: Optional[CentralConfig] = None) -> HardyDerivLogger:
    """
    Set up logging using central configuration.

    Args:
        config: Configuration to read; the global one when omitted

    Returns:
        Configured root logger
    """
    return LoggingConfigurator(config).setup_logging()
