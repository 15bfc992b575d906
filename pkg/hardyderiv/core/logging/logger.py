"""
Core Logger Implementation

Provides structured logging with context tracking and multiple output formats.
The numerical core is synchronous, so handlers are invoked in the calling
thread under a lock; check workers running in a thread pool share loggers safely.
"""

import sys
import threading
import traceback
import uuid
from dataclasses import dataclass, field
from datetime import datetime
from enum import IntEnum
from typing import Any, Dict, List, Optional


class LogLevel(IntEnum):
    """Log level enumeration with numeric values for comparison."""
    DEBUG = 10
    INFO = 20
    WARNING = 30
    ERROR = 40
    CRITICAL = 50

    @classmethod
    def from_name(cls, name: str, default: "LogLevel" = None) -> "LogLevel":
        """Parse a level name case-insensitively."""
        try:
            return cls[name.upper()]
        except (KeyError, AttributeError):
            return default if default is not None else cls.INFO


@dataclass
class LogEntry:
    """Structured log entry."""
    timestamp: datetime
    level: LogLevel
    message: str
    logger_name: str
    module: str = ""
    function: str = ""
    line_number: int = 0
    thread_id: str = ""
    correlation_id: str = ""
    context: Dict[str, Any] = field(default_factory=dict)
    exception: Optional[str] = None
    stack_trace: Optional[str] = None

    def to_dict(self) -> Dict[str, Any]:
        """Convert log entry to dictionary."""
        return {
            "timestamp": self.timestamp.isoformat(),
            "level": self.level.name,
            "level_num": self.level.value,
            "message": self.message,
            "logger": self.logger_name,
            "module": self.module,
            "function": self.function,
            "line": self.line_number,
            "thread": self.thread_id,
            "correlation_id": self.correlation_id,
            "context": self.context,
            "exception": self.exception,
            "stack_trace": self.stack_trace
        }


class LogHandler:
    """Base class for log handlers."""

    def __init__(self, name: str, level: LogLevel = LogLevel.INFO):
        self.name = name
        self.level = level
        self.formatter = None

    def set_formatter(self, formatter) -> None:
        """Set the formatter for this handler."""
        self.formatter = formatter

    def should_handle(self, entry: LogEntry) -> bool:
        """Check if this handler should process the log entry."""
        return entry.level >= self.level

    def handle(self, entry: LogEntry) -> None:
        """Handle a log entry."""
        if self.should_handle(entry):
            self.emit(entry)

    def emit(self, entry: LogEntry) -> None:
        """Emit a log entry (override in subclasses)."""
        pass

    def close(self) -> None:
        """Release resources held by the handler."""
        pass

    def format(self, entry: LogEntry) -> str:
        """Format a log entry using the configured formatter."""
        if self.formatter:
            return self.formatter.format(entry)
        return entry.message


class HardyDerivLogger:
    """
    Logger for the toolkit.

    Features:
    - Structured logging with context
    - Multiple handlers and formatters
    - Correlation ID tracking per CLI invocation
    - Thread-safe operation
    - Per-level counters
    """

    def __init__(
        self,
        name: str,
        level: LogLevel = LogLevel.INFO,
        correlation_id: Optional[str] = None
    ):
        """
        Initialize the logger.

        Args:
            name: Logger name
            level: Minimum log level
            correlation_id: Optional correlation ID shared by one invocation
        """
        self.name = name
        self.level = level
        self.correlation_id = correlation_id or str(uuid.uuid4())

        self.handlers: List[LogHandler] = []
        self.context: Dict[str, Any] = {}
        self.parent: Optional["HardyDerivLogger"] = None

        self._lock = threading.Lock()

        self.log_counts = {level: 0 for level in LogLevel}
        self.created_at = datetime.now()

    def add_handler(self, handler: LogHandler) -> None:
        """Add a log handler."""
        with self._lock:
            self.handlers.append(handler)

    def remove_handler(self, handler: LogHandler) -> None:
        """Detach a handler if it is attached."""
        with self._lock:
            if handler in self.handlers:
                self.handlers.remove(handler)

    def set_level(self, level: LogLevel) -> None:
        """Set the minimum log level."""
        self.level = level

    def add_context(self, **kwargs) -> None:
        """Add context fields to all log entries."""
        self.context.update(kwargs)

    def effective_level(self) -> LogLevel:
        """Level of this logger, or of the nearest configured ancestor."""
        if self.parent is not None and not self.handlers:
            return self.parent.effective_level()
        return self.level

    def log(
        self,
        level: LogLevel,
        message: str,
        exception: Optional[BaseException] = None,
        extra_context: Optional[Dict[str, Any]] = None,
        **kwargs
    ) -> None:
        """
        Log a message at the specified level.

        Args:
            level: Log level
            message: Log message
            exception: Optional exception to log
            extra_context: Additional context for this log entry
            **kwargs: Additional context as keyword arguments
        """
        if level < self.effective_level():
            return

        frame = sys._getframe(2)

        entry_context = {**self.context}
        if extra_context:
            entry_context.update(extra_context)
        if kwargs:
            entry_context.update(kwargs)

        entry = LogEntry(
            timestamp=datetime.now(),
            level=level,
            message=message,
            logger_name=self.name,
            module=frame.f_globals.get('__name__', ''),
            function=frame.f_code.co_name,
            line_number=frame.f_lineno,
            thread_id=str(threading.current_thread().ident),
            correlation_id=self.correlation_id,
            context=entry_context,
            exception=str(exception) if exception else None,
            stack_trace=(
                "".join(traceback.format_exception(type(exception), exception, exception.__traceback__))
                if exception else None
            )
        )

        with self._lock:
            self.log_counts[level] += 1

        self._emit_to_handlers(entry)

    def debug(self, message: str, **kwargs) -> None:
        """Log a debug message."""
        self.log(LogLevel.DEBUG, message, **kwargs)

    def info(self, message: str, **kwargs) -> None:
        """Log an info message."""
        self.log(LogLevel.INFO, message, **kwargs)

    def warning(self, message: str, **kwargs) -> None:
        """Log a warning message."""
        self.log(LogLevel.WARNING, message, **kwargs)

    def error(self, message: str, exception: Optional[BaseException] = None, **kwargs) -> None:
        """Log an error message."""
        self.log(LogLevel.ERROR, message, exception=exception, **kwargs)

    def exception(self, message: str, **kwargs) -> None:
        """Log the exception currently being handled."""
        _, exc_value, _ = sys.exc_info()
        self.log(LogLevel.ERROR, message, exception=exc_value, **kwargs)

    def check_started(self, check_name: str, **kwargs) -> None:
        """Log the start of a property check."""
        self.info(
            f"Check started: {check_name}",
            check_name=check_name,
            event_type="check_started",
            **kwargs
        )

    def check_completed(self, check_name: str, execution_time: float, passed: bool, **kwargs) -> None:
        """Log the outcome of a property check."""
        level = LogLevel.INFO if passed else LogLevel.ERROR
        status = "passed" if passed else "failed"

        self.log(
            level,
            f"Check {status}: {check_name} (took {execution_time:.2f}s)",
            check_name=check_name,
            execution_time=execution_time,
            passed=passed,
            event_type="check_completed",
            **kwargs
        )

    def _emit_to_handlers(self, entry: LogEntry) -> None:
        """Emit log entry to all handlers, falling back to the parent's."""
        with self._lock:
            handlers = self.handlers.copy()

        if not handlers and self.parent is not None:
            self.parent._emit_to_handlers(entry)
            return

        for handler in handlers:
            try:
                handler.handle(entry)
            except Exception as e:  # handler failures are reported, never raised
                print(f"{type(handler).__name__} error: {e}", file=sys.stderr)

    def get_stats(self) -> Dict[str, Any]:
        """Get logger statistics."""
        return {
            "name": self.name,
            "level": self.level.name,
            "correlation_id": self.correlation_id,
            "handler_count": len(self.handlers),
            "log_counts": {level.name: count for level, count in self.log_counts.items()},
            "total_logs": sum(self.log_counts.values()),
            "created_at": self.created_at.isoformat(),
            "context_fields": list(self.context.keys())
        }

    def child(self, name: str, **context) -> "HardyDerivLogger":
        """Create a child logger with additional context."""
        child = HardyDerivLogger(f"{self.name}.{name}", self.level, self.correlation_id)
        child.context = {**self.context, **context}
        child.parent = self
        return child


# Global logger registry
ROOT_LOGGER_NAME = "hardyderiv"
_loggers: Dict[str, HardyDerivLogger] = {}
_logger_lock = threading.Lock()


def get_logger(name: str, level: LogLevel = LogLevel.INFO) -> HardyDerivLogger:
    """
    Get or create a logger instance.

    Loggers below ``hardyderiv`` forward to the root logger's handlers until
    they get handlers of their own.

    Args:
        name: Logger name (module ``__name__`` is typical)
        level: Log level

    Returns:
        HardyDerivLogger instance
    """
    with _logger_lock:
        if name not in _loggers:
            logger = HardyDerivLogger(name, level)
            if name != ROOT_LOGGER_NAME and name.startswith(ROOT_LOGGER_NAME + "."):
                if ROOT_LOGGER_NAME not in _loggers:
                    _loggers[ROOT_LOGGER_NAME] = HardyDerivLogger(ROOT_LOGGER_NAME, level)
                logger.parent = _loggers[ROOT_LOGGER_NAME]
            _loggers[name] = logger
        return _loggers[name]


def configure_root_logger(
    level: LogLevel = LogLevel.INFO,
    handlers: Optional[List[LogHandler]] = None
) -> HardyDerivLogger:
    """
    Configure the root logger.

    Args:
        level: Log level
        handlers: List of handlers to add

    Returns:
        Root logger instance
    """
    root = get_logger(ROOT_LOGGER_NAME, level)
    root.set_level(level)

    if handlers is not None:
        for handler in root.handlers:
            handler.close()
        root.handlers.clear()
        for handler in handlers:
            root.add_handler(handler)

    return root
