"""
Log Handlers

Handlers for outputting logs to the console, rotating files and memory.
"""

import json
import sys
import threading
from datetime import datetime
from pathlib import Path
from typing import List, Optional, TextIO

from .logger import LogEntry, LogHandler, LogLevel


class ConsoleHandler(LogHandler):
    """Handler that writes logs to stderr, keeping stdout for command output."""

    def __init__(
        self,
        name: str = "console",
        level: LogLevel = LogLevel.INFO,
        stream: Optional[TextIO] = None
    ):
        """
        Initialize console handler.

        Args:
            name: Handler name
            level: Minimum log level
            stream: Output stream (defaults to stderr)
        """
        super().__init__(name, level)
        self.stream = stream
        self._lock = threading.Lock()

    def emit(self, entry: LogEntry) -> None:
        """Emit log entry to console."""
        formatted = self.format(entry)
        stream = self.stream or sys.stderr

        with self._lock:
            stream.write(formatted + "\n")
            stream.flush()


class _RotatingFileHandler(LogHandler):
    """Shared size-based rotation for file handlers."""

    def __init__(
        self,
        name: str,
        level: LogLevel,
        filename: str,
        max_size: int,
        backup_count: int,
        encoding: str = "utf-8"
    ):
        super().__init__(name, level)
        self.filename = Path(filename)
        self.max_size = max_size
        self.backup_count = backup_count
        self.encoding = encoding

        self.filename.parent.mkdir(parents=True, exist_ok=True)

        self._file = None
        self._lock = threading.Lock()

    def _render(self, entry: LogEntry) -> str:
        return self.format(entry)

    def emit(self, entry: LogEntry) -> None:
        """Append the rendered entry, rotating first when the file is full."""
        with self._lock:
            if self._file is None or self._file.closed:
                self._file = open(self.filename, 'a', encoding=self.encoding)

            if self._file.tell() > self.max_size:
                self._rotate_file()

            self._file.write(self._render(entry) + '\n')
            self._file.flush()

    def _rotate_file(self) -> None:
        """Rotate log file when it gets too large."""
        if self._file:
            self._file.close()

        for i in range(self.backup_count - 1, 0, -1):
            old_backup = self.filename.with_suffix(f"{self.filename.suffix}.{i}")
            new_backup = self.filename.with_suffix(f"{self.filename.suffix}.{i + 1}")

            if old_backup.exists():
                if new_backup.exists():
                    new_backup.unlink()
                old_backup.rename(new_backup)

        if self.filename.exists():
            if self.backup_count > 0:
                backup = self.filename.with_suffix(f"{self.filename.suffix}.1")
                if backup.exists():
                    backup.unlink()
                self.filename.rename(backup)
            else:
                self.filename.unlink()

        self._file = open(self.filename, 'w', encoding=self.encoding)

    def close(self) -> None:
        """Close the file."""
        with self._lock:
            if self._file and not self._file.closed:
                self._file.close()


class FileHandler(_RotatingFileHandler):
    """Handler that outputs formatted logs to a file."""

    def __init__(
        self,
        name: str = "file",
        level: LogLevel = LogLevel.INFO,
        filename: str = "hardyderiv.log",
        max_size: int = 10 * 1024 * 1024,  # 10MB
        backup_count: int = 5,
        encoding: str = "utf-8"
    ):
        """
        Initialize file handler.

        Args:
            name: Handler name
            level: Minimum log level
            filename: Log file path
            max_size: Maximum file size before rotation
            backup_count: Number of backup files to keep
            encoding: File encoding
        """
        super().__init__(name, level, filename, max_size, backup_count, encoding)


class StructuredHandler(_RotatingFileHandler):
    """Handler that outputs structured logs (JSON lines) to a file."""

    def __init__(
        self,
        name: str = "structured",
        level: LogLevel = LogLevel.INFO,
        filename: str = "hardyderiv-structured.log",
        max_size: int = 50 * 1024 * 1024,  # 50MB
        backup_count: int = 10,
        encoding: str = "utf-8"
    ):
        super().__init__(name, level, filename, max_size, backup_count, encoding)

    def _render(self, entry: LogEntry) -> str:
        return json.dumps(entry.to_dict(), default=str, separators=(',', ':'))


class MemoryHandler(LogHandler):
    """Handler that keeps logs in memory for inspection."""

    def __init__(
        self,
        name: str = "memory",
        level: LogLevel = LogLevel.DEBUG,
        max_entries: int = 5000
    ):
        """
        Initialize memory handler.

        Args:
            name: Handler name
            level: Minimum log level
            max_entries: Maximum entries to keep in memory
        """
        super().__init__(name, level)
        self.max_entries = max_entries
        self.entries: List[LogEntry] = []
        self._lock = threading.Lock()

    def emit(self, entry: LogEntry) -> None:
        """Add log entry to the memory buffer."""
        with self._lock:
            self.entries.append(entry)

            if len(self.entries) > self.max_entries:
                self.entries = self.entries[-self.max_entries:]

    def get_recent_logs(self, limit: int = 100, level: Optional[LogLevel] = None) -> List[LogEntry]:
        """Get recent log entries."""
        with self._lock:
            entries = self.entries

            if level:
                entries = [e for e in entries if e.level >= level]

            return entries[-limit:] if limit else list(entries)

    def search_logs(
        self,
        query: str = "",
        level: Optional[LogLevel] = None,
        start_time: Optional[datetime] = None,
        limit: int = 100
    ) -> List[LogEntry]:
        """Search log entries by message, context or logger name."""
        with self._lock:
            entries = self.entries

            if level:
                entries = [e for e in entries if e.level >= level]

            if start_time:
                entries = [e for e in entries if e.timestamp >= start_time]

            if query:
                query_lower = query.lower()
                entries = [
                    entry for entry in entries
                    if query_lower in entry.message.lower()
                    or query_lower in str(entry.context).lower()
                    or query_lower in entry.logger_name.lower()
                ]

            return entries[-limit:] if limit else list(entries)

    def clear(self) -> None:
        """Drop all buffered entries."""
        with self._lock:
            self.entries.clear()
