"""
Tests for the structured logging layer.
"""

import json

import pytest

from hardyderiv.core.logging.config import LoggingConfigurator, setup_logging_from_config
from hardyderiv.core.logging.formatters import JSONFormatter, StandardFormatter
from hardyderiv.core.logging.handlers import MemoryHandler
from hardyderiv.core.logging.logger import (
    ROOT_LOGGER_NAME,
    HardyDerivLogger,
    LogLevel,
    configure_root_logger,
    get_logger,
)


@pytest.fixture
def restore_root():
    """Drop whatever handlers a test installed on the root logger."""
    yield
    configure_root_logger(LogLevel.WARNING, [])


class TestLogger:
    """Levels, context and handler fan-out."""

    def test_level_filtering(self):
        logger = HardyDerivLogger("standalone", LogLevel.WARNING)
        handler = MemoryHandler()
        logger.add_handler(handler)
        logger.info("quiet")
        logger.warning("loud", ratio=0.5)
        entries = handler.get_recent_logs()
        assert [entry.message for entry in entries] == ["loud"]
        assert entries[0].context == {"ratio": 0.5}
        assert logger.get_stats()["log_counts"]["WARNING"] == 1

    def test_module_loggers_forward_to_root(self, memory_log):
        get_logger(f"{ROOT_LOGGER_NAME}.tests.sample").debug("forwarded", n_out=64)
        found = memory_log.search_logs("forwarded")
        assert found and found[-1].context["n_out"] == 64

    def test_child_context(self):
        parent = HardyDerivLogger("parent", LogLevel.DEBUG)
        handler = MemoryHandler()
        parent.add_handler(handler)
        parent.add_context(seed=3)
        child = parent.child("batch", index=7)
        child.info("sampled")
        assert handler.get_recent_logs()[-1].context == {"seed": 3, "index": 7}

    def test_exception_recorded(self):
        logger = HardyDerivLogger("errors", LogLevel.DEBUG)
        handler = MemoryHandler()
        logger.add_handler(handler)
        try:
            raise ValueError("bad grid")
        except ValueError as e:
            logger.error("failed", exception=e)
        entry = handler.get_recent_logs()[-1]
        assert entry.exception == "bad grid"
        assert "ValueError" in entry.stack_trace

    def test_exception_uses_the_active_exception(self):
        logger = HardyDerivLogger("errors", LogLevel.DEBUG)
        handler = MemoryHandler()
        logger.add_handler(handler)
        try:
            {"N": 3}["entries"]
        except KeyError:
            logger.exception("gram file unreadable", source="m.json")
        entry = handler.get_recent_logs()[-1]
        assert entry.level is LogLevel.ERROR
        assert entry.context == {"source": "m.json"}
        assert "KeyError" in entry.stack_trace

    def test_level_names(self):
        assert LogLevel.from_name("debug") is LogLevel.DEBUG
        assert LogLevel.from_name("verbose", LogLevel.WARNING) is LogLevel.WARNING


class TestFormatters:
    """Text and JSON renderings."""

    def _entry(self):
        logger = HardyDerivLogger("fmt", LogLevel.DEBUG)
        handler = MemoryHandler()
        logger.add_handler(handler)
        logger.warning("tail bound computed", N=4, value=0.123456789)
        return handler.get_recent_logs()[-1]

    def test_standard(self):
        text = StandardFormatter().format(self._entry())
        assert "[WARNING ] fmt: tail bound computed" in text
        assert "N=4 value=0.123457" in text

    def test_json(self):
        data = json.loads(JSONFormatter(include_all_fields=False).format(self._entry()))
        assert data["message"] == "tail bound computed"
        assert data["context"] == {"N": 4, "value": 0.123456789}


class TestLoggingConfigurator:
    """Handlers built from the central configuration."""

    def test_console_only_by_default(self, fresh_config, restore_root):
        handlers = LoggingConfigurator(fresh_config).build_handlers(LogLevel.WARNING)
        assert [handler.name for handler in handlers] == ["console"]

    def test_structured_file(self, fresh_config, restore_root, tmp_path):
        path = tmp_path / "logs" / "structured.log"
        fresh_config.set("logging.enable_console", False)
        fresh_config.set("logging.enable_structured", True)
        fresh_config.set("logging.structured_file_path", str(path))
        fresh_config.set("logging.level", "INFO")
        root = setup_logging_from_config(fresh_config)
        root.info("certificate written", key="cert.json")
        lines = path.read_text().splitlines()
        record = json.loads(lines[-1])
        assert record["message"] == "certificate written"
        assert record["context"]["key"] == "cert.json"

    def test_summary(self, fresh_config):
        summary = LoggingConfigurator(fresh_config).get_logging_summary()
        assert summary["level"] == "WARNING"
        assert summary["handlers"] == {"console": True, "file": False, "structured": False}
