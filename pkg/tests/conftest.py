"""
Shared fixtures: a fresh configuration per test, an in-memory log handler
on the package root logger and a temporary artifact directory.
"""

import pytest

from hardyderiv.core.config.central_config import reload_config
from hardyderiv.core.logging.handlers import MemoryHandler
from hardyderiv.core.logging.logger import ROOT_LOGGER_NAME, LogLevel, get_logger


@pytest.fixture(autouse=True)
def fresh_config():
    """Default configuration, rebuilt for every test."""
    config = reload_config()
    yield config
    reload_config()


@pytest.fixture
def memory_log():
    """MemoryHandler attached to the package root logger at DEBUG."""
    root = get_logger(ROOT_LOGGER_NAME)
    previous_level = root.level
    handler = MemoryHandler(level=LogLevel.DEBUG)
    root.add_handler(handler)
    root.set_level(LogLevel.DEBUG)
    yield handler
    root.remove_handler(handler)
    root.set_level(previous_level)


@pytest.fixture
def artifact_dir(tmp_path):
    """Directory for artifacts written during a test."""
    return tmp_path / "artifacts"
