"""
Artifact Storage

Filesystem backend for certificates, measures, Gram matrices and CSV
series, laid out as plain files under a base directory.
"""

import os
from datetime import datetime
from pathlib import Path
from typing import Any, Dict, List, Optional

from ..logging.logger import get_logger
from .base_storage import BaseStorage, StorageBackend, StorageError

logger = get_logger(__name__)


class ArtifactStorage(BaseStorage):
    """
    Filesystem-based artifact storage.

    Keys are paths relative to ``base_path``; files are written as UTF-8
    with "\\n" line endings.
    """

    def __init__(self, base_path: str = "./artifacts", storage_id: Optional[str] = None,
                 config: Optional[Dict[str, Any]] = None):
        """
        Initialize artifact storage.

        Args:
            base_path: Directory that holds the artifacts
            storage_id: Unique identifier
            config: Configuration; 'create_dirs' (default True)
        """
        super().__init__(storage_id, config)
        self.backend_type = StorageBackend.FILESYSTEM
        self.base_path = Path(base_path)
        self.create_dirs = self.config.get("create_dirs", True)

    async def connect(self) -> None:
        """Create the base directory if needed and check it is writable."""
        try:
            if self.create_dirs:
                self.base_path.mkdir(parents=True, exist_ok=True)
        except OSError as e:
            raise StorageError(f"Cannot create artifact directory {self.base_path}: {e}")

        if not self.base_path.is_dir():
            raise StorageError(f"Artifact directory does not exist: {self.base_path}")
        if not os.access(self.base_path, os.R_OK | os.W_OK):
            raise StorageError(f"No read/write access to: {self.base_path}")

        self.is_connected = True
        self.last_activity = datetime.now()

    async def disconnect(self) -> None:
        """Disconnect from filesystem."""
        self.is_connected = False

    async def store(self, key: str, data: str) -> str:
        if not self.is_connected:
            raise StorageError("Storage not connected")

        file_path = self._get_file_path(key)
        try:
            file_path.parent.mkdir(parents=True, exist_ok=True)
            with open(file_path, "w", encoding="utf-8", newline="\n") as f:
                f.write(data)
        except OSError as e:
            raise StorageError(f"Failed to store {key}: {e}", {"path": str(file_path)})

        self.last_activity = datetime.now()
        logger.debug("artifact stored", key=key, size=len(data))
        return key

    async def retrieve(self, key: str) -> str:
        if not self.is_connected:
            raise StorageError("Storage not connected")

        file_path = self._get_file_path(key)
        if not file_path.is_file():
            raise StorageError(f"Key not found: {key}")
        try:
            with open(file_path, "r", encoding="utf-8") as f:
                content = f.read()
        except (OSError, UnicodeDecodeError) as e:
            raise StorageError(f"Failed to retrieve {key}: {e}")

        self.last_activity = datetime.now()
        return content

    async def exists(self, key: str) -> bool:
        if not self.is_connected:
            return False
        return self._get_file_path(key).is_file()

    async def list_keys(self, prefix: str = "", limit: int = 1000) -> List[str]:
        if not self.is_connected:
            raise StorageError("Storage not connected")

        keys = []
        for file_path in sorted(self.base_path.rglob("*")):
            if not file_path.is_file():
                continue
            key = str(file_path.relative_to(self.base_path)).replace(os.sep, "/")
            if not prefix or key.startswith(prefix):
                keys.append(key)
                if len(keys) >= limit:
                    break
        return keys

    def _get_file_path(self, key: str) -> Path:
        """Get filesystem path for a key."""
        # no directory traversal out of base_path
        safe_key = key.replace("..", "").strip("/")
        return self.base_path / safe_key
