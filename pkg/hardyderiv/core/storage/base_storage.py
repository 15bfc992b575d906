"""
Base Storage Interface

Defines the interface for artifact storage backends and the deterministic
serialization shared by all of them.
"""

import json
import math
from abc import ABC, abstractmethod
from datetime import datetime
from enum import Enum
from typing import Any, Dict, Iterable, List, Optional, Sequence

import numpy as np

from ..errors import InputError


class StorageBackend(Enum):
    """Types of storage backends."""
    FILESYSTEM = "filesystem"


class StorageError(InputError):
    """Artifact location cannot be created, written or read."""
    pass


def format_number(value: Any) -> str:
    """CSV cell: floats with 17 significant digits, everything else as str."""
    if isinstance(value, (bool, np.bool_)):
        return str(bool(value)).lower()
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, (float, np.floating)):
        return format(float(value), ".17g")
    return str(value)


def dumps_json(data: Any) -> str:
    """
    Deterministic JSON text with sorted keys and a trailing newline.

    Complex numbers become [re, im] and non-finite floats become null. Floats
    are written with their shortest round-trip repr (at most 17 significant
    digits).
    """
    return json.dumps(to_jsonable(data), indent=2, sort_keys=True, allow_nan=False) + "\n"


def dumps_csv(header: Sequence[str], rows: Iterable[Sequence[Any]]) -> str:
    """CSV text with "\\n" line endings and 17-digit floats."""
    lines = [",".join(header)]
    lines.extend(",".join(format_number(value) for value in row) for row in rows)
    return "\n".join(lines) + "\n"


def _finite_or_none(value: float) -> Optional[float]:
    return value if math.isfinite(value) else None


def to_jsonable(obj: Any) -> Any:
    """
    Convert numerical objects into plain JSON values.

    Args:
        obj: Object to convert

    Returns:
        Value built from dict, list, str, int, float, bool and None only
    """
    if obj is None or isinstance(obj, (str, bool, np.bool_)):
        return bool(obj) if isinstance(obj, np.bool_) else obj
    if isinstance(obj, (int, np.integer)):
        return int(obj)
    if isinstance(obj, (float, np.floating)):
        return _finite_or_none(float(obj))
    if isinstance(obj, (complex, np.complexfloating)):
        return [_finite_or_none(float(obj.real)), _finite_or_none(float(obj.imag))]
    if isinstance(obj, dict):
        return {str(key): to_jsonable(value) for key, value in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_jsonable(value) for value in obj]
    if isinstance(obj, np.ndarray):
        return to_jsonable(obj.tolist())
    if isinstance(obj, Enum):
        return to_jsonable(obj.value)
    if hasattr(obj, "to_dict"):
        return to_jsonable(obj.to_dict())
    return str(obj)


class BaseStorage(ABC):
    """
    Abstract base class for artifact storage.

    Serialized content never includes timestamps, so the same inputs
    produce byte-identical artifacts.
    """

    def __init__(self, storage_id: Optional[str] = None, config: Optional[Dict[str, Any]] = None):
        """
        Initialize the storage backend.

        Args:
            storage_id: Unique identifier for this storage instance
            config: Storage configuration
        """
        self.storage_id = storage_id or "default"
        self.config = config or {}
        self.backend_type = StorageBackend.FILESYSTEM
        self.is_connected = False
        self.last_activity = datetime.now()

    @abstractmethod
    async def connect(self) -> None:
        """Connect to the storage backend."""
        pass

    @abstractmethod
    async def disconnect(self) -> None:
        """Disconnect from the storage backend."""
        pass

    @abstractmethod
    async def store(self, key: str, data: str) -> str:
        """
        Store text under the given key.

        Args:
            key: Storage key/path
            data: Serialized content

        Returns:
            Storage key
        """
        pass

    @abstractmethod
    async def retrieve(self, key: str) -> str:
        """
        Retrieve text by key.

        Args:
            key: Storage key/path

        Returns:
            Stored content
        """
        pass

    @abstractmethod
    async def exists(self, key: str) -> bool:
        """Check if key exists."""
        pass

    @abstractmethod
    async def list_keys(self, prefix: str = "", limit: int = 1000) -> List[str]:
        """
        List keys with optional prefix filter.

        Args:
            prefix: Key prefix filter
            limit: Maximum number of keys to return

        Returns:
            Sorted list of keys
        """
        pass

    async def store_json(self, key: str, data: Any) -> str:
        """
        Store data as JSON.

        Args:
            key: Storage key
            data: Data to serialize and store

        Returns:
            Storage key
        """
        return await self.store(key, dumps_json(data))

    async def retrieve_json(self, key: str) -> Any:
        """Retrieve and deserialize JSON data."""
        content = await self.retrieve(key)
        try:
            return json.loads(content)
        except json.JSONDecodeError as e:
            raise StorageError(f"Stored content under {key} is not JSON: {e}")

    async def store_csv(self, key: str, header: Sequence[str], rows: Iterable[Sequence[Any]]) -> str:
        """Store a series as CSV."""
        return await self.store(key, dumps_csv(header, rows))

    def get_stats(self) -> Dict[str, Any]:
        """
        Get storage statistics.

        Returns:
            Dictionary containing storage stats
        """
        return {
            "storage_id": self.storage_id,
            "backend_type": self.backend_type.value,
            "is_connected": self.is_connected,
            "last_activity": self.last_activity.isoformat(),
        }
