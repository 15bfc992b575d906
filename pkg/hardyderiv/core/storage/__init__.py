"""
Storage

Deterministic JSON and CSV artifact storage.
"""

from .base_storage import BaseStorage, StorageBackend, StorageError, dumps_csv, dumps_json, format_number
from .artifact_storage import ArtifactStorage

__all__ = [
    "BaseStorage",
    "StorageBackend",
    "StorageError",
    "dumps_csv",
    "dumps_json",
    "format_number",
    "ArtifactStorage",
]
