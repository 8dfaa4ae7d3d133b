# core/cache/backends.py
from __future__ import annotations

import hashlib
import json
import os
import tempfile
import threading
from typing import Any, Callable, Dict, Optional

from tenacity import retry, retry_if_exception_type, stop_after_attempt, wait_fixed

from ..exceptions import CacheError
from ..logging import get_logger

logger = get_logger(__name__)


# ---------- helpers ---------------------------------------------------------


def _sha(payload: Any) -> str:
    """Stable SHA-256 hash of a JSON-able payload."""
    return hashlib.sha256(
        json.dumps(payload, sort_keys=True, default=repr).encode()
    ).hexdigest()


def build_cache_key(namespace: str, name: str) -> str:
    """Keys look like '<operad-hash>/comp_<n>_<i>_<m>'."""
    return f"{namespace}/{name}"


def operad_fingerprint(descriptor: Dict[str, Any]) -> str:
    """Short hash identifying an operad presentation (name plus parameters)."""
    return _sha(descriptor)[:16]


# ---------- backend implementations ----------------------------------------


class CacheBackend:
    def get(self, key: str) -> Optional[Any]:
        raise NotImplementedError("Subclasses must implement get()")

    def set(self, key: str, value: Any) -> None:
        raise NotImplementedError("Subclasses must implement set()")

    def invalidate(self, key: str) -> None:
        raise NotImplementedError("Subclasses must implement invalidate()")


class MemoryCache(CacheBackend):
    def __init__(self, max_size: int):
        self._data: dict[str, Any] = {}
        self._lock = threading.Lock()
        self._max = max_size

    def get(self, key: str) -> Optional[Any]:
        with self._lock:
            return self._data.get(key)

    def set(self, key: str, value: Any) -> None:
        with self._lock:
            if key not in self._data and len(self._data) >= self._max:
                # simple FIFO eviction
                self._data.pop(next(iter(self._data)))
            self._data[key] = value

    def invalidate(self, key: str) -> None:
        with self._lock:
            self._data.pop(key, None)


class FileCache(CacheBackend):
    """JSON files under <directory>/<namespace>/<name>.json, written atomically."""

    def __init__(self, directory: str):
        self.dir = directory
        self._lock = threading.Lock()
        try:
            os.makedirs(self.dir, exist_ok=True)
        except OSError as e:
            raise CacheError(f"cannot create cache dir {directory}", path=directory) from e

    def _path(self, key: str) -> str:
        namespace, _, name = key.rpartition("/")
        return os.path.join(self.dir, namespace, f"{name}.json")

    @retry(
        retry=retry_if_exception_type(OSError),
        stop=stop_after_attempt(3),
        wait=wait_fixed(0.05),
        reraise=True,
    )
    def _read(self, path: str) -> Any:
        with open(path, "r", encoding="utf-8") as f:
            return json.load(f)

    @retry(
        retry=retry_if_exception_type(OSError),
        stop=stop_after_attempt(3),
        wait=wait_fixed(0.05),
        reraise=True,
    )
    def _write(self, path: str, value: Any) -> None:
        folder = os.path.dirname(path)
        os.makedirs(folder, exist_ok=True)
        fd, tmp = tempfile.mkstemp(dir=folder, suffix=".tmp")
        try:
            with os.fdopen(fd, "w", encoding="utf-8") as f:
                json.dump(value, f, sort_keys=True)
            os.replace(tmp, path)
        finally:
            if os.path.exists(tmp):
                os.remove(tmp)

    def get(self, key: str) -> Optional[Any]:
        path = self._path(key)
        if not os.path.exists(path):
            return None
        try:
            return self._read(path)
        except (OSError, ValueError) as e:
            raise CacheError(f"unreadable cache entry {key}", key=key) from e

    def set(self, key: str, value: Any) -> None:
        with self._lock:
            try:
                self._write(self._path(key), value)
            except (OSError, TypeError) as e:
                raise CacheError(f"cannot write cache entry {key}", key=key) from e

    def invalidate(self, key: str) -> None:
        path = self._path(key)
        if os.path.exists(path):
            os.remove(path)


# ---------- public helpers --------------------------------------------------


def _backend(settings) -> CacheBackend:
    if settings.cache_backend == "file":
        return FileCache(settings.cache_dir)
    return MemoryCache(settings.cache_max_size)


def get_cache(settings) -> CacheBackend:
    return _backend(settings)


class CachedComputation:
    """
    Memoises JSON-able results of pure computations behind a cache backend.

    Cache failures never break a computation: they are logged and bypassed.
    """

    def __init__(self, settings, backend: Optional[CacheBackend] = None):
        self._settings = settings
        self._cache: Optional[CacheBackend] = None
        if settings.cache_enabled:
            try:
                self._cache = backend or get_cache(settings)
            except CacheError as ce:
                logger.error("cache_unavailable", error=str(ce))
        self.hits = 0
        self.misses = 0

    def fetch(self, namespace: str, name: str, compute: Callable[[], Any]) -> Any:
        if self._cache is None:
            return compute()

        key = build_cache_key(namespace, name)
        try:
            cached = self._cache.get(key)
            if cached is not None:
                self.hits += 1
                logger.debug("cache_hit", key=key)
                return cached
            logger.debug("cache_miss", key=key)
        except CacheError as ce:
            logger.error("cache_error_get", error=str(ce))

        self.misses += 1
        result = compute()

        try:
            self._cache.set(key, result)
        except CacheError as ce:
            logger.error("cache_error_set", error=str(ce))

        return result
