# tests/unit/core/test_cache.py
"""
Tests for the cache backends and the memoising wrapper.
"""
import os

import pytest

from core.cache import CachedComputation, FileCache, MemoryCache
from core.cache.backends import build_cache_key, operad_fingerprint
from core.config import Settings
from core.exceptions import CacheError


class TestMemoryCache:
    def test_set_get_invalidate(self):
        cache = MemoryCache(max_size=4)
        cache.set("a/b", [1, 2])
        assert cache.get("a/b") == [1, 2]
        cache.invalidate("a/b")
        assert cache.get("a/b") is None

    def test_fifo_eviction(self):
        cache = MemoryCache(max_size=2)
        cache.set("k1", 1)
        cache.set("k2", 2)
        cache.set("k3", 3)
        assert cache.get("k1") is None
        assert cache.get("k3") == 3


class TestFileCache:
    def test_roundtrip_on_disk(self, temp_dir):
        cache = FileCache(temp_dir)
        cache.set("abc/comp_3_0_2", [[0, 1, "1/2"]])
        assert os.path.exists(os.path.join(temp_dir, "abc", "comp_3_0_2.json"))
        assert cache.get("abc/comp_3_0_2") == [[0, 1, "1/2"]]

    def test_corrupt_entry_raises_cache_error(self, temp_dir):
        cache = FileCache(temp_dir)
        os.makedirs(os.path.join(temp_dir, "ns"))
        with open(os.path.join(temp_dir, "ns", "bad.json"), "w") as f:
            f.write("{not json")
        with pytest.raises(CacheError):
            cache.get("ns/bad")


class TestCachedComputation:
    def test_second_fetch_hits(self, settings):
        cached = CachedComputation(settings)
        calls = []

        def compute():
            calls.append(1)
            return [1, 2, 3]

        assert cached.fetch("op", "t", compute) == [1, 2, 3]
        assert cached.fetch("op", "t", compute) == [1, 2, 3]
        assert len(calls) == 1
        assert (cached.hits, cached.misses) == (1, 1)

    def test_disabled_cache_always_computes(self):
        cached = CachedComputation(Settings(_env_file=None, cache_enabled=False))
        calls = []
        cached.fetch("op", "t", lambda: calls.append(1) or 1)
        cached.fetch("op", "t", lambda: calls.append(1) or 1)
        assert len(calls) == 2

    def test_backend_errors_are_bypassed(self, settings, mocker):
        backend = mocker.Mock()
        backend.get.side_effect = CacheError("boom")
        backend.set.side_effect = CacheError("boom")
        cached = CachedComputation(settings, backend=backend)
        assert cached.fetch("op", "t", lambda: 42) == 42


def test_keys_and_fingerprints_are_stable():
    assert build_cache_key("abc", "comp_2_0_2") == "abc/comp_2_0_2"
    a = operad_fingerprint({"name": "lie", "max_arity": 4})
    b = operad_fingerprint({"max_arity": 4, "name": "lie"})
    assert a == b and len(a) == 16
