from .backends import CacheBackend, CachedComputation, FileCache, MemoryCache, get_cache

__all__ = ['CacheBackend', 'CachedComputation', 'FileCache', 'MemoryCache', 'get_cache']
