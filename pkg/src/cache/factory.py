"""
State cache factory helpers.

Creates the process-wide state cache based on application settings.
"""

from __future__ import annotations

from threading import Lock

from ..config import Settings
from .base import NullStateCache, StateCache
from .in_memory import InMemoryStateCache

_cache_lock = Lock()


class CacheState:
    current: StateCache | None = None


_state = CacheState()


def get_state_cache(settings: Settings) -> StateCache:
    """
    Build or return the shared state cache instance.

    Args:
        settings: Application settings with cache configuration.

    Returns:
        State cache instance.
    """
    if _state.current is not None:
        return _state.current

    with _cache_lock:
        if _state.current is not None:
            return _state.current

        if settings.cache_max_entries == 0:
            _state.current = NullStateCache()
        else:
            _state.current = InMemoryStateCache(max_entries=settings.cache_max_entries)

    if _state.current is None:
        raise RuntimeError("State cache not initialized")
    return _state.current


def reset_state_cache() -> None:
    """
    Reset the shared state cache.

    Intended for tests to avoid cross-test state sharing.
    """
    _state.current = None
