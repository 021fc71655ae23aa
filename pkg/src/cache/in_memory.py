"""
Local in-memory encoded-state cache.
"""

from collections import OrderedDict
from threading import Lock

import numpy as np

from .base import StateCache, frozen_copy


class InMemoryStateCache(StateCache):
    """
    In-memory state cache using an insertion-ordered dictionary.
    Oldest entries are evicted once ``max_entries`` is reached.
    """

    def __init__(self, max_entries: int = 20000) -> None:
        if max_entries < 1:
            raise ValueError(f"max_entries must be >= 1, got {max_entries}")
        self._max_entries = max_entries
        self._cache: OrderedDict[str, np.ndarray] = OrderedDict()
        self._cache_lock = Lock()

    def get(self, key: str) -> np.ndarray | None:
        with self._cache_lock:
            return self._cache.get(key)

    def put(self, key: str, amplitudes: np.ndarray) -> None:
        stored = frozen_copy(amplitudes)
        with self._cache_lock:
            self._cache[key] = stored
            self._cache.move_to_end(key)
            while len(self._cache) > self._max_entries:
                self._cache.popitem(last=False)

    def __len__(self) -> int:
        with self._cache_lock:
            return len(self._cache)
