"""
Base encoded-state cache interface.
"""

from abc import ABC, abstractmethod

import numpy as np


def frozen_copy(amplitudes: np.ndarray) -> np.ndarray:
    """Return a read-only complex128 copy, safe to share between cache readers."""
    stored = np.array(amplitudes, dtype=np.complex128)
    stored.setflags(write=False)
    return stored


class StateCache(ABC):
    """Abstract base class for caches of encoded amplitude vectors."""

    @abstractmethod
    def get(self, key: str) -> np.ndarray | None:
        """Retrieves cached amplitudes (read-only)."""
        pass

    @abstractmethod
    def put(self, key: str, amplitudes: np.ndarray) -> None:
        """Caches amplitudes."""
        pass

    @abstractmethod
    def __len__(self) -> int:
        pass


class NullStateCache(StateCache):
    """Cache that stores nothing; used when caching is disabled."""

    def get(self, key: str) -> np.ndarray | None:
        return None

    def put(self, key: str, amplitudes: np.ndarray) -> None:
        return None

    def __len__(self) -> int:
        return 0
