"""
Encoded-state cache namespace.
"""

from .base import NullStateCache, StateCache
from .factory import get_state_cache, reset_state_cache
from .in_memory import InMemoryStateCache

__all__ = [
    "InMemoryStateCache",
    "NullStateCache",
    "StateCache",
    "get_state_cache",
    "reset_state_cache",
]
