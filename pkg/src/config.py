"""
Configuration module for loading application settings.

Loads settings from environment variables with validation.
Uses dataclass for immutable, type-safe configuration.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from pathlib import Path
from typing import Any

from dotenv import load_dotenv

DEFAULT_DATA_ROOT = "data"
DEFAULT_PARALLEL = 1
DEFAULT_CACHE_MAX_ENTRIES = 20000


@dataclass(frozen=True)
class Settings:
    """
    Application settings loaded from environment variables.

    Immutable configuration class (frozen dataclass) that ensures
    settings cannot be modified after initialization.
    """

    data_root: Path = Path(DEFAULT_DATA_ROOT)
    parallel: int = DEFAULT_PARALLEL
    cache_max_entries: int = DEFAULT_CACHE_MAX_ENTRIES

    @classmethod
    def from_env(cls) -> Settings:
        """
        Load settings from environment variables.

        Returns:
            Settings instance populated with environment values.

        Raises:
            RuntimeError: If a variable holds an unusable value.
        """
        load_dotenv()
        env_vars = _load_env_vars()
        _validate_env_vars(env_vars)
        return cls(**env_vars)

    def resolve_data_path(self, path: str | Path) -> Path:
        """Resolve a dataset path; relative paths are taken under ``data_root``."""
        candidate = Path(path).expanduser()
        return candidate if candidate.is_absolute() else self.data_root / candidate


def _load_env_vars() -> dict[str, Any]:
    """Load and parse all environment variables into a dictionary."""
    data_root = os.getenv("QIR_DATA_ROOT", "").strip() or DEFAULT_DATA_ROOT

    return {
        "data_root": Path(data_root).expanduser(),
        "parallel": _load_int("QIR_PARALLEL", DEFAULT_PARALLEL),
        "cache_max_entries": _load_int("QIR_CACHE_MAX_ENTRIES", DEFAULT_CACHE_MAX_ENTRIES),
    }


def _load_int(env_var: str, default: int) -> int:
    """Load integer value from environment with fallback to default."""
    try:
        return int(os.getenv(env_var, str(default)))
    except ValueError:
        return default


def _validate_env_vars(env_vars: dict[str, Any]) -> None:
    """Validate numeric ranges."""
    if env_vars["parallel"] < 1:
        raise RuntimeError(f"QIR_PARALLEL must be >= 1, got {env_vars['parallel']}")
    if env_vars["cache_max_entries"] < 0:
        raise RuntimeError(f"QIR_CACHE_MAX_ENTRIES must be >= 0, got {env_vars['cache_max_entries']}")
