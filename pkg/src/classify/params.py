"""
Trained classifier state: parameter vector plus decision thresholds.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace

import numpy as np

DEFAULT_SPLIT = 0.0
DEFAULT_MULTI_BOUNDS = (-1.0 / 3.0, 1.0 / 3.0)
DEFAULT_AC_THRESHOLD = 0.5


@dataclass(frozen=True)
class ClassifierParams:
    """
    Attributes:
        values: Flat parameter vector (length 3 * N * l).
        split: VQC split s.
        multi_bounds: Ascending (b1, b2) inside (-1, 1) for three-class VQC.
        ac_threshold: AC fidelity threshold in [0, 1].
    """

    values: np.ndarray = field(repr=False)
    split: float = DEFAULT_SPLIT
    multi_bounds: tuple[float, float] | None = None
    ac_threshold: float | None = None

    def __post_init__(self) -> None:
        values = np.array(self.values, dtype=np.float64).reshape(-1)
        values.setflags(write=False)
        object.__setattr__(self, "values", values)
        if self.multi_bounds is not None:
            low, high = (float(b) for b in self.multi_bounds)
            if not -1.0 < low < high < 1.0:
                raise ValueError(f"multi_bounds must satisfy -1 < b1 < b2 < 1, got {self.multi_bounds}")
            object.__setattr__(self, "multi_bounds", (low, high))
        if self.ac_threshold is not None and not 0.0 <= self.ac_threshold <= 1.0:
            raise ValueError(f"ac_threshold must lie in [0, 1], got {self.ac_threshold}")

    def check_length(self, expected: int) -> None:
        """Raise ValueError unless the vector has ``expected`` entries."""
        if self.values.shape[0] != expected:
            raise ValueError(f"expected {expected} parameters, got {self.values.shape[0]}")

    def with_values(self, values: np.ndarray) -> ClassifierParams:
        return replace(self, values=values)


def init_params(num_params: int, seed: int) -> ClassifierParams:
    """Draw i.i.d. uniform angles on [0, 2 pi) from a seeded generator."""
    rng = np.random.default_rng(seed)
    return ClassifierParams(rng.uniform(0.0, 2 * np.pi, size=num_params))
