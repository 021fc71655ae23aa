"""
Adam optimizer with bias-corrected moment estimates.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

DEFAULT_STEP_SIZE = 0.1
DEFAULT_BETA1 = 0.9
DEFAULT_BETA2 = 0.999
DEFAULT_EPSILON = 1e-8


class TrainingError(RuntimeError):
    """Raised when optimization cannot continue (non-finite values, unusable data)."""

    pass


@dataclass(frozen=True)
class AdamHyper:
    step_size: float = DEFAULT_STEP_SIZE
    beta1: float = DEFAULT_BETA1
    beta2: float = DEFAULT_BETA2
    epsilon: float = DEFAULT_EPSILON


@dataclass(frozen=True)
class AdamState:
    """
    Attributes:
        m: First moment estimate.
        v: Second moment estimate (componentwise >= 0).
        t: Steps taken.
        hyper: Step size, decay rates and epsilon.
    """

    m: np.ndarray = field(repr=False)
    v: np.ndarray = field(repr=False)
    t: int = 0
    hyper: AdamHyper = AdamHyper()

    @classmethod
    def fresh(cls, size: int, hyper: AdamHyper | None = None) -> AdamState:
        return cls(np.zeros(size), np.zeros(size), 0, hyper or AdamHyper())


def adam_step(params: np.ndarray, grads: np.ndarray, st: AdamState) -> tuple[np.ndarray, AdamState]:
    """
    One Adam update.

    params <- params - step_size * m_hat / (sqrt(v_hat) + eps), with
    m_hat = m / (1 - beta1**t) and v_hat = v / (1 - beta2**t).

    Raises:
        ValueError: On length mismatch.
        TrainingError: If a gradient component is not finite.
    """
    values = np.asarray(params, dtype=np.float64)
    g = np.asarray(grads, dtype=np.float64)
    if values.shape != g.shape or st.m.shape != values.shape:
        raise ValueError(f"length mismatch: params {values.shape}, grads {g.shape}, state {st.m.shape}")
    if not np.all(np.isfinite(g)):
        raise TrainingError(f"non-finite gradient component at index {int(np.flatnonzero(~np.isfinite(g))[0])}")

    hyper = st.hyper
    t = st.t + 1
    m = hyper.beta1 * st.m + (1.0 - hyper.beta1) * g
    v = hyper.beta2 * st.v + (1.0 - hyper.beta2) * (g * g)
    m_hat = m / (1.0 - hyper.beta1**t)
    v_hat = v / (1.0 - hyper.beta2**t)
    updated = values - hyper.step_size * m_hat / (np.sqrt(v_hat) + hyper.epsilon)
    return updated, AdamState(m, v, t, hyper)
