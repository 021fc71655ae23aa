"""
Variational Z-split classifier.

The score is ez, the Pauli-Z expectation of the readout qubit after the
ansatz; binary labels follow -1 if ez <= s else +1.
"""

from __future__ import annotations

from collections.abc import Sequence

import numpy as np

from ..sim import Observable, Statevector, expectations, parameter_shift_jacobian
from .ansatz import AnsatzSpec, build_ansatz
from .params import ClassifierParams

MULTI_TARGETS = np.array([-1.0, 0.0, 1.0])


def _readout(spec: AnsatzSpec, readout: int | None) -> int:
    return spec.num_qubits - 1 if readout is None else readout


def vqc_scores(amplitudes: np.ndarray, spec: AnsatzSpec, params: ClassifierParams, readout: int | None = None) -> np.ndarray:
    """ez for every state of a (B, 2**N) amplitude batch."""
    params.check_length(spec.num_params)
    obs = Observable.pauli_z(_readout(spec, readout))
    return np.atleast_1d(expectations(np.atleast_2d(amplitudes), build_ansatz(spec), params.values, obs))


def vqc_ez(state: Statevector, spec: AnsatzSpec, params: ClassifierParams, readout: int | None = None) -> float:
    """
    Z expectation of the readout qubit after the ansatz.

    Args:
        state: Encoded image state.
        spec: Ansatz shape; ``spec.num_qubits`` must equal the state size.
        params: Trained or initial parameters.
        readout: Readout qubit; defaults to the highest qubit (FRQI color / MCQI value qubit).
    """
    if state.num_qubits != spec.num_qubits:
        raise ValueError(f"ansatz acts on {spec.num_qubits} qubits, state has {state.num_qubits}")
    return float(vqc_scores(state.amplitudes, spec, params, readout)[0])


def vqc_classify(ez: float, split: float) -> int:
    """-1 if ez <= split else +1."""
    return -1 if ez <= split else 1


def vqc_classify_multi(ez: float, bounds: tuple[float, float]) -> int:
    """0 if ez <= b1, 1 if b1 < ez <= b2, else 2."""
    low, high = bounds
    if ez <= low:
        return 0
    if ez <= high:
        return 1
    return 2


def multiclass_targets(labels: np.ndarray) -> np.ndarray:
    """Regression target per three-class label: -1, 0, +1 for classes 0, 1, 2."""
    return MULTI_TARGETS[np.asarray(labels, dtype=np.int64)]


def vqc_loss_and_grad(
    amplitudes: np.ndarray,
    targets: np.ndarray,
    spec: AnsatzSpec,
    values: np.ndarray,
    readout: int | None = None,
) -> tuple[float, np.ndarray]:
    """
    Mean squared error between ez and targets, with its parameter-shift gradient.

    Returns:
        (loss, gradient) where gradient = mean_b 2 (ez_b - t_b) d ez_b / d params.
    """
    batch = np.atleast_2d(amplitudes)
    target = np.asarray(targets, dtype=np.float64).reshape(-1)
    if batch.shape[0] == 0:
        raise ValueError("batch must not be empty")
    prog = build_ansatz(spec)
    obs = Observable.pauli_z(_readout(spec, readout))
    ez = expectations(batch, prog, values, obs)
    residual = ez - target
    jacobian = parameter_shift_jacobian(prog, values, batch, obs)
    loss = float(np.mean(residual**2))
    grad = 2.0 * (residual @ jacobian) / batch.shape[0]
    return loss, grad


def vqc_loss(
    batch: Sequence[tuple[Statevector, int]],
    spec: AnsatzSpec,
    params: ClassifierParams,
    readout: int | None = None,
) -> float:
    """
    Mean over the batch of (ez - label)**2 with labels in {-1, +1}.

    Raises:
        ValueError: If the batch is empty.
    """
    if not batch:
        raise ValueError("batch must not be empty")
    amplitudes = np.stack([state.amplitudes for state, _ in batch])
    labels = np.array([label for _, label in batch], dtype=np.float64)
    ez = vqc_scores(amplitudes, spec, params, readout)
    return float(np.mean((ez - labels) ** 2))
