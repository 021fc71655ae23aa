"""
Autoencoder classifier.

The ansatz is trained to compress positive-class states into the latent
qubit; the zero-state fidelity of the trash qubits is the score.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass

import numpy as np

from ..sim import Observable, Statevector, expectations, parameter_shift_jacobian
from .ansatz import AnsatzSpec, build_ansatz
from .params import ClassifierParams


@dataclass(frozen=True)
class AcSpec:
    """
    Attributes:
        num_qubits: N.
        layers: l.
        latent: Latent qubit; defaults to the highest qubit (FRQI color / MCQI value qubit).
        entangle: CNOT chain after each rotation layer.
    """

    num_qubits: int
    layers: int = 1
    latent: int | None = None
    entangle: bool = True

    def __post_init__(self) -> None:
        if self.num_qubits < 2:
            raise ValueError(f"an autoencoder needs at least 2 qubits, got {self.num_qubits}")
        latent = self.num_qubits - 1 if self.latent is None else self.latent
        if not 0 <= latent < self.num_qubits:
            raise ValueError(f"latent qubit {latent} out of range for {self.num_qubits} qubits")
        object.__setattr__(self, "latent", latent)

    @property
    def trash(self) -> tuple[int, ...]:
        """All qubits except the latent one."""
        return tuple(q for q in range(self.num_qubits) if q != self.latent)

    @property
    def ansatz(self) -> AnsatzSpec:
        return AnsatzSpec(self.num_qubits, self.layers, self.entangle)

    @property
    def num_params(self) -> int:
        return self.ansatz.num_params

    def observable(self) -> Observable:
        return Observable.zero_projector(self.trash)


def ac_fidelities(amplitudes: np.ndarray, spec: AcSpec, params: ClassifierParams) -> np.ndarray:
    """Trash-zero fidelity for every state of a (B, 2**N) batch."""
    params.check_length(spec.num_params)
    return np.atleast_1d(expectations(np.atleast_2d(amplitudes), build_ansatz(spec.ansatz), params.values, spec.observable()))


def ac_fidelity(state: Statevector, spec: AcSpec, params: ClassifierParams) -> float:
    """Run the ansatz and return the trash qubits' zero-state probability, in [0, 1]."""
    if state.num_qubits != spec.num_qubits:
        raise ValueError(f"autoencoder acts on {spec.num_qubits} qubits, state has {state.num_qubits}")
    return float(ac_fidelities(state.amplitudes, spec, params)[0])


def ac_loss_and_grad(amplitudes: np.ndarray, spec: AcSpec, values: np.ndarray) -> tuple[float, np.ndarray]:
    """
    1 - mean fidelity over a positive-class batch, with its parameter-shift gradient.
    """
    batch = np.atleast_2d(amplitudes)
    if batch.shape[0] == 0:
        raise ValueError("batch must not be empty")
    prog = build_ansatz(spec.ansatz)
    obs = spec.observable()
    fidelity = expectations(batch, prog, values, obs)
    jacobian = parameter_shift_jacobian(prog, values, batch, obs)
    return float(1.0 - np.mean(fidelity)), -jacobian.mean(axis=0)


def ac_loss(positive_batch: Sequence[Statevector], spec: AcSpec, params: ClassifierParams) -> float:
    """
    1 - mean trash fidelity over positive-class states.

    Raises:
        ValueError: If the batch is empty.
    """
    if not positive_batch:
        raise ValueError("batch must not be empty")
    amplitudes = np.stack([state.amplitudes for state in positive_batch])
    return float(1.0 - np.mean(ac_fidelities(amplitudes, spec, params)))


def ac_classify(fidelity: float, threshold: float) -> int:
    """+1 (positive) iff fidelity > threshold, else -1."""
    return 1 if fidelity > threshold else -1
