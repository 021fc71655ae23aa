"""
Observables evaluated exactly from amplitudes (analytic mode, no shots).
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np

from .statevector import Statevector


class ObservableKind(Enum):
    PAULI_Z = "PauliZ"
    ZERO_PROJECTOR = "ZeroProjector"


@dataclass(frozen=True)
class Observable:
    """
    Pauli-Z on one qubit, or the projector onto |0...0> of a qubit subset.

    Attributes:
        kind: Observable kind.
        qubits: One qubit for PauliZ; the (nonempty) subset for ZeroProjector.
    """

    kind: ObservableKind
    qubits: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "qubits", tuple(sorted({int(q) for q in self.qubits})))
        if not self.qubits:
            raise ValueError("observable needs at least one qubit")
        if self.kind is ObservableKind.PAULI_Z and len(self.qubits) != 1:
            raise ValueError(f"PauliZ acts on exactly one qubit, got {self.qubits}")

    @classmethod
    def pauli_z(cls, qubit: int) -> Observable:
        return cls(ObservableKind.PAULI_Z, (qubit,))

    @classmethod
    def zero_projector(cls, qubits: tuple[int, ...] | list[int]) -> Observable:
        return cls(ObservableKind.ZERO_PROJECTOR, tuple(qubits))

    def diagonal(self, num_qubits: int) -> np.ndarray:
        """Return the observable's diagonal in the computational basis."""
        for qubit in self.qubits:
            if not 0 <= qubit < num_qubits:
                raise ValueError(f"qubit index {qubit} out of range for {num_qubits} qubits")
        indices = np.arange(2**num_qubits)
        if self.kind is ObservableKind.PAULI_Z:
            bits = (indices >> self.qubits[0]) & 1
            return 1.0 - 2.0 * bits
        mask = sum(1 << q for q in self.qubits)
        return ((indices & mask) == 0).astype(np.float64)

    def expectation(self, amplitudes: np.ndarray, num_qubits: int) -> np.ndarray:
        """Expectation per state for amplitudes of shape (..., 2**num_qubits)."""
        probs = np.abs(amplitudes) ** 2
        values = probs @ self.diagonal(num_qubits)
        if self.kind is ObservableKind.PAULI_Z:
            return np.clip(values, -1.0, 1.0)
        return np.clip(values, 0.0, 1.0)


def expectation_z(state: Statevector, qubit: int) -> float:
    """
    Pauli-Z expectation of one qubit.

    Returns:
        Value in [-1, 1].

    Raises:
        ValueError: If ``qubit`` is out of range.
    """
    return float(Observable.pauli_z(qubit).expectation(state.amplitudes, state.num_qubits))


def zero_projector_fidelity(state: Statevector, trash: tuple[int, ...] | list[int]) -> float:
    """
    Probability that every trash qubit reads 0, i.e. <0...0|rho_trash|0...0>.

    Raises:
        ValueError: If ``trash`` is empty or holds an out-of-range index.
    """
    if not trash:
        raise ValueError("trash qubit set must not be empty")
    return float(Observable.zero_projector(trash).expectation(state.amplitudes, state.num_qubits))
