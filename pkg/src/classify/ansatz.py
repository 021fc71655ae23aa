"""
Layered variational ansatz: U3 on every qubit, then a CNOT chain k -> k+1.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from ..sim import CircuitBuilder, CircuitProgram, GateKind

ANGLES_PER_QUBIT = 3


@dataclass(frozen=True)
class AnsatzSpec:
    """
    Shape of the variational ansatz.

    Attributes:
        num_qubits: N.
        layers: l.
        entangle: CNOT chain after each rotation layer; disabled only to isolate rotations.
    """

    num_qubits: int
    layers: int
    entangle: bool = True

    def __post_init__(self) -> None:
        if self.num_qubits < 1:
            raise ValueError(f"num_qubits must be >= 1, got {self.num_qubits}")
        if self.layers < 1:
            raise ValueError(f"layers must be >= 1, got {self.layers}")

    @property
    def num_params(self) -> int:
        """3 * N * l."""
        return ANGLES_PER_QUBIT * self.num_qubits * self.layers


@lru_cache(maxsize=64)
def build_ansatz(spec: AnsatzSpec) -> CircuitProgram:
    """
    Build the ansatz program.

    Parameters are laid out layer-major, then qubit, then angle
    (theta, phi, lambda of U3). For N = 1 the CNOT layer is empty.
    """
    builder = CircuitBuilder(spec.num_qubits)
    for _ in range(spec.layers):
        for qubit in range(spec.num_qubits):
            builder.add_trainable(GateKind.U3, qubit)
        if spec.entangle:
            for qubit in range(spec.num_qubits - 1):
                builder.add(GateKind.CNOT, qubit + 1, controls=(qubit,))
    return builder.build()
