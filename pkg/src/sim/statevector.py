"""
Dense statevector and gate application.

Basis index bit k holds qubit k (qubit 0 is the least significant bit).
Kernels accept amplitude arrays of shape ``(..., 2**num_qubits)`` so a whole
batch of states moves through one numpy call per gate.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

import numpy as np

NORM_TOLERANCE = 1e-10


class SimulationError(ValueError):
    """Raised when a gate or circuit cannot be applied to a state."""

    pass


class GateKind(Enum):
    """Supported gate kinds."""

    H = "H"
    X = "X"
    RY = "RY"
    U3 = "U3"
    CNOT = "CNOT"


PARAM_COUNT = {
    GateKind.H: 0,
    GateKind.X: 0,
    GateKind.RY: 1,
    GateKind.U3: 3,
    GateKind.CNOT: 0,
}

_HADAMARD = np.array([[1, 1], [1, -1]], dtype=np.complex128) / np.sqrt(2)
_PAULI_X = np.array([[0, 1], [1, 0]], dtype=np.complex128)


def ry_matrix(theta: float) -> np.ndarray:
    """Return the RY(theta) rotation matrix."""
    c = np.cos(theta / 2)
    s = np.sin(theta / 2)
    return np.array([[c, -s], [s, c]], dtype=np.complex128)


def u3_matrix(theta: float, phi: float, lam: float) -> np.ndarray:
    """
    Return the general single-qubit rotation U3(theta, phi, lambda).

    Equals RZ(phi)·RY(theta)·RZ(lambda) up to the global phase e^{i(phi+lambda)/2},
    so each angle can be shifted independently for gradients.
    """
    c = np.cos(theta / 2)
    s = np.sin(theta / 2)
    return np.array(
        [
            [c, -np.exp(1j * lam) * s],
            [np.exp(1j * phi) * s, np.exp(1j * (phi + lam)) * c],
        ],
        dtype=np.complex128,
    )


@dataclass(frozen=True)
class Statevector:
    """
    Normalized amplitude vector over ``num_qubits`` qubits.

    Attributes:
        num_qubits: Number of qubits (>= 1).
        amplitudes: Read-only complex128 array of length 2**num_qubits.
    """

    num_qubits: int
    amplitudes: np.ndarray = field(repr=False)

    def __post_init__(self) -> None:
        if self.num_qubits < 1:
            raise ValueError(f"num_qubits must be >= 1, got {self.num_qubits}")
        amps = np.array(self.amplitudes, dtype=np.complex128).reshape(-1)
        if amps.shape[0] != 2**self.num_qubits:
            raise ValueError(f"expected {2**self.num_qubits} amplitudes for {self.num_qubits} qubits, got {amps.shape[0]}")
        norm = float(np.linalg.norm(amps))
        if abs(norm - 1.0) > NORM_TOLERANCE:
            raise ValueError(f"state is not normalized (norm={norm!r})")
        amps.setflags(write=False)
        object.__setattr__(self, "amplitudes", amps)

    @classmethod
    def zero(cls, num_qubits: int) -> Statevector:
        """Return |0...0>."""
        return cls.basis(num_qubits, 0)

    @classmethod
    def basis(cls, num_qubits: int, index: int) -> Statevector:
        """Return the computational basis state |index>."""
        if not 0 <= index < 2**num_qubits:
            raise ValueError(f"basis index {index} out of range for {num_qubits} qubits")
        amps = np.zeros(2**num_qubits, dtype=np.complex128)
        amps[index] = 1.0
        return cls(num_qubits, amps)

    def probabilities(self) -> np.ndarray:
        """Return |amplitude|^2 per basis state."""
        return np.abs(self.amplitudes) ** 2


@dataclass(frozen=True)
class GateOp:
    """
    One symbolic gate.

    Attributes:
        kind: Gate kind.
        targets: Target qubits (exactly one for every supported kind).
        controls: Control qubits; the action is gated on all of them being 1.
        params: Angles in radians (RY: 1, U3: 3, otherwise none).
    """

    kind: GateKind
    targets: tuple[int, ...]
    controls: tuple[int, ...] = ()
    params: tuple[float, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "targets", tuple(int(q) for q in self.targets))
        object.__setattr__(self, "controls", tuple(int(q) for q in self.controls))
        object.__setattr__(self, "params", tuple(float(p) for p in self.params))
        if len(self.targets) != 1:
            raise SimulationError(f"{self.kind.value} takes exactly one target, got {self.targets}")
        if len(self.params) != PARAM_COUNT[self.kind]:
            raise SimulationError(f"{self.kind.value} takes {PARAM_COUNT[self.kind]} angle(s), got {len(self.params)}")
        if self.kind is GateKind.CNOT and len(self.controls) != 1:
            raise SimulationError(f"CNOT takes exactly one control, got {self.controls}")
        qubits = self.targets + self.controls
        if len(set(qubits)) != len(qubits):
            raise SimulationError(f"targets {self.targets} and controls {self.controls} overlap")

    def matrix(self, params: tuple[float, ...] | None = None) -> np.ndarray:
        """Return the 2x2 target matrix, optionally with substituted angles."""
        angles = self.params if params is None else params
        if self.kind is GateKind.H:
            return _HADAMARD
        if self.kind in (GateKind.X, GateKind.CNOT):
            return _PAULI_X
        if self.kind is GateKind.RY:
            return ry_matrix(angles[0])
        return u3_matrix(angles[0], angles[1], angles[2])

    def validate_for(self, num_qubits: int) -> None:
        """Check that every qubit index exists in a register of ``num_qubits``."""
        for qubit in self.targets + self.controls:
            if not 0 <= qubit < num_qubits:
                raise SimulationError(f"qubit index {qubit} out of range for {num_qubits} qubits")


def _axis(qubit: int, num_qubits: int) -> int:
    # Axis 0 is the batch axis; the most significant qubit sits right after it.
    return num_qubits - qubit


def apply_matrix(amplitudes: np.ndarray, matrix: np.ndarray, target: int, controls: tuple[int, ...], num_qubits: int) -> np.ndarray:
    """
    Apply a (multi-)controlled 2x2 unitary to a batch of amplitude vectors.

    Args:
        amplitudes: Array of shape (..., 2**num_qubits).
        matrix: 2x2 unitary acting on ``target``.
        target: Target qubit.
        controls: Control qubits (all must be 1 for the action to apply).
        num_qubits: Register size.

    Returns:
        New array with the same shape as ``amplitudes``.
    """
    lead_shape = amplitudes.shape[:-1]
    psi = np.array(amplitudes, dtype=np.complex128).reshape((-1,) + (2,) * num_qubits)

    index: list[int | slice] = [slice(None)] * (num_qubits + 1)
    for control in controls:
        index[_axis(control, num_qubits)] = 1
    view = psi[tuple(index)]

    target_axis = _axis(target, num_qubits)
    target_axis -= sum(1 for control in controls if _axis(control, num_qubits) < target_axis)

    moved = np.moveaxis(view, target_axis, -1)
    view[...] = np.moveaxis(moved @ matrix.T, -1, target_axis)
    return psi.reshape(lead_shape + (2**num_qubits,))


def apply_op(amplitudes: np.ndarray, op: GateOp, num_qubits: int, params: tuple[float, ...] | None = None) -> np.ndarray:
    """Apply ``op`` to a batch of amplitude vectors, optionally substituting its angles."""
    return apply_matrix(amplitudes, op.matrix(params), op.targets[0], op.controls, num_qubits)


def apply_gate(state: Statevector, op: GateOp) -> Statevector:
    """
    Apply one gate to a state.

    Args:
        state: Input state.
        op: Gate to apply.

    Returns:
        New normalized state.

    Raises:
        SimulationError: If a qubit index is out of range.
    """
    op.validate_for(state.num_qubits)
    return Statevector(state.num_qubits, apply_op(state.amplitudes, op, state.num_qubits))
