"""
Executable circuit programs.

A program is an ordered gate list plus a slot table that maps each trainable
parameter index to one angle of one gate.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass, field

import numpy as np

from .statevector import PARAM_COUNT, GateKind, GateOp, SimulationError, Statevector, apply_op


@dataclass(frozen=True)
class ParamSlot:
    """Location of one trainable angle: gate index and angle position inside that gate."""

    op_index: int
    angle: int


@dataclass(frozen=True)
class CircuitProgram:
    """
    Immutable gate sequence with trainable-parameter slots.

    Attributes:
        num_qubits: Register size.
        ops: Gates in application order.
        param_slots: Slot for trainable parameter j at position j.
    """

    num_qubits: int
    ops: tuple[GateOp, ...] = ()
    param_slots: tuple[ParamSlot, ...] = field(default=())

    def __post_init__(self) -> None:
        object.__setattr__(self, "ops", tuple(self.ops))
        object.__setattr__(self, "param_slots", tuple(self.param_slots))
        for op in self.ops:
            op.validate_for(self.num_qubits)
        seen: set[ParamSlot] = set()
        for slot in self.param_slots:
            if not 0 <= slot.op_index < len(self.ops):
                raise SimulationError(f"param slot references missing gate {slot.op_index}")
            op = self.ops[slot.op_index]
            if not 0 <= slot.angle < PARAM_COUNT[op.kind]:
                raise SimulationError(f"param slot references missing angle {slot.angle} of {op.kind.value}")
            if slot in seen:
                raise SimulationError(f"param slot {slot} bound twice")
            seen.add(slot)

    @property
    def num_params(self) -> int:
        return len(self.param_slots)

    def bind(self, params: Sequence[float] | np.ndarray) -> list[tuple[float, ...]]:
        """
        Substitute trainable parameters into the gate angles.

        Returns:
            Angle tuple per gate, in program order.

        Raises:
            ValueError: If ``params`` length differs from the slot count.
        """
        values = np.asarray(params, dtype=np.float64).reshape(-1)
        if values.shape[0] != self.num_params:
            raise ValueError(f"expected {self.num_params} parameters, got {values.shape[0]}")
        angles = [list(op.params) for op in self.ops]
        for value, slot in zip(values, self.param_slots, strict=True):
            angles[slot.op_index][slot.angle] = float(value)
        return [tuple(a) for a in angles]


class CircuitBuilder:
    """Incremental construction of a CircuitProgram."""

    def __init__(self, num_qubits: int) -> None:
        self.num_qubits = num_qubits
        self._ops: list[GateOp] = []
        self._slots: list[ParamSlot] = []

    def add(self, kind: GateKind, target: int, controls: Sequence[int] = (), params: Sequence[float] = ()) -> int:
        """Append a fixed gate and return its index."""
        self._ops.append(GateOp(kind, (target,), tuple(controls), tuple(params)))
        return len(self._ops) - 1

    def add_trainable(self, kind: GateKind, target: int, controls: Sequence[int] = ()) -> int:
        """Append a gate whose every angle is a fresh trainable parameter."""
        count = PARAM_COUNT[kind]
        index = self.add(kind, target, controls, (0.0,) * count)
        self._slots.extend(ParamSlot(index, angle) for angle in range(count))
        return index

    def controlled(self, kind: GateKind, target: int, pattern: dict[int, int], params: Sequence[float] = ()) -> None:
        """
        Append a gate controlled on an arbitrary bit pattern.

        Controls with required value 0 are X-conjugated so the gate itself
        keeps all-ones control semantics.
        """
        flips = [qubit for qubit, bit in sorted(pattern.items()) if bit == 0]
        for qubit in flips:
            self.add(GateKind.X, qubit)
        self.add(kind, target, sorted(pattern), params)
        for qubit in flips:
            self.add(GateKind.X, qubit)

    def build(self) -> CircuitProgram:
        return CircuitProgram(self.num_qubits, tuple(self._ops), tuple(self._slots))


def run_amplitudes(amplitudes: np.ndarray, prog: CircuitProgram, params: Sequence[float] | np.ndarray) -> np.ndarray:
    """Run ``prog`` on a batch of amplitude vectors of shape (..., 2**num_qubits)."""
    angles = prog.bind(params)
    out = np.asarray(amplitudes, dtype=np.complex128)
    for op, op_angles in zip(prog.ops, angles, strict=True):
        out = apply_op(out, op, prog.num_qubits, op_angles)
    return out


def run_circuit(state: Statevector, prog: CircuitProgram, params: Sequence[float] | np.ndarray) -> Statevector:
    """
    Execute a program on a state.

    Args:
        state: Input state; its size must match the program.
        prog: Program to run.
        params: Trainable parameter values, one per slot.

    Returns:
        Output state.

    Raises:
        ValueError: On register-size or parameter-length mismatch.
    """
    if state.num_qubits != prog.num_qubits:
        raise ValueError(f"program acts on {prog.num_qubits} qubits, state has {state.num_qubits}")
    return Statevector(state.num_qubits, run_amplitudes(state.amplitudes, prog, params))
