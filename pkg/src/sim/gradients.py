"""
Parameter-shift gradients.

Every trainable slot must sit on an uncontrolled RY or U3 angle: their
generators have eigenvalues ±1/2, which makes the two-term rule exact.
"""

from __future__ import annotations

from collections import defaultdict
from collections.abc import Sequence

import numpy as np

from .circuit import CircuitProgram, run_amplitudes
from .observables import Observable
from .statevector import GateKind, SimulationError, Statevector, apply_matrix

SHIFT = np.pi / 2
_SHIFTABLE = (GateKind.RY, GateKind.U3)


def check_shiftable(prog: CircuitProgram) -> None:
    """
    Verify that the two-term shift rule is exact for every slot of ``prog``.

    Raises:
        SimulationError: If a slot is attached to a non-rotation or a controlled gate.
    """
    for index, slot in enumerate(prog.param_slots):
        op = prog.ops[slot.op_index]
        if op.kind not in _SHIFTABLE:
            raise SimulationError(f"parameter {index} is attached to non-rotation gate {op.kind.value}")
        if op.controls:
            raise SimulationError(f"parameter {index} is attached to a controlled {op.kind.value}; the two-term shift rule does not apply")


def expectations(amplitudes: np.ndarray, prog: CircuitProgram, params: Sequence[float] | np.ndarray, obs: Observable) -> np.ndarray:
    """Run ``prog`` on a batch of states and return the observable per state."""
    return obs.expectation(run_amplitudes(amplitudes, prog, params), prog.num_qubits)


def parameter_shift_jacobian(
    prog: CircuitProgram,
    params: Sequence[float] | np.ndarray,
    amplitudes: np.ndarray,
    obs: Observable,
) -> np.ndarray:
    """
    Derivative of the observable for every input state and every parameter.

    One forward run gives the output batch. The sweep then walks the gates
    backwards, undoing each gate to recover the batch that enters it and
    growing the dense suffix unitary of the gates after it. A shifted slot
    costs one gate on the entering batch and one matmul with the suffix.

    Args:
        prog: Program with shiftable slots only.
        params: Parameter vector.
        amplitudes: Input batch, shape (B, 2**num_qubits).
        obs: Observable measured after the program.

    Returns:
        Array of shape (B, num_params).
    """
    check_shiftable(prog)
    angles = prog.bind(params)
    batch = np.atleast_2d(np.asarray(amplitudes, dtype=np.complex128))
    num_qubits = prog.num_qubits

    slots_by_op: dict[int, list[tuple[int, int]]] = defaultdict(list)
    for j, slot in enumerate(prog.param_slots):
        slots_by_op[slot.op_index].append((j, slot.angle))

    jacobian = np.zeros((batch.shape[0], prog.num_params), dtype=np.float64)
    if not slots_by_op:
        return jacobian

    # Rows of ``suffix`` are a batch: x @ suffix.T runs every gate after the current one.
    entering = run_amplitudes(batch, prog, np.asarray(params, dtype=np.float64))
    suffix = np.eye(2**num_qubits, dtype=np.complex128)
    first = min(slots_by_op)
    for k in range(len(prog.ops) - 1, first - 1, -1):
        op = prog.ops[k]
        target, controls = op.targets[0], op.controls
        matrix = op.matrix(angles[k])
        entering = apply_matrix(entering, matrix.conj().T, target, controls, num_qubits)
        for j, angle in slots_by_op.get(k, ()):
            values = []
            for sign in (1.0, -1.0):
                shifted = list(angles[k])
                shifted[angle] += sign * SHIFT
                moved = apply_matrix(entering, op.matrix(tuple(shifted)), target, controls, num_qubits)
                values.append(obs.expectation(moved @ suffix.T, num_qubits))
            jacobian[:, j] = (values[0] - values[1]) / 2
        suffix = apply_matrix(suffix, matrix.T, target, controls, num_qubits)
    return jacobian


def parameter_shift_gradient(
    prog: CircuitProgram,
    params: Sequence[float] | np.ndarray,
    state: Statevector,
    obs: Observable,
) -> np.ndarray:
    """
    Gradient of <obs> after running ``prog`` on ``state``.

    Component j is [f(params_j + pi/2) - f(params_j - pi/2)] / 2.

    Raises:
        SimulationError: If a slot is not shiftable.
        ValueError: On parameter-length or register-size mismatch.
    """
    if state.num_qubits != prog.num_qubits:
        raise ValueError(f"program acts on {prog.num_qubits} qubits, state has {state.num_qubits}")
    return parameter_shift_jacobian(prog, params, state.amplitudes[np.newaxis, :], obs)[0]
