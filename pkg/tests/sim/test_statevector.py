import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from src.sim import GateKind, GateOp, SimulationError, Statevector, apply_gate, apply_op
from src.sim.statevector import u3_matrix

SQRT_HALF = 1 / np.sqrt(2)


def _random_op(rng: np.random.Generator, num_qubits: int) -> GateOp:
    kinds = [GateKind.H, GateKind.X, GateKind.RY, GateKind.U3]
    if num_qubits > 1:
        kinds.append(GateKind.CNOT)
    kind = kinds[rng.integers(len(kinds))]
    qubits = rng.permutation(num_qubits)
    target = int(qubits[0])
    if kind is GateKind.CNOT:
        return GateOp(kind, (target,), (int(qubits[1]),))
    controls: tuple[int, ...] = ()
    if kind is GateKind.RY and num_qubits > 1:
        controls = tuple(int(q) for q in qubits[1 : 1 + rng.integers(num_qubits)])
    params = tuple(rng.uniform(-np.pi, np.pi, size=3 if kind is GateKind.U3 else int(kind is GateKind.RY)))
    return GateOp(kind, (target,), controls, params)


def _random_state(rng: np.random.Generator, num_qubits: int) -> Statevector:
    amps = rng.normal(size=2**num_qubits) + 1j * rng.normal(size=2**num_qubits)
    return Statevector(num_qubits, amps / np.linalg.norm(amps))


class TestStatevector:
    def test_zero_state(self) -> None:
        state = Statevector.zero(3)
        assert state.amplitudes[0] == 1
        assert np.count_nonzero(state.amplitudes) == 1

    def test_amplitudes_are_read_only(self) -> None:
        state = Statevector.zero(1)
        with pytest.raises(ValueError):
            state.amplitudes[0] = 0

    def test_wrong_length_rejected(self) -> None:
        with pytest.raises(ValueError, match="expected 4 amplitudes"):
            Statevector(2, np.array([1.0, 0.0]))

    def test_unnormalized_rejected(self) -> None:
        with pytest.raises(ValueError, match="not normalized"):
            Statevector(1, np.array([1.0, 1.0]))

    def test_basis_index_out_of_range(self) -> None:
        with pytest.raises(ValueError, match="out of range"):
            Statevector.basis(2, 4)


class TestApplyGate:
    def test_hadamard_on_zero(self) -> None:
        out = apply_gate(Statevector.zero(1), GateOp(GateKind.H, (0,)))
        np.testing.assert_allclose(out.amplitudes, [SQRT_HALF, SQRT_HALF], atol=1e-12)

    def test_ry_pi_flips_zero(self) -> None:
        out = apply_gate(Statevector.zero(1), GateOp(GateKind.RY, (0,), params=(np.pi,)))
        np.testing.assert_allclose(np.abs(out.amplitudes), [0.0, 1.0], atol=1e-12)

    def test_cnot_flips_target_when_control_set(self) -> None:
        # |01> in qubit-0-least-significant order is basis index 1
        out = apply_gate(Statevector.basis(2, 1), GateOp(GateKind.CNOT, (1,), (0,)))
        np.testing.assert_allclose(out.amplitudes, Statevector.basis(2, 3).amplitudes)

    def test_cnot_idle_when_control_clear(self) -> None:
        out = apply_gate(Statevector.basis(2, 2), GateOp(GateKind.CNOT, (1,), (0,)))
        np.testing.assert_allclose(out.amplitudes, Statevector.basis(2, 2).amplitudes)

    def test_x_on_high_qubit(self) -> None:
        out = apply_gate(Statevector.zero(3), GateOp(GateKind.X, (2,)))
        np.testing.assert_allclose(out.amplitudes, Statevector.basis(3, 4).amplitudes)

    def test_out_of_range_index(self) -> None:
        with pytest.raises(SimulationError, match="out of range"):
            apply_gate(Statevector.zero(2), GateOp(GateKind.H, (2,)))

    def test_overlapping_target_and_control(self) -> None:
        with pytest.raises(SimulationError, match="overlap"):
            GateOp(GateKind.RY, (1,), (1,), (0.3,))

    def test_wrong_param_count(self) -> None:
        with pytest.raises(SimulationError, match="angle"):
            GateOp(GateKind.U3, (0,), params=(0.1,))

    def test_cnot_needs_one_control(self) -> None:
        with pytest.raises(SimulationError, match="one control"):
            GateOp(GateKind.CNOT, (0,))

    def test_batched_application_matches_single(self) -> None:
        rng = np.random.default_rng(3)
        states = [_random_state(rng, 3) for _ in range(4)]
        op = GateOp(GateKind.RY, (0,), (2,), (0.7,))
        batch = apply_op(np.stack([s.amplitudes for s in states]), op, 3)
        for row, state in zip(batch, states, strict=True):
            np.testing.assert_allclose(row, apply_gate(state, op).amplitudes, atol=1e-12)


def test_u3_matrix_is_unitary() -> None:
    matrix = u3_matrix(0.4, 1.1, -2.3)
    np.testing.assert_allclose(matrix.conj().T @ matrix, np.eye(2), atol=1e-12)


@pytest.mark.parametrize(
    ("op", "inverse"),
    [
        (GateOp(GateKind.H, (1,)), GateOp(GateKind.H, (1,))),
        (GateOp(GateKind.RY, (0,), (2,), (0.83,)), GateOp(GateKind.RY, (0,), (2,), (-0.83,))),
        (GateOp(GateKind.U3, (2,), params=(0.3, 1.2, -0.7)), GateOp(GateKind.U3, (2,), params=(-0.3, 0.7, -1.2))),
        (GateOp(GateKind.CNOT, (0,), (1,)), GateOp(GateKind.CNOT, (0,), (1,))),
    ],
)
def test_gate_then_inverse_is_identity(op: GateOp, inverse: GateOp) -> None:
    state = _random_state(np.random.default_rng(11), 3)
    out = apply_gate(apply_gate(state, op), inverse)
    np.testing.assert_allclose(out.amplitudes, state.amplitudes, atol=1e-12)


@pytest.mark.parametrize("num_qubits", [2, 3, 4, 5])
def test_controlled_ry_is_identity_unless_all_controls_set(num_qubits: int) -> None:
    theta = 1.234
    target = num_qubits - 1
    controls = tuple(range(num_qubits - 1))
    op = GateOp(GateKind.RY, (target,), controls, (theta,))
    for bits in itertools.product((0, 1), repeat=num_qubits):
        index = sum(bit << q for q, bit in enumerate(bits))
        out = apply_gate(Statevector.basis(num_qubits, index), op)
        if all(bits[c] for c in controls):
            assert abs(out.amplitudes[index]) == pytest.approx(abs(np.cos(theta / 2)))
        else:
            np.testing.assert_array_equal(out.amplitudes, Statevector.basis(num_qubits, index).amplitudes)


@settings(max_examples=60, deadline=None)
@given(seed=st.integers(0, 2**32 - 1), num_qubits=st.integers(1, 9), depth=st.integers(0, 50))
def test_random_circuits_preserve_norm(seed: int, num_qubits: int, depth: int) -> None:
    rng = np.random.default_rng(seed)
    state = _random_state(rng, num_qubits)
    for _ in range(depth):
        state = apply_gate(state, _random_op(rng, num_qubits))
    assert abs(np.linalg.norm(state.amplitudes) - 1) <= 1e-10
