import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st
from src.classify import AnsatzSpec, build_ansatz
from src.sim import GateKind, Statevector, run_circuit


def _random_state(seed: int, num_qubits: int) -> Statevector:
    rng = np.random.default_rng(seed)
    amps = rng.normal(size=2**num_qubits) + 1j * rng.normal(size=2**num_qubits)
    return Statevector(num_qubits, amps / np.linalg.norm(amps))


def test_four_qubits_two_layers_has_24_slots() -> None:
    expected_slots = 24
    assert build_ansatz(AnsatzSpec(4, 2)).num_params == expected_slots


def test_single_qubit_has_no_cnots() -> None:
    prog = build_ansatz(AnsatzSpec(1, 1))
    expected_slots = 3
    assert prog.num_params == expected_slots
    assert all(op.kind is not GateKind.CNOT for op in prog.ops)


def test_cnot_chain_runs_upward() -> None:
    prog = build_ansatz(AnsatzSpec(4, 1))
    cnots = [(op.controls, op.targets) for op in prog.ops if op.kind is GateKind.CNOT]
    assert cnots == [((0,), (1,)), ((1,), (2,)), ((2,), (3,))]


@pytest.mark.parametrize("field", ["num_qubits", "layers"])
def test_spec_rejects_non_positive_sizes(field: str) -> None:
    kwargs = {"num_qubits": 2, "layers": 1, field: 0}
    with pytest.raises(ValueError, match=field):
        AnsatzSpec(**kwargs)


@given(num_qubits=st.integers(1, 11), layers=st.integers(1, 6))
def test_parameter_count_is_three_per_qubit_per_layer(num_qubits: int, layers: int) -> None:
    spec = AnsatzSpec(num_qubits, layers)
    assert spec.num_params == 3 * num_qubits * layers
    assert build_ansatz(spec).num_params == spec.num_params


@pytest.mark.parametrize("seed", range(5))
def test_zero_params_without_entanglement_is_identity(seed: int) -> None:
    spec = AnsatzSpec(3, 2, entangle=False)
    state = _random_state(seed, 3)
    out = run_circuit(state, build_ansatz(spec), np.zeros(spec.num_params))
    np.testing.assert_allclose(out.amplitudes, state.amplitudes, atol=1e-12)


def test_zero_params_leaves_only_the_cnot_chain() -> None:
    # |q0=1> -> CNOT(0,1) -> CNOT(1,2): every qubit ends up set
    spec = AnsatzSpec(3, 1)
    out = run_circuit(Statevector.basis(3, 0b001), build_ansatz(spec), np.zeros(spec.num_params))
    np.testing.assert_allclose(out.probabilities()[0b111], 1.0)
