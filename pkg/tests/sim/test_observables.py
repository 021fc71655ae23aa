import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from src.sim import Observable, Statevector, expectation_z, zero_projector_fidelity

PLUS = Statevector(1, np.array([1, 1]) / np.sqrt(2))


def test_expectation_z_basis_states() -> None:
    assert expectation_z(Statevector.zero(1), 0) == 1.0
    assert expectation_z(Statevector.basis(1, 1), 0) == -1.0


def test_expectation_z_plus_state() -> None:
    assert expectation_z(PLUS, 0) == pytest.approx(0.0, abs=1e-12)


def test_expectation_z_reads_requested_qubit() -> None:
    # qubit 1 set, qubit 0 clear
    state = Statevector.basis(2, 2)
    assert expectation_z(state, 0) == 1.0
    assert expectation_z(state, 1) == -1.0


def test_expectation_z_out_of_range() -> None:
    with pytest.raises(ValueError, match="out of range"):
        expectation_z(Statevector.zero(1), 1)


def test_fidelity_all_zero_trash() -> None:
    assert zero_projector_fidelity(Statevector.zero(2), [0, 1]) == 1.0


def test_fidelity_trash_qubit_set() -> None:
    assert zero_projector_fidelity(Statevector.basis(2, 1), [0]) == 0.0


def test_fidelity_superposed_trash() -> None:
    assert zero_projector_fidelity(PLUS, [0]) == pytest.approx(0.5)


def test_fidelity_empty_trash() -> None:
    with pytest.raises(ValueError, match="must not be empty"):
        zero_projector_fidelity(Statevector.zero(1), [])


def test_pauli_z_takes_one_qubit() -> None:
    with pytest.raises(ValueError, match="exactly one qubit"):
        Observable(Observable.pauli_z(0).kind, (0, 1))


@settings(max_examples=100, deadline=None)
@given(seed=st.integers(0, 2**32 - 1), num_qubits=st.integers(1, 6))
def test_observables_stay_in_range(seed: int, num_qubits: int) -> None:
    rng = np.random.default_rng(seed)
    amps = rng.normal(size=2**num_qubits) + 1j * rng.normal(size=2**num_qubits)
    state = Statevector(num_qubits, amps / np.linalg.norm(amps))
    trash = [q for q in range(num_qubits) if rng.random() < 0.5] or [0]

    for qubit in range(num_qubits):
        assert -1.0 <= expectation_z(state, qubit) <= 1.0
    assert 0.0 <= zero_projector_fidelity(state, trash) <= 1.0
