"""
Exact dense statevector simulation.

Gate application, circuit execution, observables and parameter-shift gradients.
"""

from .circuit import CircuitBuilder, CircuitProgram, ParamSlot, run_amplitudes, run_circuit
from .gradients import check_shiftable, expectations, parameter_shift_gradient, parameter_shift_jacobian
from .observables import Observable, ObservableKind, expectation_z, zero_projector_fidelity
from .statevector import GateKind, GateOp, SimulationError, Statevector, apply_gate, apply_matrix, apply_op

__all__ = [
    "CircuitBuilder",
    "CircuitProgram",
    "GateKind",
    "GateOp",
    "Observable",
    "ObservableKind",
    "ParamSlot",
    "SimulationError",
    "Statevector",
    "apply_gate",
    "apply_matrix",
    "apply_op",
    "check_shiftable",
    "expectation_z",
    "expectations",
    "parameter_shift_gradient",
    "parameter_shift_jacobian",
    "run_amplitudes",
    "run_circuit",
    "zero_projector_fidelity",
]
