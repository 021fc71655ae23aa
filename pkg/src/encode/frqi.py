"""
FRQI: grayscale image on 2n+1 qubits.

Qubits 0..2n-1 hold the pixel position |i>, qubit 2n is the color qubit
carrying cos(theta_i)|0> + sin(theta_i)|1>.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from ..sim import CircuitBuilder, CircuitProgram, GateKind, Statevector
from .images import MAX_PIXEL, GrayImage

HALF_PI = np.pi / 2


class DecodeError(ValueError):
    """Raised when a state does not carry the structure expected by a decoder."""

    pass


def check_angles(theta: np.ndarray, expected: int) -> np.ndarray:
    """Validate an angle array against length and the [0, pi/2] range."""
    angles = np.asarray(theta, dtype=np.float64).reshape(-1)
    if angles.shape[0] != expected:
        raise ValueError(f"expected {expected} angles, got {angles.shape[0]}")
    if angles.size and (angles.min() < 0 or angles.max() > HALF_PI + 1e-12):
        raise ValueError("angles must lie in [0, pi/2]")
    angles.setflags(write=False)
    return angles


def side_exponent(count: int) -> int:
    """Return n such that count == 4**n."""
    n = int(round(np.log(count) / np.log(4))) if count > 0 else 0
    if n < 1 or 4**n != count:
        raise ValueError(f"{count} pixels is not 4**n for any n >= 1")
    return n


@dataclass(frozen=True)
class FrqiAngles:
    """Per-pixel rotation angles theta_i in [0, pi/2]."""

    theta: np.ndarray = field(repr=False)

    def __post_init__(self) -> None:
        raw = np.asarray(self.theta).reshape(-1)
        object.__setattr__(self, "theta", check_angles(raw, raw.shape[0]))
        side_exponent(raw.shape[0])

    @property
    def n(self) -> int:
        return side_exponent(self.theta.shape[0])

    @property
    def num_qubits(self) -> int:
        return 2 * self.n + 1


def frqi_angles(img: GrayImage) -> FrqiAngles:
    """Scale pixels linearly onto [0, pi/2]: theta = pixel / 255 * pi / 2."""
    return FrqiAngles(img.pixels.astype(np.float64) / MAX_PIXEL * HALF_PI)


def frqi_amplitudes(angles: FrqiAngles) -> np.ndarray:
    """Return the raw FRQI amplitude vector."""
    scale = 1.0 / 2**angles.n
    return np.concatenate([np.cos(angles.theta), np.sin(angles.theta)]).astype(np.complex128) * scale


def frqi_encode(angles: FrqiAngles) -> Statevector:
    """
    Build the FRQI state directly.

    Amplitude at (color=0, i) is cos(theta_i)/2**n and at (color=1, i) is sin(theta_i)/2**n.
    """
    return Statevector(angles.num_qubits, frqi_amplitudes(angles))


def frqi_circuit(angles: FrqiAngles) -> CircuitProgram:
    """
    Synthesize the FRQI preparation circuit.

    H on every position qubit, then one 2n-controlled RY(2 theta_i) on the
    color qubit per pixel, with controls selecting position |i>.
    """
    positions = 2 * angles.n
    builder = CircuitBuilder(angles.num_qubits)
    for qubit in range(positions):
        builder.add(GateKind.H, qubit)
    for index, theta in enumerate(angles.theta):
        pattern = {qubit: (index >> qubit) & 1 for qubit in range(positions)}
        builder.controlled(GateKind.RY, positions, pattern, (2 * float(theta),))
    return builder.build()


def frqi_decode(state: Statevector, n: int) -> GrayImage:
    """
    Recover the image in the analytic limit.

    theta_i = atan2(sqrt P(color=1, i), sqrt P(color=0, i)); pixel = round(theta_i * 255 / (pi/2)),
    ties to even.

    Raises:
        ValueError: If the state size does not match 2n+1 qubits.
        DecodeError: If a position carries zero probability.
    """
    if state.num_qubits != 2 * n + 1:
        raise ValueError(f"FRQI state for n={n} needs {2 * n + 1} qubits, got {state.num_qubits}")
    probs = state.probabilities().reshape(2, 4**n)
    totals = probs.sum(axis=0)
    empty = np.flatnonzero(totals <= 1e-15)
    if empty.size:
        raise DecodeError(f"position {int(empty[0])} has zero probability; not an FRQI state")
    theta = np.arctan2(np.sqrt(probs[1]), np.sqrt(probs[0]))
    pixels = np.clip(np.rint(theta * MAX_PIXEL / HALF_PI), 0, MAX_PIXEL)
    return GrayImage(n, pixels)
