"""
MCQI: RGB image on 2n+3 qubits.

Layout: qubits 0..2n-1 position |i>, qubits 2n and 2n+1 channel select
(select index s = q[2n] + 2*q[2n+1]; 0=R, 1=G, 2=B, 3=pad), qubit 2n+2 value.
The basis index of (value v, select s, position i) is i + s*4**n + v*4**(n+1).

Normalization is 1/2**(n+1): every pixel block carries squared amplitudes
summing to 4, so the printed 1/(2**n + 1) would not give a unit vector.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from ..sim import CircuitBuilder, CircuitProgram, GateKind, Statevector
from .frqi import DecodeError, check_angles, side_exponent
from .images import MAX_PIXEL, ColorImage

CHANNELS = ("R", "G", "B")
PAD_SELECT = 3


@dataclass(frozen=True)
class McqiAngles:
    """Per-pixel channel angles, each in [0, pi/2]."""

    theta_r: np.ndarray = field(repr=False)
    theta_g: np.ndarray = field(repr=False)
    theta_b: np.ndarray = field(repr=False)

    def __post_init__(self) -> None:
        count = np.asarray(self.theta_r).size
        side_exponent(count)
        for name in ("theta_r", "theta_g", "theta_b"):
            object.__setattr__(self, name, check_angles(getattr(self, name), count))

    @property
    def n(self) -> int:
        return side_exponent(self.theta_r.shape[0])

    @property
    def num_qubits(self) -> int:
        return 2 * self.n + 3

    def stacked(self) -> np.ndarray:
        """Return angles as a (3, 4**n) array in R, G, B order."""
        return np.stack([self.theta_r, self.theta_g, self.theta_b])


def mcqi_angles(img: ColorImage) -> McqiAngles:
    """theta = arccos(pixel / 255) per channel."""
    theta = np.arccos(np.clip(img.pixels.astype(np.float64) / MAX_PIXEL, 0.0, 1.0))
    return McqiAngles(theta[:, 0], theta[:, 1], theta[:, 2])


def mcqi_amplitudes(angles: McqiAngles) -> np.ndarray:
    """Return the raw MCQI amplitude vector."""
    pixels = 4**angles.n
    block = np.zeros((2, 4, pixels), dtype=np.complex128)
    theta = angles.stacked()
    block[0, :3, :] = np.cos(theta)
    block[1, :3, :] = np.sin(theta)
    block[0, PAD_SELECT, :] = 1.0
    return block.reshape(-1) / 2 ** (angles.n + 1)


def mcqi_encode(angles: McqiAngles) -> Statevector:
    """Build the MCQI state directly."""
    return Statevector(angles.num_qubits, mcqi_amplitudes(angles))


def mcqi_circuit(angles: McqiAngles) -> CircuitProgram:
    """
    Synthesize the MCQI preparation circuit.

    H on position and channel-select qubits, then per pixel three
    multi-controlled RY(2 theta) on the value qubit, controlled on the
    position pattern plus the R, G or B select pattern.
    """
    positions = 2 * angles.n
    value = positions + 2
    builder = CircuitBuilder(angles.num_qubits)
    for qubit in range(positions + 2):
        builder.add(GateKind.H, qubit)
    theta = angles.stacked()
    for index in range(theta.shape[1]):
        for select in range(len(CHANNELS)):
            pattern = {qubit: (index >> qubit) & 1 for qubit in range(positions)}
            pattern[positions] = select & 1
            pattern[positions + 1] = (select >> 1) & 1
            builder.controlled(GateKind.RY, value, pattern, (2 * float(theta[select, index]),))
    return builder.build()


def mcqi_decode(state: Statevector, n: int) -> ColorImage:
    """
    Recover the image in the analytic limit.

    p = cos(atan2(|sin branch|, |cos branch|)), pixel = round(255 * p), ties to even.

    Raises:
        ValueError: If the state size does not match 2n+3 qubits.
        DecodeError: If a pixel block carries zero probability.
    """
    if state.num_qubits != 2 * n + 3:
        raise ValueError(f"MCQI state for n={n} needs {2 * n + 3} qubits, got {state.num_qubits}")
    magnitudes = np.abs(state.amplitudes).reshape(2, 4, 4**n)
    totals = (magnitudes**2).sum(axis=(0, 1))
    empty = np.flatnonzero(totals <= 1e-15)
    if empty.size:
        raise DecodeError(f"pixel block {int(empty[0])} has zero probability; not an MCQI state")
    channels = magnitudes[:, :3, :]
    value = np.cos(np.arctan2(channels[1], channels[0]))
    pixels = np.clip(np.rint(value * MAX_PIXEL), 0, MAX_PIXEL)
    return ColorImage(n, pixels.T)
