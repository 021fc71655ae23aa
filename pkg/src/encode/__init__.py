"""
Quantum image representations.

FRQI for grayscale and MCQI for RGB images: direct encoding, circuit
synthesis and analytic retrieval.
"""

from .batch import Encoder, encode_batch, encode_image, encoder_for, num_qubits_for, readout_qubit
from .frqi import DecodeError, FrqiAngles, frqi_angles, frqi_circuit, frqi_decode, frqi_encode
from .images import ColorImage, GrayImage
from .mcqi import McqiAngles, mcqi_angles, mcqi_circuit, mcqi_decode, mcqi_encode

__all__ = [
    "ColorImage",
    "DecodeError",
    "Encoder",
    "FrqiAngles",
    "GrayImage",
    "McqiAngles",
    "encode_batch",
    "encode_image",
    "encoder_for",
    "frqi_angles",
    "frqi_circuit",
    "frqi_decode",
    "frqi_encode",
    "mcqi_angles",
    "mcqi_circuit",
    "mcqi_decode",
    "mcqi_encode",
    "num_qubits_for",
    "readout_qubit",
]
