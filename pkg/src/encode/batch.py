"""
Batch encoding of image collections into amplitude matrices.

Encoded states depend only on the pixels, so they are computed once per
image and kept in the state cache.
"""

from __future__ import annotations

import hashlib
import logging
from collections.abc import Sequence
from enum import Enum

import numpy as np

from ..cache import StateCache
from .frqi import frqi_amplitudes, frqi_angles
from .images import ColorImage, GrayImage
from .mcqi import mcqi_amplitudes, mcqi_angles

logger = logging.getLogger(__name__)


class Encoder(Enum):
    """Quantum image representations."""

    FRQI = "FRQI"
    MCQI = "MCQI"

    @classmethod
    def parse(cls, value: str) -> Encoder:
        try:
            return cls(value.strip().upper())
        except ValueError as exc:
            raise ValueError(f"unknown encoder {value!r}; expected one of {', '.join(e.value for e in cls)}") from exc


def encoder_for(image: GrayImage | ColorImage) -> Encoder:
    """FRQI for grayscale images, MCQI for RGB images."""
    return Encoder.MCQI if isinstance(image, ColorImage) else Encoder.FRQI


def num_qubits_for(encoder: Encoder, n: int) -> int:
    """Register size of ``encoder`` for 2**n x 2**n images."""
    return 2 * n + 1 if encoder is Encoder.FRQI else 2 * n + 3


def readout_qubit(encoder: Encoder, n: int) -> int:
    """Color qubit (FRQI) or value qubit (MCQI); the highest qubit in both layouts."""
    return num_qubits_for(encoder, n) - 1


def encode_image(image: GrayImage | ColorImage) -> np.ndarray:
    """Encode one image into its amplitude vector."""
    if isinstance(image, ColorImage):
        return mcqi_amplitudes(mcqi_angles(image))
    return frqi_amplitudes(frqi_angles(image))


def _cache_key(image: GrayImage | ColorImage) -> str:
    digest = hashlib.sha256(image.pixels.tobytes() + str(image.pixels.shape).encode("utf-8")).hexdigest()
    return f"{encoder_for(image).value}:{digest}"


def encode_batch(images: Sequence[GrayImage | ColorImage], cache: StateCache | None = None) -> np.ndarray:
    """
    Encode images into an amplitude matrix of shape (len(images), 2**num_qubits).

    Raises:
        ValueError: If ``images`` is empty or mixes encoders or sizes.
    """
    if not images:
        raise ValueError("cannot encode an empty image list")
    first = images[0]
    encoder = encoder_for(first)
    if any(encoder_for(img) is not encoder or img.n != first.n for img in images):
        raise ValueError("all images in a batch must share color mode and size")

    rows = []
    hits = 0
    for image in images:
        key = _cache_key(image)
        cached = cache.get(key) if cache is not None else None
        if cached is not None:
            hits += 1
            rows.append(cached)
            continue
        amplitudes = encode_image(image)
        if cache is not None:
            cache.put(key, amplitudes)
        rows.append(amplitudes)

    logger.debug("Encoded image batch", extra={"encoder": encoder.value, "n": first.n, "count": len(images), "cache_hits": hits})
    return np.stack(rows)
