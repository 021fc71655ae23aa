"""
Square images with side 2**n and integer pixels in [0, 255].

Pixels are stored row-major: pixel index i = row * 2**n + column.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

MAX_PIXEL = 255


def _as_pixels(values: np.ndarray, shape: tuple[int, ...]) -> np.ndarray:
    raw = np.asarray(values)
    if raw.shape != shape:
        raise ValueError(f"expected pixel array of shape {shape}, got {raw.shape}")
    if raw.size and (raw.min() < 0 or raw.max() > MAX_PIXEL):
        raise ValueError(f"pixel values must lie in [0, {MAX_PIXEL}]")
    if not np.all(np.equal(np.mod(raw, 1), 0)):
        raise ValueError("pixel values must be integers")
    pixels = raw.astype(np.uint8)
    pixels.setflags(write=False)
    return pixels


@dataclass(frozen=True)
class GrayImage:
    """
    Grayscale 2**n x 2**n image.

    Attributes:
        n: Side exponent (>= 1).
        pixels: uint8 array of length 4**n, row-major.
    """

    n: int
    pixels: np.ndarray = field(repr=False)

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"n must be >= 1, got {self.n}")
        object.__setattr__(self, "pixels", _as_pixels(np.asarray(self.pixels).reshape(-1), (4**self.n,)))

    @property
    def side(self) -> int:
        return int(2**self.n)

    def as_matrix(self) -> np.ndarray:
        """Return the pixels as a (side, side) array."""
        return self.pixels.reshape(self.side, self.side)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GrayImage):
            return NotImplemented
        return self.n == other.n and np.array_equal(self.pixels, other.pixels)

    def __hash__(self) -> int:
        return hash((self.n, self.pixels.tobytes()))


@dataclass(frozen=True)
class ColorImage:
    """
    RGB 2**n x 2**n image.

    Attributes:
        n: Side exponent (>= 1).
        pixels: uint8 array of shape (4**n, 3), row-major, channels R, G, B.
    """

    n: int
    pixels: np.ndarray = field(repr=False)

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"n must be >= 1, got {self.n}")
        object.__setattr__(self, "pixels", _as_pixels(np.asarray(self.pixels).reshape(-1, 3), (4**self.n, 3)))

    @property
    def side(self) -> int:
        return int(2**self.n)

    def as_matrix(self) -> np.ndarray:
        """Return the pixels as a (side, side, 3) array."""
        return self.pixels.reshape(self.side, self.side, 3)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ColorImage):
            return NotImplemented
        return self.n == other.n and np.array_equal(self.pixels, other.pixels)

    def __hash__(self) -> int:
        return hash((self.n, self.pixels.tobytes()))
