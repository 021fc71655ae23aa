"""
Bilinear resize with the align-corners-false convention.

Output pixel (r, c) samples the source at ((r + 0.5) * src / side - 0.5,
(c + 0.5) * src / side - 0.5); neighbors are clamped at the edges and the
blend is rounded half to even.
"""

from __future__ import annotations

import numpy as np


def _sample_positions(source: int, side: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    coords = (np.arange(side) + 0.5) * source / side - 0.5
    lower = np.floor(coords)
    weight = coords - lower
    low = np.clip(lower.astype(np.int64), 0, source - 1)
    high = np.clip(lower.astype(np.int64) + 1, 0, source - 1)
    return low, high, weight


def bilinear_resize(image: np.ndarray, side: int) -> np.ndarray:
    """
    Resize a square single-channel image to ``side`` x ``side``.

    Args:
        image: (S, S) array of intensities in [0, 255].
        side: Output side length (>= 1).

    Returns:
        (side, side) uint8 array.

    Raises:
        ValueError: If the source is not square or side < 1.
    """
    source = np.asarray(image, dtype=np.float64)
    if source.ndim != 2 or source.shape[0] != source.shape[1]:
        raise ValueError(f"source must be a square 2-D array, got shape {source.shape}")
    if side < 1:
        raise ValueError(f"side must be >= 1, got {side}")

    y0, y1, wy = _sample_positions(source.shape[0], side)
    x0, x1, wx = _sample_positions(source.shape[1], side)

    top = source[np.ix_(y0, x0)] * (1 - wx) + source[np.ix_(y0, x1)] * wx
    bottom = source[np.ix_(y1, x0)] * (1 - wx) + source[np.ix_(y1, x1)] * wx
    blended = top * (1 - wy)[:, np.newaxis] + bottom * wy[:, np.newaxis]
    return np.clip(np.rint(blended), 0, 255).astype(np.uint8)


def resize_stack(images: np.ndarray, side: int) -> np.ndarray:
    """Resize a (count, S, S) stack; returns (count, side * side) row-major pixels."""
    return np.stack([bilinear_resize(img, side).reshape(-1) for img in images]) if len(images) else np.empty((0, side * side), np.uint8)
