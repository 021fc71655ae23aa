"""
Bars and Stripes generator.

Stripes (label -1) have constant rows, bars (label +1) constant columns.
Constant images belong to both classes and are resampled.
"""

from __future__ import annotations

import logging

import numpy as np

from ..encode import GrayImage
from .dataset import DatasetKind, DatasetMeta, LabeledImageSet

logger = logging.getLogger(__name__)

STRIPES = -1
BARS = 1
_ON = 255


def _sample_lines(rng: np.random.Generator, side: int) -> np.ndarray:
    while True:
        lines = rng.integers(0, 2, size=side) * _ON
        if lines.min() != lines.max():
            return lines


def gen_bas(n: int, count: int, seed: int) -> LabeledImageSet:
    """
    Generate ``count`` BAS images of side 2**n.

    Each sample flips a fair coin for its class, then a fair coin per row
    (stripes) or column (bars).

    Raises:
        ValueError: If n < 1 or count < 2.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if count < 2:
        raise ValueError(f"count must be >= 2, got {count}")

    rng = np.random.default_rng(seed)
    side = 2**n
    images = []
    labels = []
    for _ in range(count):
        label = BARS if rng.integers(0, 2) else STRIPES
        lines = _sample_lines(rng, side)
        if label == STRIPES:
            matrix = np.repeat(lines[:, np.newaxis], side, axis=1)
        else:
            matrix = np.repeat(lines[np.newaxis, :], side, axis=0)
        images.append(GrayImage(n, matrix.reshape(-1)))
        labels.append(label)

    logger.debug("Generated BAS images", extra={"n": n, "count": count, "seed": seed, "bars": labels.count(BARS)})
    return LabeledImageSet(tuple(images), np.array(labels), DatasetMeta(DatasetKind.BAS, n, seed))
