"""
2x2 color images with a shaded marker pixel.
"""

from __future__ import annotations

from enum import Enum

import numpy as np

from ..encode import ColorImage
from .dataset import DatasetKind, DatasetMeta, LabeledImageSet

MARKER_PIXEL = 3


class MarkerMode(Enum):
    """
    How positive samples mark their 4th pixel.

    FIXED writes (shade, shade, shade). CEILING draws each channel uniformly
    from [0, shade], so shade 255 leaves the two classes identically distributed.
    """

    FIXED = "fixed"
    CEILING = "ceiling"

    @classmethod
    def parse(cls, value: str) -> MarkerMode:
        try:
            return cls(value.strip().lower())
        except ValueError as exc:
            raise ValueError(f"unknown marker mode {value!r}; expected fixed or ceiling") from exc


def gen_color22(shade: int, count: int, seed: int, marker: MarkerMode = MarkerMode.FIXED) -> LabeledImageSet:
    """
    Generate ``count`` random 2x2 RGB images.

    Every channel is i.i.d. uniform on [0, 255]. Positive samples (+1) get
    their 4th pixel replaced according to ``marker``; negatives (-1) are
    left untouched.

    Raises:
        ValueError: If shade is outside [0, 255] or count < 1.
    """
    if not 0 <= shade <= 255:
        raise ValueError(f"shade must lie in [0, 255], got {shade}")
    if count < 1:
        raise ValueError(f"count must be >= 1, got {count}")

    rng = np.random.default_rng(seed)
    pixels = rng.integers(0, 256, size=(count, 4, 3))
    labels = np.where(rng.integers(0, 2, size=count) == 1, 1, -1)
    positives = labels == 1
    if marker is MarkerMode.CEILING:
        pixels[positives, MARKER_PIXEL, :] = rng.integers(0, shade + 1, size=(int(positives.sum()), 3))
    else:
        pixels[positives, MARKER_PIXEL, :] = shade

    images = tuple(ColorImage(1, pixels[i]) for i in range(count))
    return LabeledImageSet(images, labels, DatasetMeta(DatasetKind.COLOR22, 1, seed, shade=shade))
