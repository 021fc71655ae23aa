"""
Labeled image collections and the declarative dataset description.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass, field
from enum import Enum

import numpy as np

from ..encode import ColorImage, GrayImage

BINARY_LABELS = frozenset({-1, 1})
MULTI_LABELS = frozenset({0, 1, 2})
VALIDATION_SEED_OFFSET = 1_000_003


class DatasetError(ValueError):
    """Raised when a dataset cannot be generated or loaded as requested."""

    pass


class DatasetKind(Enum):
    BAS = "BAS"
    MNIST = "MNIST"
    MNIST_CORRUPT = "MNIST_CORRUPT"
    COLOR22 = "COLOR22"

    @classmethod
    def parse(cls, value: str) -> DatasetKind:
        try:
            return cls(value.strip().upper())
        except ValueError as exc:
            raise DatasetError(f"unknown dataset kind {value!r}; expected one of {', '.join(k.value for k in cls)}") from exc

    @property
    def is_color(self) -> bool:
        return self is DatasetKind.COLOR22


@dataclass(frozen=True)
class DatasetMeta:
    """Provenance of a generated or loaded set."""

    source: DatasetKind
    n: int
    seed: int
    shade: int | None = None
    corruption: str | None = None
    digits: tuple[int, ...] = ()


@dataclass(frozen=True)
class LabeledImageSet:
    """
    Images with integer labels.

    Attributes:
        images: GrayImage or ColorImage tuple.
        labels: int64 array; binary sets use -1/+1, three-class sets 0/1/2.
        meta: Provenance.
    """

    images: tuple[GrayImage, ...] | tuple[ColorImage, ...]
    labels: np.ndarray = field(repr=False)
    meta: DatasetMeta

    def __post_init__(self) -> None:
        object.__setattr__(self, "images", tuple(self.images))
        labels = np.asarray(self.labels, dtype=np.int64).reshape(-1)
        if labels.shape[0] != len(self.images):
            raise DatasetError(f"{len(self.images)} images but {labels.shape[0]} labels")
        label_set = set(labels.tolist())
        if not (label_set <= BINARY_LABELS or label_set <= MULTI_LABELS):
            raise DatasetError(f"labels {sorted(label_set)} are neither binary (-1/+1) nor three-class (0/1/2)")
        labels.setflags(write=False)
        object.__setattr__(self, "labels", labels)

    def __len__(self) -> int:
        return len(self.images)

    @property
    def is_multiclass(self) -> bool:
        """True when any label lies outside {-1, +1}."""
        return bool(len(self) and not set(self.labels.tolist()) <= BINARY_LABELS)

    @property
    def is_color(self) -> bool:
        return bool(self.images) and isinstance(self.images[0], ColorImage)

    def subset(self, mask: np.ndarray) -> LabeledImageSet:
        """Return the samples selected by a boolean mask."""
        keep = np.flatnonzero(mask)
        return LabeledImageSet(tuple(self.images[i] for i in keep), self.labels[keep], self.meta)


@dataclass(frozen=True)
class DatasetSpec:
    """
    Declarative dataset description.

    Attributes:
        kind: Generator or loader.
        n: Side exponent.
        count: Sample count.
        seed: Sampling seed.
        digits: MNIST digits; two for binary, three for three-class.
        shade: COLOR22 positive-class marker intensity.
        corruption: MNIST_CORRUPT corruption name.
        path: MNIST / corrupted MNIST location (relative paths resolve under the data root).
        split: Source split for file-backed kinds (train or test).
        marker: COLOR22 marker mode, ``fixed`` or ``ceiling``.
    """

    kind: DatasetKind
    n: int = 1
    count: int = 100
    seed: int = 0
    digits: tuple[int, ...] = (0, 1)
    shade: int = 0
    corruption: str = "shot_noise"
    path: str = ""
    split: str = "train"
    marker: str = "fixed"

    def __post_init__(self) -> None:
        object.__setattr__(self, "digits", tuple(int(d) for d in self.digits))
        if self.n < 1:
            raise DatasetError(f"n must be >= 1, got {self.n}")
        if self.count < 1:
            raise DatasetError(f"count must be >= 1, got {self.count}")
        if self.kind is DatasetKind.COLOR22 and (self.n != 1 or not 0 <= self.shade <= 255):
            raise DatasetError("COLOR22 needs n = 1 and shade in [0, 255]")
        if self.marker not in ("fixed", "ceiling"):
            raise DatasetError(f"marker must be fixed or ceiling, got {self.marker!r}")
        if self.kind in (DatasetKind.MNIST, DatasetKind.MNIST_CORRUPT):
            if len(self.digits) not in (2, 3) or len(set(self.digits)) != len(self.digits):
                raise DatasetError(f"MNIST needs two or three distinct digits, got {self.digits}")
            if any(not 0 <= d <= 9 for d in self.digits):
                raise DatasetError(f"digits must lie in 0..9, got {self.digits}")
            if self.split not in ("train", "test"):
                raise DatasetError(f"split must be train or test, got {self.split!r}")


def digit_labels(digits: Sequence[int]) -> dict[int, int]:
    """
    Map digits to labels in ascending digit order.

    Two digits map to -1/+1, three digits to 0/1/2.
    """
    ordered = sorted(digits)
    if len(ordered) == 2:
        return {ordered[0]: -1, ordered[1]: 1}
    return {digit: index for index, digit in enumerate(ordered)}
