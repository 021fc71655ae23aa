"""
Corrupted MNIST ingestion.

Expected layout (see specs/Corrupted-MNIST-Layout.md):
``<root>/<corruption>/{train,test}_{images,labels}.npy`` with uint8 images of
shape (N, 28, 28) or (N, 28, 28, 1) and labels of shape (N,).
"""

from __future__ import annotations

from collections.abc import Sequence
from pathlib import Path

import numpy as np

from .dataset import DatasetError, DatasetKind, DatasetMeta, LabeledImageSet
from .mnist import sample_digits

CORRUPTIONS = (
    "shot_noise",
    "impulse_noise",
    "glass_blur",
    "motion_blur",
    "shear",
    "scale",
    "rotate",
    "brightness",
    "translate",
    "stripe",
    "fog",
    "spatter",
    "dotted_line",
    "zigzag",
    "canny_edges",
)


def check_corruption(name: str) -> str:
    """Return the normalized corruption name or raise DatasetError listing valid names."""
    normalized = name.strip().lower()
    if normalized not in CORRUPTIONS:
        raise DatasetError(f"unknown corruption {name!r}; valid names: {', '.join(CORRUPTIONS)}")
    return normalized


def read_corrupted(root: Path, corruption: str, split: str = "train") -> tuple[np.ndarray, np.ndarray]:
    """
    Read 28x28 images and labels of one corruption split.

    Raises:
        DatasetError: If the name is unknown or the arrays are malformed.
        FileNotFoundError: If a file is missing.
    """
    folder = Path(root) / check_corruption(corruption)
    images_path = folder / f"{split}_images.npy"
    labels_path = folder / f"{split}_labels.npy"
    for required in (images_path, labels_path):
        if not required.exists():
            raise FileNotFoundError(f"missing corrupted MNIST file {required}")

    images = np.load(images_path, allow_pickle=False)
    labels = np.load(labels_path, allow_pickle=False).reshape(-1)
    if images.ndim == 4 and images.shape[-1] == 1:
        images = images[..., 0]
    if images.ndim != 3 or images.shape[1:] != (28, 28):
        raise DatasetError(f"{images_path} must hold (N, 28, 28) images, got {images.shape}")
    if images.shape[0] != labels.shape[0]:
        raise DatasetError(f"{images.shape[0]} images but {labels.shape[0]} labels")
    return images.astype(np.uint8), labels.astype(np.int64)


def load_corrupted(
    path: Path,
    corruption: str,
    digits: Sequence[int],
    n: int,
    count: int,
    seed: int,
    offset: int = 0,
    split: str = "train",
) -> LabeledImageSet:
    """Load one corruption and run it through the same sampling and resize pipeline as load_mnist."""
    name = check_corruption(corruption)
    images, raw_labels = read_corrupted(Path(path), name, split)
    meta = DatasetMeta(DatasetKind.MNIST_CORRUPT, n, seed, corruption=name, digits=tuple(sorted(digits)))
    return sample_digits(images, raw_labels, digits, n, count, seed, offset, meta)
