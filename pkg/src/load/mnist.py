"""
MNIST IDX reader and the shared digit sampling pipeline.

IDX layout (big endian): two zero bytes, a dtype code (0x08 = uint8),
the number of dimensions, one 32-bit size per dimension, then the
row-major payload. Files may be gzip-compressed (``.gz`` suffix).
"""

from __future__ import annotations

import gzip
import logging
import struct
from collections.abc import Sequence
from pathlib import Path

import numpy as np

from ..encode import GrayImage
from .dataset import DatasetError, DatasetKind, DatasetMeta, LabeledImageSet, digit_labels
from .resize import resize_stack

logger = logging.getLogger(__name__)

IDX_UBYTE = 0x08
MNIST_IMAGE_MAGIC = 2051
MNIST_LABEL_MAGIC = 2049
SPLIT_PREFIX = {"train": "train", "test": "t10k"}


def read_idx(path: Path) -> np.ndarray:
    """
    Read an unsigned-byte IDX file into an array of its declared shape.

    Raises:
        FileNotFoundError: If the file is missing.
        DatasetError: On a bad magic number or truncated payload.
    """
    opener = gzip.open if path.suffix == ".gz" else open
    with opener(path, "rb") as f:
        header = f.read(4)
        if len(header) != 4 or header[:2] != b"\x00\x00" or header[2] != IDX_UBYTE:
            raise DatasetError(f"{path} is not an unsigned-byte IDX file")
        ndim = header[3]
        shape = struct.unpack(f">{ndim}I", f.read(4 * ndim))
        payload = f.read()
    expected = int(np.prod(shape))
    if len(payload) != expected:
        raise DatasetError(f"{path} holds {len(payload)} payload bytes, header declares {expected}")
    return np.frombuffer(payload, dtype=np.uint8).reshape(shape)


def _find(root: Path, name: str) -> Path:
    for candidate in (root / name, root / f"{name}.gz"):
        if candidate.exists():
            return candidate
    raise FileNotFoundError(f"missing MNIST file {name}[.gz] under {root}")


def read_mnist(root: Path, split: str = "train") -> tuple[np.ndarray, np.ndarray]:
    """
    Read images (count, 28, 28) and labels (count,) of one MNIST split.

    Raises:
        FileNotFoundError: If a file is missing.
        DatasetError: If files are corrupt or disagree in length.
    """
    prefix = SPLIT_PREFIX[split]
    images = read_idx(_find(root, f"{prefix}-images-idx3-ubyte"))
    labels = read_idx(_find(root, f"{prefix}-labels-idx1-ubyte"))
    if images.ndim != 3 or labels.ndim != 1:
        raise DatasetError(f"unexpected MNIST shapes {images.shape} and {labels.shape}")
    if images.shape[0] != labels.shape[0]:
        raise DatasetError(f"{images.shape[0]} images but {labels.shape[0]} labels")
    return images, labels


def sample_digits(
    images: np.ndarray,
    raw_labels: np.ndarray,
    digits: Sequence[int],
    n: int,
    count: int,
    seed: int,
    offset: int,
    meta: DatasetMeta,
) -> LabeledImageSet:
    """
    Filter to ``digits``, draw ``count`` samples and resize them to 2**n.

    One seeded permutation of the filtered pool is sliced at
    [offset, offset + count), so draws with the same seed and disjoint
    offsets never share a source image.

    Raises:
        DatasetError: If a digit is absent or the pool is too small.
    """
    mapping = digit_labels(digits)
    present = set(np.unique(raw_labels).tolist())
    missing = sorted(set(mapping) - present)
    if missing:
        raise DatasetError(f"digits {missing} are absent from the data")

    pool = np.flatnonzero(np.isin(raw_labels, list(mapping)))
    order = np.random.default_rng(seed).permutation(pool)
    if offset + count > order.shape[0]:
        raise DatasetError(f"requested {count} samples at offset {offset}, only {order.shape[0]} available for digits {sorted(mapping)}")
    chosen = order[offset : offset + count]

    pixels = resize_stack(images[chosen], 2**n)
    labels = np.array([mapping[int(d)] for d in raw_labels[chosen]], dtype=np.int64)
    logger.debug("Sampled digit images", extra={"source": meta.source.value, "n": n, "count": count, "offset": offset})
    return LabeledImageSet(tuple(GrayImage(n, row) for row in pixels), labels, meta)


def load_mnist(
    path: Path,
    digits: Sequence[int],
    n: int,
    count: int,
    seed: int,
    offset: int = 0,
    split: str = "train",
) -> LabeledImageSet:
    """
    Load MNIST digits, resized to 2**n x 2**n.

    Args:
        path: Directory holding the standard IDX files.
        digits: Two digits (labels -1/+1) or three digits (labels 0/1/2), mapped in ascending order.
        n: Side exponent of the output images.
        count: Number of samples.
        seed: Sampling seed.
        offset: Start of the draw inside the seeded permutation.
        split: ``train`` or ``test`` files.
    """
    images, raw_labels = read_mnist(Path(path), split)
    meta = DatasetMeta(DatasetKind.MNIST, n, seed, digits=tuple(sorted(digits)))
    return sample_digits(images, raw_labels, digits, n, count, seed, offset, meta)
