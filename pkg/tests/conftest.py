import gzip
import struct
from pathlib import Path

import numpy as np
import pytest

SAMPLES_PER_DIGIT = 30


def fake_digits(seed: int = 0) -> tuple[np.ndarray, np.ndarray]:
    """Small MNIST stand-in: digit d is a 28x28 image filled with 20 * d plus noise."""
    rng = np.random.default_rng(seed)
    labels = rng.permutation(np.repeat(np.arange(10), SAMPLES_PER_DIGIT)).astype(np.uint8)
    base = (labels.astype(np.int64) * 20)[:, np.newaxis, np.newaxis]
    images = np.clip(base + rng.integers(0, 10, size=(labels.shape[0], 28, 28)), 0, 255).astype(np.uint8)
    return images, labels


def write_idx(path: Path, array: np.ndarray, compress: bool = False) -> Path:
    header = bytes([0, 0, 0x08, array.ndim]) + struct.pack(f">{array.ndim}I", *array.shape)
    payload = header + array.astype(np.uint8).tobytes()
    if compress:
        path = path.with_name(path.name + ".gz")
        path.write_bytes(gzip.compress(payload))
    else:
        path.write_bytes(payload)
    return path


@pytest.fixture
def mnist_root(tmp_path: Path) -> Path:
    root = tmp_path / "mnist"
    root.mkdir()
    images, labels = fake_digits()
    write_idx(root / "train-images-idx3-ubyte", images)
    write_idx(root / "train-labels-idx1-ubyte", labels, compress=True)
    test_images, test_labels = fake_digits(seed=1)
    write_idx(root / "t10k-images-idx3-ubyte", test_images)
    write_idx(root / "t10k-labels-idx1-ubyte", test_labels)
    return root


@pytest.fixture
def corrupted_root(tmp_path: Path) -> Path:
    root = tmp_path / "mnist_c"
    folder = root / "shot_noise"
    folder.mkdir(parents=True)
    images, labels = fake_digits(seed=2)
    np.save(folder / "train_images.npy", images[..., np.newaxis])
    np.save(folder / "train_labels.npy", labels)
    return root
