import gzip
from pathlib import Path

import numpy as np
import pytest
from src.load import DatasetError, DatasetKind, load_mnist, read_idx


def test_read_idx_plain_and_gzip(tmp_path: Path) -> None:
    header = bytes([0, 0, 0x08, 2]) + (2).to_bytes(4, "big") + (3).to_bytes(4, "big")
    payload = header + bytes(range(6))
    plain = tmp_path / "x-idx2-ubyte"
    plain.write_bytes(payload)
    packed = tmp_path / "x-idx2-ubyte.gz"
    packed.write_bytes(gzip.compress(payload))

    expected = np.arange(6, dtype=np.uint8).reshape(2, 3)
    np.testing.assert_array_equal(read_idx(plain), expected)
    np.testing.assert_array_equal(read_idx(packed), expected)


def test_read_idx_rejects_bad_magic(tmp_path: Path) -> None:
    path = tmp_path / "bad"
    path.write_bytes(b"\x00\x00\x0d\x01" + (1).to_bytes(4, "big") + b"\x00")
    with pytest.raises(DatasetError, match="not an unsigned-byte IDX"):
        read_idx(path)


def test_read_idx_rejects_truncated_payload(tmp_path: Path) -> None:
    path = tmp_path / "short"
    path.write_bytes(bytes([0, 0, 0x08, 1]) + (5).to_bytes(4, "big") + b"\x01\x02")
    with pytest.raises(DatasetError, match="declares 5"):
        read_idx(path)


def test_load_binary_digits(mnist_root: Path) -> None:
    dataset = load_mnist(mnist_root, digits=(3, 7), n=2, count=40, seed=0)
    expected_count = 40
    assert len(dataset) == expected_count
    assert set(dataset.labels.tolist()) <= {-1, 1}
    assert all(image.n == 2 for image in dataset.images)
    # fake digit d is filled with about 20 * d
    for image, label in zip(dataset.images, dataset.labels, strict=True):
        digit = 3 if label == -1 else 7
        assert abs(float(image.pixels.mean()) - 20 * digit) < 10
    assert dataset.meta.source is DatasetKind.MNIST
    assert dataset.meta.digits == (3, 7)


def test_load_three_digits(mnist_root: Path) -> None:
    dataset = load_mnist(mnist_root, digits=(0, 1, 2), n=1, count=60, seed=1)
    assert dataset.is_multiclass
    assert set(dataset.labels.tolist()) == {0, 1, 2}


def test_offsets_do_not_overlap(mnist_root: Path) -> None:
    first = load_mnist(mnist_root, digits=(0, 1), n=3, count=20, seed=4)
    second = load_mnist(mnist_root, digits=(0, 1), n=3, count=20, seed=4, offset=20)
    assert not set(first.images) & set(second.images)


def test_test_split_files(mnist_root: Path) -> None:
    expected_count = 10
    assert len(load_mnist(mnist_root, digits=(0, 1), n=1, count=10, seed=0, split="test")) == expected_count


def test_pool_too_small(mnist_root: Path) -> None:
    with pytest.raises(DatasetError, match="only 60 available"):
        load_mnist(mnist_root, digits=(0, 1), n=1, count=61, seed=0)


def test_missing_files(tmp_path: Path) -> None:
    with pytest.raises(FileNotFoundError, match="train-images-idx3-ubyte"):
        load_mnist(tmp_path, digits=(0, 1), n=1, count=1, seed=0)
