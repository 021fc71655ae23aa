from pathlib import Path

import numpy as np
import pytest
from src.load import CORRUPTIONS, DatasetError, DatasetKind, check_corruption, load_corrupted


def test_fifteen_corruptions() -> None:
    expected_count = 15
    assert len(CORRUPTIONS) == expected_count
    assert CORRUPTIONS[0] == "shot_noise"
    assert CORRUPTIONS[-1] == "canny_edges"


def test_check_corruption_normalizes_case() -> None:
    assert check_corruption(" Shot_Noise ") == "shot_noise"


def test_unknown_corruption_lists_valid_names() -> None:
    with pytest.raises(DatasetError) as exc_info:
        check_corruption("gaussian_blur")
    for name in CORRUPTIONS:
        assert name in str(exc_info.value)


def test_load_from_npy_layout(corrupted_root: Path) -> None:
    dataset = load_corrupted(corrupted_root, "shot_noise", digits=(1, 7), n=2, count=30, seed=0)
    expected_count = 30
    assert len(dataset) == expected_count
    assert dataset.meta.source is DatasetKind.MNIST_CORRUPT
    assert dataset.meta.corruption == "shot_noise"
    assert set(dataset.labels.tolist()) <= {-1, 1}


def test_missing_corruption_folder(corrupted_root: Path) -> None:
    with pytest.raises(FileNotFoundError, match="fog"):
        load_corrupted(corrupted_root, "fog", digits=(0, 1), n=1, count=5, seed=0)


def test_rejects_wrong_image_shape(tmp_path: Path) -> None:
    folder = tmp_path / "rotate"
    folder.mkdir()
    np.save(folder / "train_images.npy", np.zeros((4, 14, 14), dtype=np.uint8))
    np.save(folder / "train_labels.npy", np.zeros(4, dtype=np.uint8))
    with pytest.raises(DatasetError, match=r"\(N, 28, 28\)"):
        load_corrupted(tmp_path, "rotate", digits=(0, 1), n=1, count=1, seed=0)
