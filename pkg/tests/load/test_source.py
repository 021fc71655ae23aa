from pathlib import Path

import pytest
from src.config import Settings
from src.load import VALIDATION_SEED_OFFSET, DatasetKind, DatasetSpec, build_dataset, build_split, gen_bas


def test_generated_split_uses_offset_seed() -> None:
    spec = DatasetSpec(DatasetKind.BAS, n=2, seed=3)
    train, validation = build_split(spec, Settings(), train_size=10, validation_size=15)
    assert train.images == gen_bas(2, 10, seed=3).images
    assert validation.images == gen_bas(2, 15, seed=3 + VALIDATION_SEED_OFFSET).images


def test_color_spec_dispatch() -> None:
    dataset = build_dataset(DatasetSpec(DatasetKind.COLOR22, shade=20, count=8), Settings())
    assert dataset.is_color
    expected_count = 8
    assert len(dataset) == expected_count


def test_file_backed_split_is_disjoint(mnist_root: Path) -> None:
    settings = Settings(data_root=mnist_root.parent)
    spec = DatasetSpec(DatasetKind.MNIST, n=2, digits=(0, 1), path="mnist", seed=5)
    train, validation = build_split(spec, settings, train_size=25, validation_size=30)
    expected_sizes = (25, 30)
    assert (len(train), len(validation)) == expected_sizes
    assert not set(train.images) & set(validation.images)


def test_corrupted_spec_resolves_under_data_root(corrupted_root: Path) -> None:
    settings = Settings(data_root=corrupted_root.parent)
    spec = DatasetSpec(DatasetKind.MNIST_CORRUPT, n=1, digits=(2, 3), path="mnist_c", corruption="shot_noise", count=12)
    assert build_dataset(spec, settings).meta.corruption == "shot_noise"


def test_missing_data_root(tmp_path: Path) -> None:
    spec = DatasetSpec(DatasetKind.MNIST, path="absent")
    with pytest.raises(FileNotFoundError):
        build_dataset(spec, Settings(data_root=tmp_path))
