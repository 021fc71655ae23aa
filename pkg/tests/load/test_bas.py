import numpy as np
import pytest
from src.load import DatasetKind, gen_bas


@pytest.mark.parametrize("n", [1, 2, 3])
def test_images_are_bars_or_stripes(n: int) -> None:
    dataset = gen_bas(n, 60, seed=3)
    for image, label in zip(dataset.images, dataset.labels, strict=True):
        matrix = image.as_matrix()
        rows_constant = bool(np.all(matrix == matrix[:, :1]))
        columns_constant = bool(np.all(matrix == matrix[:1, :]))
        assert set(np.unique(matrix).tolist()) == {0, 255}
        if label == 1:
            assert columns_constant and not rows_constant
        else:
            assert rows_constant and not columns_constant


def test_same_seed_same_images() -> None:
    first = gen_bas(2, 20, seed=5)
    second = gen_bas(2, 20, seed=5)
    assert first.images == second.images
    np.testing.assert_array_equal(first.labels, second.labels)
    assert gen_bas(2, 20, seed=6).images != first.images


def test_classes_are_roughly_balanced() -> None:
    labels = gen_bas(1, 400, seed=0).labels
    assert 150 < int(np.sum(labels == 1)) < 250


def test_meta() -> None:
    meta = gen_bas(2, 4, seed=9).meta
    assert meta.source is DatasetKind.BAS
    expected_n = 2
    assert meta.n == expected_n


@pytest.mark.parametrize(("n", "count", "message"), [(0, 10, "n must be"), (1, 1, "count must be")])
def test_invalid_arguments(n: int, count: int, message: str) -> None:
    with pytest.raises(ValueError, match=message):
        gen_bas(n, count, seed=0)


@pytest.mark.parametrize("n", [1, 2])
def test_no_constant_image_in_ten_thousand(n: int) -> None:
    pixels = np.stack([image.as_matrix() for image in gen_bas(n, 10_000, seed=11).images])
    spread = pixels.max(axis=(1, 2)) - pixels.min(axis=(1, 2))
    assert np.all(spread == 255)
