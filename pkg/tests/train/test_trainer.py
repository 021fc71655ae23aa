from pathlib import Path
from unittest.mock import patch

import numpy as np
import pytest
from src.cache import InMemoryStateCache
from src.classify import (
    DEFAULT_SPLIT,
    AcSpec,
    AnsatzSpec,
    ac_loss_and_grad,
    init_params,
    vqc_loss_and_grad,
)
from src.encode import encode_batch
from src.load import (
    VALIDATION_SEED_OFFSET,
    DatasetKind,
    DatasetMeta,
    LabeledImageSet,
    MarkerMode,
    gen_bas,
    gen_color22,
    load_mnist,
)
from src.train import ClassifierKind, TrainConfig, TrainingError, evaluate, train

SMALL_VQC = TrainConfig(ClassifierKind.VQC, epochs=15, train_size=40, validation_size=40, layers=2, seed=1)
SMALL_AC = TrainConfig(ClassifierKind.AC, epochs=15, train_size=40, validation_size=40, layers=1, seed=1)


@pytest.fixture
def bas_split() -> tuple[LabeledImageSet, LabeledImageSet]:
    return gen_bas(1, 40, seed=0), gen_bas(1, 40, seed=VALIDATION_SEED_OFFSET)


class TestTrainConfig:
    def test_default_layers(self) -> None:
        expected_vqc_layers = 5
        assert TrainConfig(ClassifierKind.VQC).resolved_layers() == expected_vqc_layers
        assert TrainConfig(ClassifierKind.AC).resolved_layers() == 1

    @pytest.mark.parametrize(
        ("classifier", "source", "n", "expected_epochs"),
        [
            (ClassifierKind.AC, DatasetKind.MNIST, 2, 100),
            (ClassifierKind.AC, DatasetKind.MNIST_CORRUPT, 1, 100),
            (ClassifierKind.AC, DatasetKind.MNIST, 3, 250),
            (ClassifierKind.AC, DatasetKind.BAS, 1, 250),
            (ClassifierKind.VQC, DatasetKind.MNIST, 2, 250),
        ],
    )
    def test_default_epochs(self, classifier: ClassifierKind, source: DatasetKind, n: int, expected_epochs: int) -> None:
        assert TrainConfig(classifier).resolved_epochs(DatasetMeta(source, n, 0)) == expected_epochs

    def test_explicit_epochs_win(self) -> None:
        expected_epochs = 7
        assert TrainConfig(ClassifierKind.AC, epochs=7).resolved_epochs(DatasetMeta(DatasetKind.MNIST, 1, 0)) == expected_epochs

    @pytest.mark.parametrize(("kwargs", "message"), [({"epochs": 0}, "epochs"), ({"train_size": 0}, "train_size"), ({"layers": 0}, "layers")])
    def test_validation(self, kwargs: dict[str, int], message: str) -> None:
        with pytest.raises(ValueError, match=message):
            TrainConfig(**kwargs)  # type: ignore[arg-type]

    def test_classifier_parse(self) -> None:
        assert ClassifierKind.parse(" ac ") is ClassifierKind.AC
        with pytest.raises(ValueError, match="unknown classifier"):
            ClassifierKind.parse("SVM")


class TestTrainVqc:
    def test_history_shape(self, bas_split: tuple[LabeledImageSet, LabeledImageSet]) -> None:
        train_set, validation = bas_split
        history = train(train_set, SMALL_VQC, validation)

        expected_epochs = 15
        assert len(history.losses) == expected_epochs
        assert history.final_loss == history.losses[-1]
        assert history.params.values.shape == (AnsatzSpec(3, 2).num_params,)
        assert history.validation_accuracy is not None
        assert 0.0 <= history.validation_accuracy <= 1.0
        assert 0.0 <= history.train_accuracy <= 1.0

    def test_loss_decreases(self, bas_split: tuple[LabeledImageSet, LabeledImageSet]) -> None:
        history = train(bas_split[0], SMALL_VQC)
        assert history.losses[-1] < history.losses[0]

    def test_first_loss_is_taken_at_initial_params(self, bas_split: tuple[LabeledImageSet, LabeledImageSet]) -> None:
        train_set = bas_split[0]
        history = train(train_set, SMALL_VQC)
        spec = AnsatzSpec(3, 2)
        expected, _ = vqc_loss_and_grad(encode_batch(train_set.images), train_set.labels, spec, init_params(spec.num_params, 1).values)
        assert history.losses[0] == pytest.approx(expected)

    def test_same_seed_same_trajectory(self, bas_split: tuple[LabeledImageSet, LabeledImageSet]) -> None:
        first = train(bas_split[0], SMALL_VQC)
        second = train(bas_split[0], SMALL_VQC)
        assert first.losses == second.losses
        np.testing.assert_array_equal(first.params.values, second.params.values)
        assert first.params.split == second.params.split

    def test_without_calibration_keeps_default_split(self, bas_split: tuple[LabeledImageSet, LabeledImageSet]) -> None:
        history = train(bas_split[0], TrainConfig(ClassifierKind.VQC, epochs=3, layers=1, calibrate=False), bas_split[1])
        assert history.params.split == DEFAULT_SPLIT
        assert history.validation_accuracy == history.uncalibrated_accuracy

    def test_calibration_never_hurts_training_accuracy(self, bas_split: tuple[LabeledImageSet, LabeledImageSet]) -> None:
        train_set = bas_split[0]
        history = train(train_set, SMALL_VQC)
        scores = history.model.scores(encode_batch(train_set.images))
        uncalibrated = float(np.mean(history.model.predict_scores(scores, calibrated=False) == train_set.labels))
        assert history.train_accuracy >= uncalibrated

    def test_states_go_through_the_cache(self, bas_split: tuple[LabeledImageSet, LabeledImageSet]) -> None:
        cache = InMemoryStateCache()
        train(bas_split[0], TrainConfig(ClassifierKind.VQC, epochs=1, layers=1), cache=cache)
        distinct_bas_images = 4
        assert len(cache) == distinct_bas_images

    def test_non_finite_loss(self, bas_split: tuple[LabeledImageSet, LabeledImageSet]) -> None:
        with (
            patch("src.train.trainer.vqc_loss_and_grad", return_value=(float("nan"), np.zeros(9))),
            pytest.raises(TrainingError, match="non-finite loss"),
        ):
            train(bas_split[0], TrainConfig(ClassifierKind.VQC, epochs=2, layers=1))

    def test_three_class_training_calibrates_bounds(self, mnist_root: Path) -> None:
        dataset = load_mnist(mnist_root, digits=(0, 1, 2), n=1, count=30, seed=0)
        history = train(dataset, TrainConfig(ClassifierKind.VQC, epochs=5, layers=1))
        assert history.model.multiclass
        assert history.params.multi_bounds is not None
        low, high = history.params.multi_bounds
        assert -1.0 < low < high < 1.0


class TestTrainAc:
    def test_loss_uses_positive_samples_only(self, bas_split: tuple[LabeledImageSet, LabeledImageSet]) -> None:
        train_set = bas_split[0]
        history = train(train_set, SMALL_AC)
        spec = AcSpec(3, 1)
        positives = encode_batch(train_set.subset(train_set.labels == 1).images)
        expected, _ = ac_loss_and_grad(positives, spec, init_params(spec.num_params, 1).values)
        assert history.losses[0] == pytest.approx(expected)

    def test_threshold_is_calibrated(self, bas_split: tuple[LabeledImageSet, LabeledImageSet]) -> None:
        history = train(bas_split[0], SMALL_AC, bas_split[1])
        assert history.params.ac_threshold is not None
        assert 0.0 <= history.params.ac_threshold <= 1.0
        assert history.losses[-1] < history.losses[0]

    def test_needs_positive_samples(self, bas_split: tuple[LabeledImageSet, LabeledImageSet]) -> None:
        train_set = bas_split[0]
        negatives = train_set.subset(train_set.labels == -1)
        with pytest.raises(TrainingError, match="positive"):
            train(negatives, SMALL_AC)

    def test_rejects_three_class_labels(self, bas_split: tuple[LabeledImageSet, LabeledImageSet]) -> None:
        images = bas_split[0].images[:3]
        dataset = LabeledImageSet(images, [0, 1, 2], bas_split[0].meta)
        with pytest.raises(TrainingError, match="binary"):
            train(dataset, SMALL_AC)


def test_empty_training_set() -> None:
    empty = LabeledImageSet((), np.array([], dtype=np.int64), DatasetMeta(DatasetKind.BAS, 1, 0))
    with pytest.raises(ValueError, match="must not be empty"):
        train(empty, SMALL_VQC)


def test_evaluate_rejects_empty_and_mismatched_sets(bas_split: tuple[LabeledImageSet, LabeledImageSet]) -> None:
    model = train(bas_split[0], TrainConfig(ClassifierKind.VQC, epochs=1, layers=1)).model
    empty = LabeledImageSet((), np.array([], dtype=np.int64), DatasetMeta(DatasetKind.BAS, 1, 0))
    with pytest.raises(ValueError, match="must not be empty"):
        evaluate(model, empty)
    with pytest.raises(ValueError, match="do not match a FRQI model"):
        evaluate(model, gen_bas(2, 4, seed=0))


def test_identical_classes_give_chance_accuracy() -> None:
    # ceiling markers at shade 255 make positives and negatives identically distributed
    train_set = gen_color22(255, 20, seed=0, marker=MarkerMode.CEILING)
    validation = gen_color22(255, 1000, seed=VALIDATION_SEED_OFFSET, marker=MarkerMode.CEILING)
    history = train(train_set, TrainConfig(ClassifierKind.VQC, epochs=1, layers=1, calibrate=False), validation)
    assert history.validation_accuracy == pytest.approx(0.5, abs=0.05)


@pytest.mark.slow
@pytest.mark.parametrize("classifier", [ClassifierKind.VQC, ClassifierKind.AC])
def test_bas_single_qubit_side_is_learned(classifier: ClassifierKind) -> None:
    train_set = gen_bas(1, 100, seed=0)
    validation = gen_bas(1, 1000, seed=VALIDATION_SEED_OFFSET)
    history = train(train_set, TrainConfig(classifier), validation)
    assert history.validation_accuracy is not None
    minimum_accuracy = 0.95
    assert history.validation_accuracy >= minimum_accuracy


@pytest.mark.slow
def test_vqc_fits_bas_single_qubit_side_for_most_seeds() -> None:
    train_set = gen_bas(1, 100, seed=0)
    accuracies = [train(train_set, TrainConfig(ClassifierKind.VQC, train_size=100, seed=seed)).train_accuracy for seed in range(5)]
    required_seeds = 4
    assert sum(accuracy == 1.0 for accuracy in accuracies) >= required_seeds


@pytest.mark.slow
def test_ac_fidelity_settles_over_the_last_epochs() -> None:
    history = train(gen_bas(1, 100, seed=0), TrainConfig(ClassifierKind.AC, train_size=100, seed=0))
    fidelities = 1.0 - np.asarray(history.losses[-50:])
    drops = np.maximum.accumulate(fidelities) - fidelities
    tolerance = 0.02
    assert drops.max() <= tolerance
