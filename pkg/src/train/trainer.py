"""
Full-batch training, calibration and evaluation of the image classifiers.

Encoded states are computed once per image (through the state cache);
only the ansatz parameters are differentiated.
"""

from __future__ import annotations

import logging
import time
from dataclasses import dataclass, field, replace
from enum import Enum

import numpy as np

from ..cache import StateCache
from ..classify import (
    DEFAULT_AC_THRESHOLD,
    DEFAULT_MULTI_BOUNDS,
    DEFAULT_SPLIT,
    AcSpec,
    AnsatzSpec,
    ClassifierParams,
    ac_fidelities,
    ac_loss_and_grad,
    calibrate_bounds,
    calibrate_split,
    calibrate_threshold,
    classify_bounds,
    classify_split,
    classify_threshold,
    init_params,
    multiclass_targets,
    vqc_loss_and_grad,
    vqc_scores,
)
from ..encode import Encoder, encode_batch, encoder_for, num_qubits_for
from ..load.dataset import DatasetKind, DatasetMeta, LabeledImageSet
from .adam import DEFAULT_STEP_SIZE, AdamHyper, AdamState, TrainingError, adam_step

logger = logging.getLogger(__name__)

DEFAULT_EPOCHS = 250
AC_MNIST_SMALL_EPOCHS = 100
DEFAULT_LAYERS = {"VQC": 5, "AC": 1}
DEFAULT_VALIDATION_SIZE = 1000


class ClassifierKind(Enum):
    VQC = "VQC"
    AC = "AC"

    @classmethod
    def parse(cls, value: str) -> ClassifierKind:
        try:
            return cls(value.strip().upper())
        except ValueError as exc:
            raise ValueError(f"unknown classifier {value!r}; expected VQC or AC") from exc


@dataclass(frozen=True)
class TrainConfig:
    """
    Attributes:
        classifier: VQC or AC.
        epochs: Adam steps; None applies the default rule (250, or 100 for AC on MNIST with n < 3).
        train_size: Training samples.
        validation_size: Validation samples.
        seed: Seed for data draws and parameter initialization.
        layers: Ansatz layers; None means 5 for VQC and 1 for AC.
        step_size: Adam step size.
        calibrate: Grid-search the split, bounds or threshold on the training set after the last epoch.
    """

    classifier: ClassifierKind = ClassifierKind.VQC
    epochs: int | None = None
    train_size: int = 100
    validation_size: int = DEFAULT_VALIDATION_SIZE
    seed: int = 0
    layers: int | None = None
    step_size: float = DEFAULT_STEP_SIZE
    calibrate: bool = True

    def __post_init__(self) -> None:
        if self.epochs is not None and self.epochs < 1:
            raise ValueError(f"epochs must be >= 1, got {self.epochs}")
        if self.train_size < 1 or self.validation_size < 1:
            raise ValueError("train_size and validation_size must be >= 1")
        if self.layers is not None and self.layers < 1:
            raise ValueError(f"layers must be >= 1, got {self.layers}")

    def resolved_layers(self) -> int:
        return self.layers if self.layers is not None else DEFAULT_LAYERS[self.classifier.value]

    def resolved_epochs(self, meta: DatasetMeta) -> int:
        if self.epochs is not None:
            return self.epochs
        if self.classifier is ClassifierKind.AC and meta.source in (DatasetKind.MNIST, DatasetKind.MNIST_CORRUPT) and meta.n < 3:
            return AC_MNIST_SMALL_EPOCHS
        return DEFAULT_EPOCHS


@dataclass(frozen=True)
class TrainedClassifier:
    """A classifier ready for prediction: kind, register shape and trained parameters."""

    kind: ClassifierKind
    encoder: Encoder
    n: int
    layers: int
    params: ClassifierParams
    multiclass: bool = False

    @property
    def num_qubits(self) -> int:
        return num_qubits_for(self.encoder, self.n)

    def scores(self, amplitudes: np.ndarray) -> np.ndarray:
        """ez (VQC) or trash fidelity (AC) per encoded state."""
        if self.kind is ClassifierKind.AC:
            return ac_fidelities(amplitudes, AcSpec(self.num_qubits, self.layers), self.params)
        return vqc_scores(amplitudes, AnsatzSpec(self.num_qubits, self.layers), self.params)

    def predict_scores(self, scores: np.ndarray, calibrated: bool = True) -> np.ndarray:
        """Apply the decision rule; ``calibrated=False`` uses the untrained defaults."""
        if self.kind is ClassifierKind.AC:
            threshold = self.params.ac_threshold if calibrated and self.params.ac_threshold is not None else DEFAULT_AC_THRESHOLD
            return classify_threshold(scores, threshold)
        if self.multiclass:
            bounds = self.params.multi_bounds if calibrated and self.params.multi_bounds is not None else DEFAULT_MULTI_BOUNDS
            return classify_bounds(scores, bounds)
        return classify_split(scores, self.params.split if calibrated else DEFAULT_SPLIT)


@dataclass(frozen=True)
class TrainHistory:
    """
    Attributes:
        losses: Loss per epoch, evaluated before that epoch's update.
        model: Trained classifier with calibrated thresholds.
        train_accuracy: Calibrated accuracy on the training set.
        validation_accuracy: Calibrated validation accuracy (None when no validation set was given).
        uncalibrated_accuracy: Validation accuracy with the default split/bounds/threshold.
        wall_time_s: Training wall time.
    """

    losses: tuple[float, ...] = field(repr=False)
    model: TrainedClassifier
    train_accuracy: float
    validation_accuracy: float | None = None
    uncalibrated_accuracy: float | None = None
    wall_time_s: float = 0.0

    @property
    def params(self) -> ClassifierParams:
        return self.model.params

    @property
    def final_loss(self) -> float:
        return self.losses[-1]


def _check_labels(dataset: LabeledImageSet, kind: ClassifierKind) -> None:
    if not len(dataset):
        raise ValueError("dataset must not be empty")
    if dataset.is_multiclass and kind is ClassifierKind.AC:
        raise TrainingError("the autoencoder classifier is binary; three-class labels need the VQC")


def _calibrate(model: TrainedClassifier, scores: np.ndarray, labels: np.ndarray) -> ClassifierParams:
    params = model.params
    if model.kind is ClassifierKind.AC:
        return replace(params, ac_threshold=calibrate_threshold(scores, labels))
    if model.multiclass:
        return replace(params, multi_bounds=calibrate_bounds(scores, labels))
    return replace(params, split=calibrate_split(scores, labels))


def train(
    dataset: LabeledImageSet,
    cfg: TrainConfig,
    validation: LabeledImageSet | None = None,
    cache: StateCache | None = None,
) -> TrainHistory:
    """
    Train a classifier with one full-batch Adam step per epoch.

    The VQC minimizes mean (ez - target)**2 over the whole set; the AC
    minimizes 1 - mean trash fidelity over the positive (+1) samples only.
    After the last epoch the decision threshold is calibrated (if enabled)
    and, when given, the validation set is scored.

    Raises:
        ValueError: If the dataset is empty.
        TrainingError: On AC without positive samples, AC on three-class
            labels, or a non-finite loss or gradient.
    """
    _check_labels(dataset, cfg.classifier)
    started = time.monotonic()

    encoder = encoder_for(dataset.images[0])
    n = dataset.images[0].n
    layers = cfg.resolved_layers()
    epochs = cfg.resolved_epochs(dataset.meta)
    num_qubits = num_qubits_for(encoder, n)
    amplitudes = encode_batch(dataset.images, cache)
    labels = dataset.labels
    multiclass = dataset.is_multiclass

    if cfg.classifier is ClassifierKind.AC:
        positives = amplitudes[labels == 1]
        if positives.shape[0] == 0:
            raise TrainingError("autoencoder training needs at least one positive (+1) sample")
        ac_spec = AcSpec(num_qubits, layers)
        num_params = ac_spec.num_params

        def objective(values: np.ndarray) -> tuple[float, np.ndarray]:
            return ac_loss_and_grad(positives, ac_spec, values)

    else:
        ansatz = AnsatzSpec(num_qubits, layers)
        targets = multiclass_targets(labels) if multiclass else labels.astype(np.float64)
        num_params = ansatz.num_params

        def objective(values: np.ndarray) -> tuple[float, np.ndarray]:
            return vqc_loss_and_grad(amplitudes, targets, ansatz, values)

    logger.info(
        "Training started",
        extra={
            "classifier": cfg.classifier.value,
            "encoder": encoder.value,
            "n": n,
            "qubits": num_qubits,
            "layers": layers,
            "params": num_params,
            "epochs": epochs,
            "samples": len(dataset),
        },
    )

    values = init_params(num_params, cfg.seed).values.copy()
    adam = AdamState.fresh(num_params, AdamHyper(step_size=cfg.step_size))
    losses: list[float] = []
    for epoch in range(epochs):
        loss, grad = objective(values)
        if not np.isfinite(loss):
            raise TrainingError(f"non-finite loss {loss!r} at epoch {epoch}")
        losses.append(loss)
        values, adam = adam_step(values, grad, adam)
        logger.debug("Epoch finished", extra={"epoch": epoch, "loss": loss})

    model = TrainedClassifier(cfg.classifier, encoder, n, layers, ClassifierParams(values), multiclass)
    train_scores = model.scores(amplitudes)
    if cfg.calibrate:
        model = replace(model, params=_calibrate(model, train_scores, labels))
    train_accuracy = float(np.mean(model.predict_scores(train_scores) == labels))

    validation_accuracy = None
    uncalibrated_accuracy = None
    if validation is not None:
        validation_accuracy = evaluate(model, validation, cache=cache)
        uncalibrated_accuracy = evaluate(model, validation, calibrated=False, cache=cache)

    elapsed = time.monotonic() - started
    logger.info(
        "Training finished",
        extra={
            "classifier": cfg.classifier.value,
            "final_loss": losses[-1],
            "train_accuracy": train_accuracy,
            "validation_accuracy": validation_accuracy,
            "elapsed_ms": int(elapsed * 1000),
        },
    )
    return TrainHistory(tuple(losses), model, train_accuracy, validation_accuracy, uncalibrated_accuracy, elapsed)


def evaluate(
    model: TrainedClassifier,
    validation: LabeledImageSet,
    calibrated: bool = True,
    cache: StateCache | None = None,
) -> float:
    """
    Fraction of validation samples labeled correctly, in [0, 1].

    Raises:
        ValueError: If the validation set is empty or does not match the model's encoder and size.
    """
    if not len(validation):
        raise ValueError("validation set must not be empty")
    sample = validation.images[0]
    if encoder_for(sample) is not model.encoder or sample.n != model.n:
        raise ValueError(f"validation images do not match a {model.encoder.value} model for n={model.n}")
    scores = model.scores(encode_batch(validation.images, cache))
    return float(np.mean(model.predict_scores(scores, calibrated) == validation.labels))
