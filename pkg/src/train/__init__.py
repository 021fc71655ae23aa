"""
Training module: Adam optimization, calibration and evaluation.
"""

from .adam import AdamHyper, AdamState, TrainingError, adam_step
from .trainer import (
    DEFAULT_EPOCHS,
    ClassifierKind,
    TrainConfig,
    TrainedClassifier,
    TrainHistory,
    evaluate,
    train,
)

__all__ = [
    "DEFAULT_EPOCHS",
    "AdamHyper",
    "AdamState",
    "ClassifierKind",
    "TrainConfig",
    "TrainHistory",
    "TrainedClassifier",
    "TrainingError",
    "adam_step",
    "evaluate",
    "train",
]
