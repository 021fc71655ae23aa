"""
Quantum image classifiers: variational Z-split (VQC) and autoencoder (AC).
"""

from .ansatz import AnsatzSpec, build_ansatz
from .autoencoder import AcSpec, ac_classify, ac_fidelities, ac_fidelity, ac_loss, ac_loss_and_grad
from .calibration import (
    calibrate_bounds,
    calibrate_split,
    calibrate_threshold,
    classify_bounds,
    classify_split,
    classify_threshold,
)
from .params import DEFAULT_AC_THRESHOLD, DEFAULT_MULTI_BOUNDS, DEFAULT_SPLIT, ClassifierParams, init_params
from .vqc import multiclass_targets, vqc_classify, vqc_classify_multi, vqc_ez, vqc_loss, vqc_loss_and_grad, vqc_scores

__all__ = [
    "DEFAULT_AC_THRESHOLD",
    "DEFAULT_MULTI_BOUNDS",
    "DEFAULT_SPLIT",
    "AcSpec",
    "AnsatzSpec",
    "ClassifierParams",
    "ac_classify",
    "ac_fidelities",
    "ac_fidelity",
    "ac_loss",
    "ac_loss_and_grad",
    "build_ansatz",
    "calibrate_bounds",
    "calibrate_split",
    "calibrate_threshold",
    "classify_bounds",
    "classify_split",
    "classify_threshold",
    "init_params",
    "multiclass_targets",
    "vqc_classify",
    "vqc_classify_multi",
    "vqc_ez",
    "vqc_loss",
    "vqc_loss_and_grad",
    "vqc_scores",
]
