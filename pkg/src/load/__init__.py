"""
Load module for image datasets.

Generates Bars and Stripes and 2x2 color sets, reads MNIST and corrupted
MNIST from disk, and persists labeled sets.
"""

from .bas import gen_bas
from .color import MarkerMode, gen_color22
from .corrupted import CORRUPTIONS, check_corruption, load_corrupted
from .dataset import (
    VALIDATION_SEED_OFFSET,
    DatasetError,
    DatasetKind,
    DatasetMeta,
    DatasetSpec,
    LabeledImageSet,
    digit_labels,
)
from .mnist import load_mnist, read_idx
from .resize import bilinear_resize
from .source import build_dataset, build_split
from .storage import load_image_set, save_image_set

__all__ = [
    "CORRUPTIONS",
    "VALIDATION_SEED_OFFSET",
    "DatasetError",
    "DatasetKind",
    "DatasetMeta",
    "DatasetSpec",
    "LabeledImageSet",
    "MarkerMode",
    "bilinear_resize",
    "build_dataset",
    "build_split",
    "check_corruption",
    "digit_labels",
    "gen_bas",
    "gen_color22",
    "load_corrupted",
    "load_image_set",
    "load_mnist",
    "read_idx",
    "save_image_set",
]
