"""
Dispatch from a DatasetSpec to the matching generator or loader.
"""

from __future__ import annotations

import logging

from ..config import Settings
from .bas import gen_bas
from .color import MarkerMode, gen_color22
from .corrupted import load_corrupted
from .dataset import VALIDATION_SEED_OFFSET, DatasetKind, DatasetSpec, LabeledImageSet
from .mnist import load_mnist

logger = logging.getLogger(__name__)


def build_dataset(
    spec: DatasetSpec,
    settings: Settings,
    count: int | None = None,
    seed: int | None = None,
    offset: int = 0,
) -> LabeledImageSet:
    """
    Generate or load the set described by ``spec``.

    ``count`` and ``seed`` override the spec's values; ``offset`` only
    applies to file-backed kinds.
    """
    size = spec.count if count is None else count
    draw_seed = spec.seed if seed is None else seed
    if spec.kind is DatasetKind.BAS:
        return gen_bas(spec.n, size, draw_seed)
    if spec.kind is DatasetKind.COLOR22:
        return gen_color22(spec.shade, size, draw_seed, MarkerMode.parse(spec.marker))

    root = settings.resolve_data_path(spec.path)
    if spec.kind is DatasetKind.MNIST:
        return load_mnist(root, spec.digits, spec.n, size, draw_seed, offset=offset, split=spec.split)
    return load_corrupted(root, spec.corruption, spec.digits, spec.n, size, draw_seed, offset=offset, split=spec.split)


def build_split(spec: DatasetSpec, settings: Settings, train_size: int, validation_size: int) -> tuple[LabeledImageSet, LabeledImageSet]:
    """
    Draw disjoint training and validation sets.

    Generated kinds use the spec seed for training and a fixed offset from it
    for validation; file-backed kinds slice one seeded permutation.
    """
    if spec.kind in (DatasetKind.BAS, DatasetKind.COLOR22):
        train = build_dataset(spec, settings, count=train_size)
        validation = build_dataset(spec, settings, count=validation_size, seed=spec.seed + VALIDATION_SEED_OFFSET)
    else:
        train = build_dataset(spec, settings, count=train_size, offset=0)
        validation = build_dataset(spec, settings, count=validation_size, offset=train_size)
    logger.info(
        "Built train/validation split",
        extra={"kind": spec.kind.value, "n": spec.n, "train_size": len(train), "validation_size": len(validation)},
    )
    return train, validation
