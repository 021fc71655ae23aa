"""
Persistence of labeled image sets as compressed ``.npz`` archives.

Archive members: ``pixels`` (count, 4**n) or (count, 4**n, 3) uint8,
``labels`` (count,) int64 and ``meta`` (JSON string).
"""

from __future__ import annotations

import json
from dataclasses import asdict
from pathlib import Path
from typing import Any

import numpy as np

from ..encode import ColorImage, GrayImage
from .dataset import DatasetError, DatasetKind, DatasetMeta, LabeledImageSet


def save_image_set(dataset: LabeledImageSet, path: Path) -> Path:
    """Write ``dataset`` to ``path`` and return the path."""
    if not len(dataset):
        raise DatasetError("refusing to save an empty dataset")
    meta: dict[str, Any] = asdict(dataset.meta)
    meta["source"] = dataset.meta.source.value
    meta["digits"] = list(dataset.meta.digits)
    pixels = np.stack([image.pixels for image in dataset.images])
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with path.open("wb") as f:
        np.savez_compressed(f, pixels=pixels, labels=dataset.labels, meta=np.array(json.dumps(meta, sort_keys=True)))
    return path


def load_image_set(path: Path) -> LabeledImageSet:
    """
    Read a set written by save_image_set.

    Raises:
        FileNotFoundError: If the file is missing.
        DatasetError: If members are missing or malformed.
    """
    with np.load(Path(path), allow_pickle=False) as archive:
        try:
            pixels = archive["pixels"]
            labels = archive["labels"]
            raw_meta = json.loads(str(archive["meta"]))
        except KeyError as exc:
            raise DatasetError(f"{path} is missing archive member {exc}") from exc

    meta = DatasetMeta(
        source=DatasetKind(raw_meta["source"]),
        n=int(raw_meta["n"]),
        seed=int(raw_meta["seed"]),
        shade=raw_meta.get("shade"),
        corruption=raw_meta.get("corruption"),
        digits=tuple(raw_meta.get("digits", ())),
    )
    if pixels.ndim == 3:
        images: tuple[GrayImage, ...] | tuple[ColorImage, ...] = tuple(ColorImage(meta.n, row) for row in pixels)
    else:
        images = tuple(GrayImage(meta.n, row) for row in pixels)
    return LabeledImageSet(images, labels, meta)
