"""
Sweep execution and report persistence.

Each sweep cell draws its train/validation split, trains one classifier and
appends one row to the CSV report as soon as it finishes, so an interrupted
sweep keeps every completed row.
"""

from __future__ import annotations

import asyncio
import csv
import logging
import time
from collections.abc import Iterable
from dataclasses import asdict, dataclass, fields
from pathlib import Path
from typing import Any, TextIO

from ..cache import StateCache, get_state_cache
from ..config import Settings
from ..load import DatasetKind, build_split
from ..train import TrainConfig, train
from .config_file import ExperimentCell, ExperimentConfig, ReportError, check_pairing

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ReportRow:
    """One completed sweep cell; field order is the CSV column order."""

    cell: int
    name: str
    encoder: str
    dataset: str
    n: int
    shade: int | None
    corruption: str | None
    digits: str
    classifier: str
    train_size: int
    validation_size: int
    epochs: int
    layers: int
    seed: int
    accuracy: float
    uncalibrated_accuracy: float
    train_accuracy: float
    final_loss: float
    wall_time_s: float


COLUMNS = tuple(f.name for f in fields(ReportRow))
_INT_COLUMNS = frozenset({"cell", "n", "train_size", "validation_size", "epochs", "layers", "seed"})
_FLOAT_COLUMNS = frozenset({"accuracy", "uncalibrated_accuracy", "train_accuracy", "final_loss", "wall_time_s"})


def _format_cell(value: Any) -> str:
    if value is None:
        return ""
    return repr(value) if isinstance(value, float) else str(value)


def row_values(row: ReportRow) -> list[str]:
    """CSV cell strings in column order; floats keep full precision."""
    return [_format_cell(value) for value in asdict(row).values()]


def _parse_row(record: dict[str, str], line: int) -> ReportRow:
    values: dict[str, Any] = {}
    try:
        for column in COLUMNS:
            raw = record[column]
            if column in _INT_COLUMNS:
                values[column] = int(raw)
            elif column in _FLOAT_COLUMNS:
                values[column] = float(raw)
            elif column == "shade":
                values[column] = int(raw) if raw else None
            elif column == "corruption":
                values[column] = raw or None
            else:
                values[column] = raw
    except (KeyError, TypeError, ValueError) as exc:
        raise ReportError(f"report line {line}: {exc}") from exc
    return ReportRow(**values)


@dataclass(frozen=True)
class ExperimentReport:
    """Report rows in cell order."""

    rows: tuple[ReportRow, ...] = ()

    def __len__(self) -> int:
        return len(self.rows)

    @classmethod
    def of(cls, rows: Iterable[ReportRow]) -> ExperimentReport:
        return cls(tuple(sorted(rows, key=lambda row: row.cell)))


class ReportWriter:
    """Append-only CSV writer: header on open, one flushed row per completed cell."""

    def __init__(self, path: str | Path) -> None:
        self.path = Path(path)
        self._handle: TextIO | None = None
        self._writer: Any = None

    def __enter__(self) -> ReportWriter:
        self.path.parent.mkdir(parents=True, exist_ok=True)
        self._handle = self.path.open("w", encoding="utf-8", newline="")
        self._writer = csv.writer(self._handle)
        self._writer.writerow(COLUMNS)
        self._handle.flush()
        return self

    def append(self, row: ReportRow) -> None:
        if self._handle is None:
            raise ReportError("report writer is not open")
        self._writer.writerow(row_values(row))
        self._handle.flush()

    def __exit__(self, *exc_info: object) -> None:
        if self._handle is not None:
            self._handle.close()
            self._handle = None


def load_report(path: str | Path) -> ExperimentReport:
    """
    Read a CSV report written by ``run_experiment``.

    Raises:
        FileNotFoundError: If the file does not exist.
        ReportError: If the header or a row is malformed.
    """
    with Path(path).open(encoding="utf-8", newline="") as handle:
        reader = csv.DictReader(handle)
        if reader.fieldnames is None or tuple(reader.fieldnames) != COLUMNS:
            raise ReportError(f"{path} is not a report: expected columns {', '.join(COLUMNS)}")
        return ExperimentReport.of(_parse_row(record, line) for line, record in enumerate(reader, start=2))


def run_cell(cfg: ExperimentConfig, cell: ExperimentCell, settings: Settings, cache: StateCache | None = None) -> ReportRow:
    """Generate or load data for ``cell``, train, evaluate and build its report row."""
    check_pairing(cfg.encoder, cell.dataset.kind)
    started = time.monotonic()
    train_cfg: TrainConfig = cell.train
    train_set, validation_set = build_split(cell.dataset, settings, train_cfg.train_size, train_cfg.validation_size)
    history = train(train_set, train_cfg, validation_set, cache=cache)
    wall_time = time.monotonic() - started

    spec = cell.dataset
    file_backed = spec.kind in (DatasetKind.MNIST, DatasetKind.MNIST_CORRUPT)
    row = ReportRow(
        cell=cell.index,
        name=cfg.name,
        encoder=cfg.encoder.value,
        dataset=spec.kind.value,
        n=spec.n,
        shade=spec.shade if spec.kind is DatasetKind.COLOR22 else None,
        corruption=spec.corruption if spec.kind is DatasetKind.MNIST_CORRUPT else None,
        digits="/".join(str(d) for d in spec.digits) if file_backed else "",
        classifier=train_cfg.classifier.value,
        train_size=train_cfg.train_size,
        validation_size=train_cfg.validation_size,
        epochs=len(history.losses),
        layers=history.model.layers,
        seed=train_cfg.seed,
        accuracy=history.validation_accuracy if history.validation_accuracy is not None else 0.0,
        uncalibrated_accuracy=history.uncalibrated_accuracy if history.uncalibrated_accuracy is not None else 0.0,
        train_accuracy=history.train_accuracy,
        final_loss=history.final_loss,
        wall_time_s=wall_time,
    )
    logger.info(
        "Sweep cell finished",
        extra={"cell": cell.index, "classifier": row.classifier, "n": row.n, "accuracy": row.accuracy, "wall_time_s": wall_time},
    )
    return row


async def run_cells(
    cfg: ExperimentConfig,
    settings: Settings,
    writer: ReportWriter,
    parallel: int = 1,
    cache: StateCache | None = None,
) -> ExperimentReport:
    """
    Run every sweep cell, at most ``parallel`` at a time, in worker threads.

    Rows are appended to ``writer`` in completion order from the event loop,
    which keeps the writer single-threaded.
    """
    if parallel < 1:
        raise ValueError(f"parallel must be >= 1, got {parallel}")
    cells = cfg.cells()
    semaphore = asyncio.Semaphore(parallel)
    rows: list[ReportRow] = []

    async def _run(cell: ExperimentCell) -> None:
        async with semaphore:
            row = await asyncio.to_thread(run_cell, cfg, cell, settings, cache)
        writer.append(row)
        rows.append(row)

    logger.info("Sweep started", extra={"experiment": cfg.name, "cells": len(cells), "parallel": parallel})
    tasks = [asyncio.create_task(_run(cell)) for cell in cells]
    try:
        await asyncio.gather(*tasks)
    except BaseException:
        for task in tasks:
            task.cancel()
        await asyncio.gather(*tasks, return_exceptions=True)
        raise
    return ExperimentReport.of(rows)


def run_experiment(
    cfg: ExperimentConfig,
    settings: Settings | None = None,
    out: str | Path | None = None,
    parallel: int | None = None,
) -> ExperimentReport:
    """
    Run the whole sweep and write the CSV report.

    Args:
        cfg: Parsed experiment.
        settings: Environment settings; loaded from the environment when omitted.
        out: Report path; defaults to ``cfg.output``.
        parallel: Concurrent cells; defaults to ``settings.parallel``.

    Returns:
        The report, one row per sweep cell in cell order.

    Raises:
        ReportError: On an invalid encoder/dataset pairing.
        FileNotFoundError: If a dataset path cannot be read.
    """
    settings = settings or Settings.from_env()
    cache = get_state_cache(settings)
    path = Path(out) if out is not None else Path(cfg.output)
    with ReportWriter(path) as writer:
        report = asyncio.run(run_cells(cfg, settings, writer, parallel or settings.parallel, cache))
    logger.info("Report written", extra={"path": str(path), "rows": len(report)})
    return report
