"""
Experiment configuration files.

INI-style text parsed with configparser:

    [experiment]  name, encoder, output
    [dataset]     kind, n, count, seed, digits, shade, corruption, path, split, marker
    [train]       classifier, epochs, train_size, validation_size, seed, layers, step_size, calibrate
    [sweep]       <section>.<field> = v1, v2, ...

Sweep axes keep file order; the first axis varies slowest.
"""

from __future__ import annotations

import configparser
import itertools
from collections.abc import Callable
from dataclasses import dataclass, fields, replace
from pathlib import Path
from typing import Any

from ..encode import Encoder
from ..load import DatasetError, DatasetKind, DatasetSpec, check_corruption
from ..train import ClassifierKind, TrainConfig

DEFAULT_OUTPUT = "reports/report.csv"
SWEEP_SECTIONS = ("dataset", "train")


class ReportError(ValueError):
    """Raised for malformed experiment configs, invalid pairings and unusable reports."""

    pass


def _parse_bool(value: str) -> bool:
    lowered = value.strip().lower()
    if lowered in ("true", "yes", "on", "1"):
        return True
    if lowered in ("false", "no", "off", "0"):
        return False
    raise ValueError(f"expected true or false, got {value!r}")


def _parse_optional_int(value: str) -> int | None:
    return int(value) if value.strip() else None


def _parse_digits(value: str) -> tuple[int, ...]:
    return tuple(int(part) for part in value.replace(" ", "").replace(",", "/").split("/") if part)


def _emit_value(value: Any) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, DatasetKind | ClassifierKind | Encoder):
        return value.value
    if isinstance(value, tuple):
        return "/".join(str(v) for v in value)
    return repr(value) if isinstance(value, float) else str(value)


# Digits use "/" as separator so a sweep list stays comma-separated: digits = 0/1, 0/1/2.
_DATASET_FIELDS: dict[str, Callable[[str], Any]] = {
    "kind": DatasetKind.parse,
    "n": int,
    "count": int,
    "seed": int,
    "digits": _parse_digits,
    "shade": int,
    "corruption": str.strip,
    "path": str.strip,
    "split": lambda value: value.strip().lower(),
    "marker": lambda value: value.strip().lower(),
}

_TRAIN_FIELDS: dict[str, Callable[[str], Any]] = {
    "classifier": ClassifierKind.parse,
    "epochs": _parse_optional_int,
    "train_size": int,
    "validation_size": int,
    "seed": int,
    "layers": _parse_optional_int,
    "step_size": float,
    "calibrate": _parse_bool,
}

_FIELDS = {"dataset": _DATASET_FIELDS, "train": _TRAIN_FIELDS}


@dataclass(frozen=True)
class SweepAxis:
    """One swept field, e.g. ``dataset.n`` over ``("1", "2")``; values stay textual."""

    field: str
    values: tuple[str, ...]

    @property
    def section(self) -> str:
        return self.field.split(".", 1)[0]

    @property
    def name(self) -> str:
        return self.field.split(".", 1)[1]


@dataclass(frozen=True)
class ExperimentCell:
    """One point of the sweep grid."""

    index: int
    dataset: DatasetSpec
    train: TrainConfig
    overrides: tuple[tuple[str, str], ...] = ()


@dataclass(frozen=True)
class ExperimentConfig:
    """
    A complete experiment description.

    Attributes:
        name: Human-readable label, copied into every report row.
        encoder: FRQI for grayscale kinds, MCQI for COLOR22.
        dataset: Base dataset description.
        train: Base training configuration (includes the classifier).
        sweep: Axes of the cartesian sweep; empty for a single cell.
        output: Report path.
    """

    name: str
    encoder: Encoder
    dataset: DatasetSpec
    train: TrainConfig
    sweep: tuple[SweepAxis, ...] = ()
    output: str = DEFAULT_OUTPUT

    @property
    def classifier(self) -> ClassifierKind:
        return self.train.classifier

    @property
    def num_cells(self) -> int:
        total = 1
        for axis in self.sweep:
            total *= len(axis.values)
        return total

    def cells(self) -> list[ExperimentCell]:
        """
        Expand the sweep into cells.

        Raises:
            ReportError: If a cell pairs the encoder with a dataset of the wrong color mode.
        """
        axes = [[(axis, value) for value in axis.values] for axis in self.sweep]
        result = []
        for index, combo in enumerate(itertools.product(*axes)):
            try:
                dataset_overrides = {axis.name: _DATASET_FIELDS[axis.name](value) for axis, value in combo if axis.section == "dataset"}
                train_overrides = {axis.name: _TRAIN_FIELDS[axis.name](value) for axis, value in combo if axis.section == "train"}
                dataset = replace(self.dataset, **dataset_overrides)
                train = replace(self.train, **train_overrides)
                if dataset.kind is DatasetKind.MNIST_CORRUPT:
                    check_corruption(dataset.corruption)
            except (DatasetError, ValueError) as exc:
                raise ReportError(f"cell {index}: {exc}") from exc
            check_pairing(self.encoder, dataset.kind)
            result.append(ExperimentCell(index, dataset, train, tuple((axis.field, value) for axis, value in combo)))
        return result

    def with_seed(self, seed: int) -> ExperimentConfig:
        """Override both the dataset and the training seed."""
        return replace(self, dataset=replace(self.dataset, seed=seed), train=replace(self.train, seed=seed))


def check_pairing(encoder: Encoder, kind: DatasetKind) -> None:
    """
    Raises:
        ReportError: If FRQI is paired with color data or MCQI with grayscale data.
    """
    expected = Encoder.MCQI if kind.is_color else Encoder.FRQI
    if encoder is not expected:
        raise ReportError(f"encoder {encoder.value} cannot encode {kind.value} images; use {expected.value}")


def _new_parser() -> configparser.ConfigParser:
    parser = configparser.ConfigParser(interpolation=None, inline_comment_prefixes=("#", ";"))
    parser.optionxform = str  # type: ignore[assignment,method-assign]
    return parser


def _section_values(parser: configparser.ConfigParser, section: str, table: dict[str, Callable[[str], Any]]) -> dict[str, Any]:
    if not parser.has_section(section):
        return {}
    values = {}
    for key, raw in parser.items(section):
        if key not in table:
            raise ReportError(f"unknown key {key!r} in [{section}]; expected one of {', '.join(table)}")
        try:
            values[key] = table[key](raw)
        except (DatasetError, ValueError) as exc:
            raise ReportError(f"[{section}] {key}: {exc}") from exc
    return values


def _read(text: str) -> configparser.ConfigParser:
    parser = _new_parser()
    try:
        parser.read_string(text)
    except configparser.Error as exc:
        raise ReportError(f"malformed config: {exc}") from exc
    return parser


def parse_dataset_spec(text: str) -> DatasetSpec:
    """
    Parse a gen-data spec file: a lone ``[dataset]`` section.

    Raises:
        ReportError: On syntax errors, unknown keys or invalid values.
    """
    parser = _read(text)
    values = _section_values(parser, "dataset", _DATASET_FIELDS)
    if "kind" not in values:
        raise ReportError("[dataset] kind is required")
    try:
        return DatasetSpec(**values)
    except DatasetError as exc:
        raise ReportError(str(exc)) from exc


def parse_experiment(text: str) -> ExperimentConfig:
    """
    Parse an experiment config.

    Every sweep value is checked against the base config so errors surface
    before any training starts.

    Raises:
        ReportError: On syntax errors, unknown keys, invalid values or an
            invalid encoder/dataset pairing.
    """
    parser = _read(text)
    if not parser.has_section("experiment"):
        raise ReportError("missing [experiment] section")
    experiment = dict(parser.items("experiment"))
    unknown = set(experiment) - {"name", "encoder", "output"}
    if unknown:
        raise ReportError(f"unknown keys in [experiment]: {', '.join(sorted(unknown))}")
    try:
        encoder = Encoder.parse(experiment.get("encoder", ""))
    except ValueError as exc:
        raise ReportError(str(exc)) from exc

    dataset = parse_dataset_spec(text)
    try:
        train = TrainConfig(**_section_values(parser, "train", _TRAIN_FIELDS))
    except ValueError as exc:
        raise ReportError(f"[train] {exc}") from exc

    sweep = []
    if parser.has_section("sweep"):
        for key, raw in parser.items("sweep"):
            section, _, name = key.partition(".")
            if section not in SWEEP_SECTIONS or name not in _FIELDS[section]:
                raise ReportError(f"cannot sweep {key!r}; use dataset.<field> or train.<field>")
            values = tuple(part.strip() for part in raw.split(","))
            if not all(values):
                raise ReportError(f"sweep {key!r} has an empty value")
            sweep.append(SweepAxis(key, values))

    cfg = ExperimentConfig(
        name=experiment.get("name", "").strip() or "experiment",
        encoder=encoder,
        dataset=dataset,
        train=train,
        sweep=tuple(sweep),
        output=experiment.get("output", "").strip() or DEFAULT_OUTPUT,
    )
    check_pairing(cfg.encoder, cfg.dataset.kind)
    cfg.cells()
    return cfg


def emit_experiment(cfg: ExperimentConfig) -> str:
    """Render ``cfg`` in the file grammar; ``parse_experiment`` reads it back unchanged."""
    lines = [
        "[experiment]",
        f"name = {cfg.name}",
        f"encoder = {cfg.encoder.value}",
        f"output = {cfg.output}",
        "",
        "[dataset]",
    ]
    lines.extend(f"{f.name} = {_emit_value(getattr(cfg.dataset, f.name))}" for f in fields(DatasetSpec))
    lines.extend(["", "[train]"])
    lines.extend(f"{f.name} = {_emit_value(getattr(cfg.train, f.name))}" for f in fields(TrainConfig))
    if cfg.sweep:
        lines.extend(["", "[sweep]"])
        lines.extend(f"{axis.field} = {', '.join(axis.values)}" for axis in cfg.sweep)
    return "\n".join(lines) + "\n"


def load_experiment(path: str | Path) -> ExperimentConfig:
    """
    Read and parse an experiment config file.

    Raises:
        FileNotFoundError: If the file does not exist.
        ReportError: If the content is invalid.
    """
    return parse_experiment(Path(path).read_text(encoding="utf-8"))


def load_dataset_spec(path: str | Path) -> DatasetSpec:
    return parse_dataset_spec(Path(path).read_text(encoding="utf-8"))
