"""
CSV and markdown rendering of experiment reports.
"""

from __future__ import annotations

import csv
import io
import logging
from collections import defaultdict
from collections.abc import Callable
from enum import Enum
from pathlib import Path
from typing import Any

import numpy as np

from .config_file import ReportError
from .experiment import COLUMNS, ExperimentReport, ReportRow, row_values

logger = logging.getLogger(__name__)

PIVOT_FIELDS = ("shade", "corruption", "n")
SPLIT_FIELDS = ("encoder", "dataset", "n", "shade", "corruption", "digits", "layers", "epochs", "validation_size")
CLASSIFIER_ORDER = {"VQC": 0, "AC": 1}


class TableFormat(Enum):
    CSV = "csv"
    MARKDOWN = "md"

    @classmethod
    def parse(cls, value: str) -> TableFormat:
        lowered = value.strip().lower()
        if lowered == "markdown":
            return cls.MARKDOWN
        try:
            return cls(lowered)
        except ValueError as exc:
            raise ReportError(f"unknown table format {value!r}; expected csv or md") from exc


def pivot_field(report: ExperimentReport) -> str:
    """Column field of the markdown table: the first of shade, corruption, n that varies (n when none does)."""
    for name in PIVOT_FIELDS:
        values = {getattr(row, name) for row in report.rows}
        if None not in values and len(values) > 1:
            return name
    return "n"


def render_csv(report: ExperimentReport) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer)
    writer.writerow(COLUMNS)
    writer.writerows(row_values(row) for row in report.rows)
    return buffer.getvalue()


def row_key_fields(report: ExperimentReport, column: str) -> tuple[str, ...]:
    """
    Fields that vary between rows sharing train size, classifier and pivot value.

    They join the row key so only repeated seeds are averaged into one cell.
    """
    groups: dict[tuple[Any, ...], list[ReportRow]] = defaultdict(list)
    for row in report.rows:
        groups[(row.train_size, row.classifier, getattr(row, column))].append(row)
    return tuple(
        name
        for name in SPLIT_FIELDS
        if name != column and any(len({getattr(row, name) for row in rows}) > 1 for rows in groups.values())
    )


def _value_order(value: Any) -> tuple[int, Any]:
    return (0, "") if value is None else (1, value)


def render_markdown(report: ExperimentReport) -> str:
    """
    Accuracy table with one row per (train size, classifier) and one column per pivot value.

    Fields that vary inside one such cell (e.g. swept layers) become extra
    row columns; cells shared by several report rows (a swept seed) show their mean.
    """
    column = pivot_field(report)
    extras = row_key_fields(report, column)
    grouped: dict[tuple[Any, ...], dict[object, list[float]]] = defaultdict(lambda: defaultdict(list))
    for row in report.rows:
        key = (row.train_size, row.classifier, *(getattr(row, name) for name in extras))
        grouped[key][getattr(row, column)].append(row.accuracy)

    pivots = sorted({getattr(row, column) for row in report.rows}, key=_pivot_key(report, column))
    row_keys = sorted(
        grouped,
        key=lambda key: (key[0], CLASSIFIER_ORDER.get(key[1], len(CLASSIFIER_ORDER)), key[1], *(_value_order(v) for v in key[2:])),
    )

    leading = ["train_size", "classifier", *extras]
    lines = [
        "| " + " | ".join(leading) + " | " + " | ".join(f"{column}={value}" for value in pivots) + " |",
        "| " + " | ".join("---" for _ in leading) + " | " + " | ".join("---" for _ in pivots) + " |",
    ]
    for key in row_keys:
        cells = grouped[key]
        rendered = [f"{np.mean(cells[value]):.3f}" if value in cells else "-" for value in pivots]
        labels = ["" if value is None else str(value) for value in key]
        lines.append("| " + " | ".join(labels) + " | " + " | ".join(rendered) + " |")
    return "\n".join(lines) + "\n"


def _pivot_key(report: ExperimentReport, column: str) -> Callable[[Any], Any]:
    if column == "corruption":
        first_seen: dict[Any, int] = {}
        for row in report.rows:
            first_seen.setdefault(row.corruption, row.cell)
        return lambda value: first_seen[value]
    return lambda value: value


def emit_table(report: ExperimentReport, fmt: TableFormat | str = TableFormat.MARKDOWN, path: str | Path | None = None) -> str:
    """
    Render ``report`` as CSV (RFC 4180 quoting, report column order) or markdown.

    Args:
        report: Non-empty report.
        fmt: Output format.
        path: Optional destination file.

    Returns:
        The rendered text; identical input gives byte-identical output.

    Raises:
        ReportError: If the report is empty.
    """
    if not report.rows:
        raise ReportError("cannot emit a table from an empty report")
    table_format = fmt if isinstance(fmt, TableFormat) else TableFormat.parse(fmt)
    text = render_csv(report) if table_format is TableFormat.CSV else render_markdown(report)
    if path is not None:
        target = Path(path)
        target.parent.mkdir(parents=True, exist_ok=True)
        target.write_text(text, encoding="utf-8", newline="")
        logger.info("Table written", extra={"path": str(target), "format": table_format.value, "rows": len(report)})
    return text
