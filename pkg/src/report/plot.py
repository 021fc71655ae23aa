"""
Validation accuracy as a function of marker shade.
"""

from __future__ import annotations

import logging
from collections import defaultdict
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402

from .config_file import ReportError  # noqa: E402
from .experiment import ExperimentReport  # noqa: E402

logger = logging.getLogger(__name__)

PANELS = ("VQC", "AC")
SVG_HASH_SALT = "qir-classify"


def shade_series(report: ExperimentReport, classifier: str) -> dict[int, tuple[list[int], list[float]]]:
    """
    Per train size, sorted shades and the mean accuracy at each shade.
    """
    points: dict[int, dict[int, list[float]]] = defaultdict(lambda: defaultdict(list))
    for row in report.rows:
        if row.classifier == classifier and row.shade is not None:
            points[row.train_size][row.shade].append(row.accuracy)
    series = {}
    for size in sorted(points):
        shades = sorted(points[size])
        series[size] = (shades, [float(np.mean(points[size][shade])) for shade in shades])
    return series


def emit_shade_plot(report: ExperimentReport, path: str | Path) -> Path:
    """
    Write a two-panel SVG (VQC left, AC right) with one accuracy-vs-shade polyline per train size.

    Raises:
        ReportError: If the report is empty or holds no shade values.
    """
    if not report.rows:
        raise ReportError("cannot plot an empty report")
    shades = sorted({row.shade for row in report.rows if row.shade is not None})
    if not shades:
        raise ReportError("report has no shade values to plot")

    target = Path(path)
    target.parent.mkdir(parents=True, exist_ok=True)
    with plt.rc_context({"svg.hashsalt": SVG_HASH_SALT}):
        fig, axes = plt.subplots(1, len(PANELS), figsize=(10, 4), sharey=True)
        for ax, classifier in zip(axes, PANELS, strict=True):
            for size, (xs, ys) in shade_series(report, classifier).items():
                ax.plot(xs, ys, marker="o", label=f"train size {size}")
            ax.set_title(classifier)
            ax.set_xlabel("shade")
            ax.set_xticks(shades)
            ax.set_ylim(0.0, 1.05)
            ax.grid(True, alpha=0.3)
            if ax.has_data():
                ax.legend(loc="lower left")
        axes[0].set_ylabel("validation accuracy")
        fig.tight_layout()
        fig.savefig(target, format="svg", metadata={"Date": None})
        plt.close(fig)

    logger.info("Shade plot written", extra={"path": str(target), "shades": len(shades)})
    return target
