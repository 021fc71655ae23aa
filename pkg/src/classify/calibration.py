"""
Post-training decision-threshold calibration and vectorized decision rules.

Each search scans a 101-point grid and keeps the training-accuracy maximizer;
ties go to the candidate closest to the untrained default.
"""

from __future__ import annotations

import numpy as np

from .params import DEFAULT_AC_THRESHOLD, DEFAULT_MULTI_BOUNDS, DEFAULT_SPLIT

GRID_POINTS = 101


def classify_split(scores: np.ndarray, split: float) -> np.ndarray:
    """Vectorized VQC rule: -1 where ez <= split, else +1."""
    return np.where(np.asarray(scores) <= split, -1, 1)


def classify_bounds(scores: np.ndarray, bounds: tuple[float, float]) -> np.ndarray:
    """Vectorized three-class rule: 0, 1 or 2 by position of ez against (b1, b2)."""
    values = np.asarray(scores)
    return np.where(values <= bounds[0], 0, np.where(values <= bounds[1], 1, 2))


def classify_threshold(fidelities: np.ndarray, threshold: float) -> np.ndarray:
    """Vectorized AC rule: +1 where fidelity > threshold, else -1."""
    return np.where(np.asarray(fidelities) > threshold, 1, -1)


def _best(accuracy: np.ndarray, distance: np.ndarray) -> int:
    best = accuracy.max()
    candidates = np.flatnonzero(accuracy == best)
    return int(candidates[np.argmin(distance[candidates])])


def calibrate_split(scores: np.ndarray, labels: np.ndarray) -> float:
    """Split s on a 101-point grid over [-1, 1] maximizing binary accuracy."""
    grid = np.linspace(-1.0, 1.0, GRID_POINTS)
    values = np.asarray(scores)[np.newaxis, :]
    predictions = np.where(values <= grid[:, np.newaxis], -1, 1)
    accuracy = (predictions == np.asarray(labels)[np.newaxis, :]).sum(axis=1)
    return float(grid[_best(accuracy, np.abs(grid - DEFAULT_SPLIT))])


def calibrate_threshold(fidelities: np.ndarray, labels: np.ndarray) -> float:
    """AC threshold on a 101-point grid over [0, 1] maximizing binary accuracy."""
    grid = np.linspace(0.0, 1.0, GRID_POINTS)
    values = np.asarray(fidelities)[np.newaxis, :]
    predictions = np.where(values > grid[:, np.newaxis], 1, -1)
    accuracy = (predictions == np.asarray(labels)[np.newaxis, :]).sum(axis=1)
    return float(grid[_best(accuracy, np.abs(grid - DEFAULT_AC_THRESHOLD))])


def calibrate_bounds(scores: np.ndarray, labels: np.ndarray) -> tuple[float, float]:
    """
    Three-class bounds b1 < b2 from the interior of a 101-point grid over [-1, 1].

    Correct count for a pair is #(0, ez <= b1) + #(1, b1 < ez <= b2) + #(2, ez > b2),
    evaluated for all pairs at once from per-class cumulative counts.
    """
    grid = np.linspace(-1.0, 1.0, GRID_POINTS)[1:-1]
    values = np.asarray(scores)
    classes = np.asarray(labels)
    below = values[np.newaxis, :] <= grid[:, np.newaxis]
    zeros_below = (below & (classes == 0)).sum(axis=1)
    ones_below = (below & (classes == 1)).sum(axis=1)
    twos_above = (~below & (classes == 2)).sum(axis=1)

    correct = zeros_below[:, np.newaxis] - ones_below[:, np.newaxis] + ones_below[np.newaxis, :] + twos_above[np.newaxis, :]
    low_index, high_index = np.meshgrid(np.arange(grid.size), np.arange(grid.size), indexing="ij")
    valid = low_index < high_index
    correct = np.where(valid, correct, -1)
    distance = np.abs(grid[low_index] - DEFAULT_MULTI_BOUNDS[0]) + np.abs(grid[high_index] - DEFAULT_MULTI_BOUNDS[1])

    flat = _best(correct.reshape(-1), distance.reshape(-1))
    low, high = np.unravel_index(flat, correct.shape)
    return float(grid[low]), float(grid[high])
