import numpy as np
import pytest
from src.train import AdamHyper, AdamState, TrainingError, adam_step


def test_zero_gradient_leaves_params_unchanged() -> None:
    params = np.array([0.3, -1.2, 2.0])
    updated, state = adam_step(params, np.zeros(3), AdamState.fresh(3))
    np.testing.assert_array_equal(updated, params)
    assert state.t == 1


def test_first_step_moves_by_step_size() -> None:
    updated, state = adam_step(np.array([0.0]), np.array([1.0]), AdamState.fresh(1))
    assert updated[0] == pytest.approx(-0.1, abs=1e-7)
    assert state.m[0] == pytest.approx(0.1)
    assert state.v[0] == pytest.approx(0.001)


def test_custom_step_size() -> None:
    updated, _ = adam_step(np.array([1.0]), np.array([-3.0]), AdamState.fresh(1, AdamHyper(step_size=0.5)))
    assert updated[0] == pytest.approx(1.5, abs=1e-7)


def test_second_moment_stays_non_negative() -> None:
    rng = np.random.default_rng(0)
    params = rng.normal(size=6)
    state = AdamState.fresh(6)
    for _ in range(20):
        params, state = adam_step(params, rng.normal(size=6), state)
        assert np.all(state.v >= 0)
    expected_steps = 20
    assert state.t == expected_steps


def test_minimizes_a_quadratic() -> None:
    params = np.array([2.0, -3.0])
    state = AdamState.fresh(2)
    for _ in range(300):
        params, state = adam_step(params, 2 * params, state)
    assert np.linalg.norm(params) < 0.25


def test_non_finite_gradient() -> None:
    with pytest.raises(TrainingError, match="index 1"):
        adam_step(np.zeros(2), np.array([0.0, np.nan]), AdamState.fresh(2))


def test_length_mismatch() -> None:
    with pytest.raises(ValueError, match="length mismatch"):
        adam_step(np.zeros(2), np.zeros(3), AdamState.fresh(2))
