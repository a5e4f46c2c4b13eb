"""Trajectory simulation, mean/stochastic prediction, and error metrics."""

import numpy as np
import pytest

from kedmd import (
    DataSet,
    IdentitySystem,
    InputError,
    KoopmanModel,
    LinearSystem,
    MaternKernel,
    SIRSystem,
    TrajectoryBundle,
    TrajectoryConfig,
    fit,
    gram,
    predict_mean,
    predict_stochastic,
    read_bundle_csv,
    sample_pairs,
    simulate_true,
    substream,
    trajectory_error,
    write_bundle_csv,
    zeta_hat,
    zeta_hat_diagnostic,
)
from kedmd.rng import STREAM_PREDICT, STREAM_REFERENCE, STREAM_TRAINING


def test_config_validation():
    with pytest.raises(InputError):
        TrajectoryConfig(np.zeros(3), horizon=-1)
    with pytest.raises(InputError):
        TrajectoryConfig(np.zeros((2, 2)), horizon=3)
    with pytest.raises(InputError):
        TrajectoryConfig(np.zeros(3), horizon=3, n_realizations=0)
    with pytest.raises(InputError):
        TrajectoryConfig(np.zeros(3), horizon=3, n_zeta=0)


def test_bundle_validation_and_properties():
    r = np.zeros((4, 6, 2))
    bundle = TrajectoryBundle(r, r.mean(axis=0))
    assert bundle.n_realizations == 4 and bundle.horizon == 5 and bundle.dim == 2
    with pytest.raises(InputError):
        TrajectoryBundle(r, np.zeros((5, 2)))
    with pytest.raises(InputError):
        TrajectoryBundle(np.zeros((4, 6)), np.zeros((6,)))


def test_simulate_true_mean_is_pointwise_average():
    bundle = simulate_true(
        SIRSystem(), TrajectoryConfig(np.array([0.9, 0.1, 0.0]), horizon=7, n_realizations=9),
        substream(42, STREAM_REFERENCE, 0, 0),
    )
    assert bundle.realizations.shape == (9, 8, 3)
    assert np.array_equal(bundle.mean, bundle.realizations.mean(axis=0))


def test_simulate_true_noiseless_matches_matrix_powers():
    system = LinearSystem(sigma=0.0)
    x0 = np.array([0.1, 0.1, 0.1])
    bundle = simulate_true(
        system, TrajectoryConfig(x0, horizon=6, n_realizations=3), substream(0, 1)
    )
    expected = np.stack([np.linalg.matrix_power(system.matrix, k) @ x0 for k in range(7)])
    for r in range(3):
        assert np.allclose(bundle.realizations[r], expected, rtol=0, atol=1e-14)


def test_predict_mean_horizon_zero_is_single_lifted_roundtrip():
    data = sample_pairs(LinearSystem(), 40, substream(42, STREAM_TRAINING, 40, 0))
    model = fit(data, MaternKernel(0.5, 1e3))
    x0 = np.array([0.1, 0.1, 0.1])
    out = predict_mean(model, TrajectoryConfig(x0, horizon=0))
    assert out.shape == (1, 3)
    assert np.array_equal(out[0], model.lift_back(model.embed(x0)))


def test_predict_mean_is_constant_under_identity_dynamics():
    rng = substream(42, STREAM_TRAINING, 8, 0)
    points = rng.standard_normal((8, 3))
    model = fit(DataSet(points, points.copy()), MaternKernel(1.5, 1.0), ridge=0.0)
    out = predict_mean(model, TrajectoryConfig(points[2], horizon=20))
    assert np.abs(out - out[0]).max() <= 1e-7


def test_noiseless_linear_trajectory_matches_matrix_power_oracle():
    system = LinearSystem(sigma=0.0)
    data = sample_pairs(system, 500, substream(42, STREAM_TRAINING, 500, 0))
    model = fit(data, MaternKernel(0.5, 1e3))
    x0 = np.array([0.1, 0.1, 0.1])
    predicted = predict_mean(model, TrajectoryConfig(x0, horizon=10))
    expected = np.stack(
        [np.linalg.matrix_power(system.matrix, k) @ x0 for k in range(11)]
    )
    per_step = np.linalg.norm(predicted - expected, axis=1)
    assert per_step.max() <= 5e-3  # measured 1.9e-3 at this seed


def test_stochastic_prediction_equals_mean_prediction_without_noise():
    system = LinearSystem(sigma=0.0)
    data = sample_pairs(system, 100, substream(42, STREAM_TRAINING, 100, 0))
    model = fit(data, MaternKernel(0.5, 1e3))
    cfg = TrajectoryConfig(np.array([0.1, 0.1, 0.1]), horizon=10, n_realizations=3, n_zeta=5)
    mean_traj = predict_mean(model, cfg)
    bundle = predict_stochastic(model, system, cfg, substream(42, STREAM_PREDICT, 100, 0))
    assert np.abs(bundle.realizations - mean_traj).max() <= 1e-12


def test_zeta_hat_vanishes_for_deterministic_systems():
    points = substream(1, 0).standard_normal((12, 3))
    model = fit(DataSet(points, points.copy()), MaternKernel(0.5, 1.0))
    zeta = zeta_hat(model, IdentitySystem(3), points[0], 50, substream(1, 2))
    assert np.abs(zeta.coeffs).max() <= 1e-14


def test_zeta_hat_is_centered():
    system = SIRSystem()
    data = sample_pairs(system, 80, substream(42, STREAM_TRAINING, 80, 0))
    model = fit(data, MaternKernel(0.5, 1.0))
    x = np.array([0.7, 0.2, 0.1])
    zeta, se = zeta_hat_diagnostic(model, system, x, 2000, substream(42, STREAM_PREDICT, 80, 0))
    assert np.linalg.norm(zeta.coeffs) <= 3.0 * se


def test_stochastic_ensemble_mean_tracks_mean_prediction():
    system = LinearSystem(sigma=1e-3)
    data = sample_pairs(system, 200, substream(42, STREAM_TRAINING, 200, 0))
    model = fit(data, MaternKernel(0.5, 1e3))
    cfg = TrajectoryConfig(
        np.array([0.1, 0.1, 0.1]), horizon=10, n_realizations=200, n_zeta=30
    )
    bundle = predict_stochastic(model, system, cfg, substream(42, STREAM_PREDICT, 200, 0))
    mean_traj = predict_mean(model, cfg)
    stderr = bundle.realizations.std(axis=0, ddof=1) / np.sqrt(cfg.n_realizations)
    deviation = np.abs(bundle.mean - mean_traj)
    # step 0 is deterministic (zero spread); compare later steps
    z = deviation[1:] / stderr[1:]
    assert z.max() <= 3.0  # measured 1.42 at this seed


def test_extrapolation_is_flagged_on_predicted_bundles():
    kernel = MaternKernel(0.5, 1.0)
    points = np.array([[0.0], [0.1], [0.2]])
    # a coefficient-doubling surrogate walks straight out of the training box
    doubling = KoopmanModel(
        kernel=kernel,
        X=points,
        gram=gram(kernel, points, ridge=1e-10),
        gram_cross=None,
        U=2.0 * np.eye(3),
        Ustar=2.0 * np.eye(3),
    )
    cfg = TrajectoryConfig(np.array([0.2]), horizon=4, n_realizations=1, n_zeta=2)
    bundle = predict_stochastic(doubling, IdentitySystem(1), cfg, substream(0, 2))
    assert bundle.extrapolated
    # an identity surrogate stays inside and is not flagged
    identity_model = fit(DataSet(points, points.copy()), kernel, ridge=1e-10)
    cfg2 = TrajectoryConfig(np.array([0.1]), horizon=2, n_realizations=1, n_zeta=2)
    bundle2 = predict_stochastic(identity_model, IdentitySystem(1), cfg2, substream(0, 2))
    assert not bundle2.extrapolated


def test_trajectory_error_hand_values():
    ref = np.zeros((3, 2))
    pred = np.array([[3.0, 4.0], [0.0, 0.0], [1.0, 0.0]])
    assert trajectory_error(ref, pred, "max") == 5.0
    assert trajectory_error(ref, pred, "mean") == pytest.approx(2.0, rel=1e-15)


def test_trajectory_error_against_brute_force():
    rng = np.random.default_rng(8)
    ref = rng.standard_normal((12, 3))
    pred = rng.standard_normal((12, 3))
    dists = [float(np.linalg.norm(ref[k] - pred[k])) for k in range(12)]
    assert trajectory_error(ref, pred, "max") == pytest.approx(max(dists), rel=1e-14)
    assert trajectory_error(ref, pred, "mean") == pytest.approx(
        sum(dists) / 12.0, rel=1e-14
    )


def test_trajectory_error_validation():
    with pytest.raises(InputError):
        trajectory_error(np.zeros((3, 2)), np.zeros((4, 2)))
    with pytest.raises(InputError):
        trajectory_error(np.zeros((3, 2)), np.zeros((3, 2)), metric="median")


def test_bundle_csv_roundtrip_and_determinism(tmp_path):
    bundle = simulate_true(
        SIRSystem(), TrajectoryConfig(np.array([0.9, 0.1, 0.0]), horizon=4, n_realizations=3),
        substream(42, STREAM_REFERENCE, 9, 0),
    )
    path_a = tmp_path / "a.csv"
    path_b = tmp_path / "b.csv"
    write_bundle_csv(bundle, path_a)
    write_bundle_csv(bundle, path_b)
    assert path_a.read_bytes() == path_b.read_bytes()
    restored = read_bundle_csv(path_a)
    assert np.array_equal(restored.realizations, bundle.realizations)
    assert np.array_equal(restored.mean, bundle.mean)
    header = path_a.read_text().splitlines()[0]
    assert header == "realization,step,x0,x1,x2"
    # mean rows carry realization id -1
    assert any(line.startswith("-1,") for line in path_a.read_text().splitlines()[1:])


def test_dimension_mismatches_rejected():
    data = sample_pairs(LinearSystem(), 10, substream(42, STREAM_TRAINING, 10, 0))
    model = fit(data, MaternKernel(0.5, 1e3))
    with pytest.raises(InputError):
        predict_mean(model, TrajectoryConfig(np.zeros(2), horizon=1))
    with pytest.raises(InputError):
        predict_stochastic(
            model, IdentitySystem(1), TrajectoryConfig(np.zeros(3), horizon=1), substream(0, 0)
        )
    with pytest.raises(InputError):
        simulate_true(
            IdentitySystem(2), TrajectoryConfig(np.zeros(3), horizon=1), substream(0, 0)
        )
