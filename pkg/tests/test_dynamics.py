"""Test systems: step maps, samplers, and random-stream discipline."""

import numpy as np
import pytest

from kedmd import (
    IdentitySystem,
    InputError,
    LinearSystem,
    MultiplicativeNoiseSystem,
    SIRSystem,
    make_system,
    sample_pairs,
    substream,
)


def test_linear_matrix_structure():
    system = LinearSystem(alpha=-0.3)
    expected = np.eye(3) + np.array(
        [[0.01, 0.04, 0.0], [0.01, 0.02, -0.3], [0.0, 0.4, 0.02]]
    )
    assert np.array_equal(system.matrix, expected)
    # alpha lands in the (1, 2) entry only
    assert LinearSystem(alpha=0.7).matrix[1, 2] == 0.7


def test_linear_noiseless_step_is_matrix_multiply():
    system = LinearSystem(sigma=0.0)
    rng = substream(0, 1)
    x = np.array([0.3, -1.2, 0.5])
    assert np.array_equal(system.step(x, rng), system.matrix @ x)
    # origin is a fixed point, exactly
    assert np.array_equal(system.step(np.zeros(3), rng), np.zeros(3))


def test_linear_step_consumes_three_draws_even_when_noiseless():
    # streams stay aligned across sigma values
    rng_a = substream(7, 1)
    rng_b = substream(7, 1)
    LinearSystem(sigma=0.0).step(np.zeros(3), rng_a)
    rng_b.standard_normal(3)
    assert rng_a.standard_normal() == rng_b.standard_normal()


def test_linear_one_step_mean_matches_clt():
    system = LinearSystem(sigma=1e-3)
    x0 = np.array([0.1, 0.1, 0.1])
    rng = substream(42, 11)
    draws = np.stack([system.step(x0, rng) for _ in range(10_000)])
    z = np.abs(draws.mean(axis=0) - system.matrix @ x0) / (system.sigma / 100.0)
    assert np.all(z <= 3.0)


def test_sir_noiseless_step_example():
    system = SIRSystem(beta=1.0, gamma=0.3, sigma=0.0)
    out = system.step(np.array([0.9, 0.1, 0.0]), substream(0, 1))
    assert out == pytest.approx([0.81, 0.16, 0.03], rel=1e-12)


def test_sir_step_preserves_total_mass():
    system = SIRSystem(sigma=0.0)
    rng = substream(42, 3)
    states = system.sample_states(10_000, rng)
    sums = np.array([system.step(x, rng).sum() for x in states])
    assert np.abs(sums - states.sum(axis=1)).max() <= 1e-12


def test_sir_one_step_mean_matches_clt():
    system = SIRSystem()
    rng = substream(42, 12)
    draws = np.stack([system.step(np.array([0.9, 0.1, 0.0]), rng) for _ in range(10_000)])
    z = np.abs(draws.mean(axis=0) - np.array([0.81, 0.16, 0.03])) / (system.sigma / 100.0)
    assert np.all(z <= 3.0)


def test_sir_sampler_lives_on_simplex():
    system = SIRSystem()
    states = system.sample_states(10_000, substream(42, 13))
    assert np.abs(states.sum(axis=1) - 1.0).max() <= 1e-12
    assert states.min() >= 0.0
    # flat Dirichlet has mean 1/3 and variance 1/18 per coordinate
    z = np.abs(states.mean(axis=0) - 1.0 / 3.0) / (np.sqrt(1.0 / 18.0) / 100.0)
    assert np.all(z <= 3.0)


def test_multiplicative_step_stays_in_unit_interval():
    system = MultiplicativeNoiseSystem()
    rng = substream(42, 14)
    states = system.sample_states(100_000, rng)
    assert states.min() > 0.0 and states.max() <= 1.0
    stepped = np.array([system.step(x, rng)[0] for x in states[:10_000]])
    assert stepped.min() > 0.0 and stepped.max() <= 1.0
    # steps never increase the state
    assert np.all(stepped <= states[:10_000, 0])


def test_multiplicative_one_step_mean_matches_clt():
    system = MultiplicativeNoiseSystem()
    rng = substream(42, 15)
    x = np.array([0.8])
    draws = np.array([system.step(x, rng)[0] for _ in range(10_000)])
    # x * eps has mean x/2 and std x/sqrt(12)
    z = abs(draws.mean() - 0.4) / (0.8 / np.sqrt(12.0) / 100.0)
    assert z <= 3.0


def test_identity_system_returns_copy_and_draws_nothing():
    system = IdentitySystem(dim=4)
    rng = substream(5, 1)
    state_before = rng.bit_generator.state
    x = np.arange(4.0)
    out = system.step(x, rng)
    assert np.array_equal(out, x)
    assert out is not x
    assert rng.bit_generator.state == state_before


def test_substream_determinism_and_independence():
    a1 = substream(42, 0, 100, 0).standard_normal(5)
    a2 = substream(42, 0, 100, 0).standard_normal(5)
    b = substream(42, 0, 100, 1).standard_normal(5)
    c = substream(42, 1, 100, 0).standard_normal(5)
    assert np.array_equal(a1, a2)
    assert not np.array_equal(a1, b)
    assert not np.array_equal(a1, c)


def test_sample_pairs_aligns_successors():
    system = LinearSystem(sigma=0.0)
    data = sample_pairs(system, 12, substream(42, 0, 12, 0))
    assert data.X.shape == (12, 3) and data.Xplus.shape == (12, 3)
    assert np.allclose(data.Xplus, data.X @ system.matrix.T, rtol=0, atol=1e-15)


def test_state_shape_validation():
    with pytest.raises(InputError):
        LinearSystem().step(np.zeros(2), substream(0, 0))
    with pytest.raises(InputError):
        SIRSystem().step(np.zeros((3, 1)), substream(0, 0))
    with pytest.raises(InputError):
        MultiplicativeNoiseSystem().sample_states(0, substream(0, 0))


def test_parameter_validation():
    with pytest.raises(InputError):
        LinearSystem(sigma=-0.1)
    with pytest.raises(InputError):
        SIRSystem(beta=-1.0)
    with pytest.raises(InputError):
        SIRSystem(gamma=-0.5)


def test_make_system_factory():
    assert isinstance(make_system("linear", alpha=0.1), LinearSystem)
    assert isinstance(make_system("sir"), SIRSystem)
    assert isinstance(make_system("multiplicative"), MultiplicativeNoiseSystem)
    assert isinstance(make_system("identity", dim=2), IdentitySystem)
    with pytest.raises(InputError):
        make_system("lorenz")
    with pytest.raises(InputError):
        make_system("linear", nonsense=1.0)
