import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy.special import ndtr, ndtri

from wassbound import _kernels
from wassbound.ar1 import AR1Model
from wassbound.innovations import RngHandle, sample
from wassbound.wasserstein import (
    W1Estimate,
    burn_in,
    estimate_w1,
    normal_quantile,
    simulate_ar1,
    statistic,
    w1_vs_normal,
)


def test_normal_quantile_values():
    assert normal_quantile(0.5) == 0.0
    assert normal_quantile(0.975) == pytest.approx(1.959964, abs=1e-6)
    with pytest.raises(ValueError):
        normal_quantile(0.0)
    with pytest.raises(ValueError):
        normal_quantile([0.5, 1.5])


def test_normal_quantile_against_ndtri():
    u = np.concatenate([np.logspace(-300, -1, 3000), np.linspace(1e-3, 1 - 1e-3, 20001), 1 - np.logspace(-16, -1, 1000)])
    assert np.max(np.abs(normal_quantile(u) - ndtri(u))) < 1e-9


def test_normal_quantile_round_trip():
    u = np.linspace(1e-6, 1 - 1e-6, 5001)
    assert np.max(np.abs(ndtr(normal_quantile(u)) - u)) < 1e-9


@settings(max_examples=200, deadline=None)
@given(st.floats(min_value=1e-15, max_value=0.5))
def test_normal_quantile_antisymmetric(u):
    v = 1.0 - u
    assert normal_quantile(1.0 - v) == pytest.approx(-normal_quantile(v), abs=1e-9)
    assert normal_quantile(u) <= 0.0


def test_w1_perfect_match():
    R = 1000
    q = 1.5 * normal_quantile((2 * np.arange(1, R + 1) - 1) / (2 * R))
    assert w1_vs_normal(q[::-1], 2.25) == pytest.approx(0.0, abs=1e-12)


def test_w1_validation():
    with pytest.raises(ValueError):
        w1_vs_normal([], 1.0)
    with pytest.raises(ValueError):
        w1_vs_normal([1.0, 2.0], 0.0)


@settings(max_examples=25, deadline=None)
@given(st.lists(st.floats(-50, 50), min_size=2, max_size=50), st.randoms())
def test_w1_permutation_invariant(xs, rnd):
    ys = list(xs)
    rnd.shuffle(ys)
    assert w1_vs_normal(xs, 1.3) == pytest.approx(w1_vs_normal(ys, 1.3), rel=1e-12, abs=1e-12)


def test_w1_in_place_sort_leaves_input_alone_by_default():
    x = np.array([3.0, -1.0, 2.0])
    w1_vs_normal(x, 1.0)
    assert x.tolist() == [3.0, -1.0, 2.0]
    w1_vs_normal(x, 1.0, overwrite=True)
    assert x.tolist() == [-1.0, 2.0, 3.0]


def test_w1_self_distance_decays():
    z = np.random.default_rng(4).standard_normal(10**6)
    assert w1_vs_normal(z, 1.0) <= 3e-3


def test_statistic_examples():
    assert statistic(np.zeros(5), 2, 0.0) == 0.0
    assert statistic([1.5, -2.0], 1, 0.3) == pytest.approx(math.sqrt(2) * (1.5 * -2.0 / 2 - 0.3))
    assert statistic([1, 2, 3], 0, 0.0) == pytest.approx(math.sqrt(3) * 14 / 3)
    with pytest.raises(ValueError):
        statistic([1, 2, 3], 3, 0.0)


def test_burn_in():
    assert burn_in(0.0) == 100
    assert burn_in(0.5) == 100
    assert burn_in(0.7) == math.ceil(52 / -math.log2(0.7))
    assert 0.9 ** burn_in(0.9) <= 2**-52


def test_simulate_alpha_zero_is_innovations(t9):
    path = simulate_ar1(AR1Model(0.0, t9), 50, RngHandle(3))
    eps = sample(t9, RngHandle(3), 150)
    assert np.array_equal(path, eps[100:])


def test_simulate_deterministic(t9):
    a = simulate_ar1(AR1Model(0.6, t9), 40, RngHandle(9, 2))
    b = simulate_ar1(AR1Model(0.6, t9), 40, RngHandle(9, 2))
    assert np.array_equal(a, b)
    with pytest.raises(ValueError):
        simulate_ar1(AR1Model(0.6, t9), 0, RngHandle(9))


def test_simulate_lag_one_autocovariance():
    n = 10**7
    x = simulate_ar1(AR1Model(0.5), n, RngHandle(21))
    prod = x[1:] * x[:-1]
    est = prod.mean()
    # long-run sd of the lag product for a Gaussian AR(1): sqrt(Sigma(1) / n)
    from wassbound.variance import sigma_asymptotic

    se = math.sqrt(sigma_asymptotic(AR1Model(0.5), 1) / n)
    assert abs(est - 2 / 3) < 5 * se


def test_estimate_is_thread_invariant(t9):
    model = AR1Model(0.5, t9)
    a = estimate_w1(model, 1, 30, 2000, 4, seed=5, workers=1)
    b = estimate_w1(model, 1, 30, 2000, 4, seed=5, workers=3)
    assert a == b
    assert a.mean == pytest.approx(np.mean(a.per_replicate))
    assert a.sd > 0


def test_estimate_single_replicate_sd_zero():
    e = estimate_w1(AR1Model(0.2), 0, 10, 100, 1, seed=1)
    assert e.sd == 0.0 and e.B == 1


def test_estimate_validation():
    with pytest.raises(ValueError):
        estimate_w1(AR1Model(0.2), 0, 10, 1, 1, seed=1)
    with pytest.raises(ValueError):
        estimate_w1(AR1Model(0.2), 10, 10, 100, 1, seed=1)
    with pytest.raises(ValueError):
        W1Estimate((0.1,), 0.1, 0.0, 10, 2, 0)


def test_estimate_repeatable_across_batches(t9):
    # R large enough for several path batches per replicate
    model = AR1Model(0.3, t9)
    a = estimate_w1(model, 0, 20, 40_000, 2, seed=8)
    assert a == estimate_w1(model, 0, 20, 40_000, 2, seed=8)
    assert a != estimate_w1(model, 0, 20, 40_000, 2, seed=9)


def test_mean_decreases_in_n(t9):
    model = AR1Model(0.5, t9)
    means = [estimate_w1(model, 0, n, 20_000, 3, seed=2).mean for n in (25, 250, 2000)]
    assert means[0] > means[1] > means[2]
