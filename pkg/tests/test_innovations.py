import numpy as np
import pytest

from _oracles import raw_moments
from wassbound.innovations import InnovationModel, RngHandle, cumulant, parse_dist, sample


@pytest.mark.parametrize("nu", [9.0, 14.0, 30.5])
def test_t_cumulants_against_gamma_function_moments(nu):
    mu = raw_moments(InnovationModel.student_t(nu))
    m2, m4, m6, m8 = mu[2], mu[4], mu[6], mu[8]
    # symmetric moment-to-cumulant relations
    k4 = m4 - 3 * m2**2
    k6 = m6 - 15 * m4 * m2 + 30 * m2**3
    k8 = m8 - 28 * m6 * m2 - 35 * m4**2 + 420 * m4 * m2**2 - 630 * m2**4
    model = InnovationModel.student_t(nu)
    assert cumulant(model, 2) == 1.0
    assert cumulant(model, 4) == pytest.approx(k4, rel=1e-9)
    assert cumulant(model, 6) == pytest.approx(k6, rel=1e-8)
    assert cumulant(model, 8) == pytest.approx(k8, rel=1e-7)
    for p in (1, 3, 5, 7):
        assert cumulant(model, p) == 0.0


def test_t9_values():
    m = InnovationModel.student_t(9)
    assert m.cumulant(4) == pytest.approx(1.2)
    assert m.cumulant(6) == pytest.approx(16.0)


def test_normal_cumulants():
    k = InnovationModel.normal().cumulants()
    assert k[2] == 1.0 and np.count_nonzero(k) == 1


def test_validation():
    with pytest.raises(ValueError):
        InnovationModel.student_t(8)
    with pytest.raises(ValueError):
        InnovationModel("laplace")
    with pytest.raises(ValueError):
        cumulant(InnovationModel.normal(), 9)
    with pytest.raises(ValueError):
        RngHandle(-1)


@pytest.mark.parametrize("text, label", [("normal", "normal"), ("t9", "t9"), ("T14", "t14"), ("t:10.5", "t:10.5")])
def test_parse_dist(text, label):
    assert parse_dist(text).label == label


def test_parse_dist_rejects_garbage():
    with pytest.raises(ValueError):
        parse_dist("cauchy")


def test_sampling_is_deterministic_and_unit_variance(t9):
    a = sample(t9, RngHandle(7, 3), 200_000)
    b = sample(t9, RngHandle(7, 3), 200_000)
    c = sample(t9, RngHandle(7, 4), 200_000)
    assert np.array_equal(a, b)
    assert not np.array_equal(a, c)
    assert a.var() == pytest.approx(1.0, abs=0.02)
    assert abs(a.mean()) < 0.01


def test_substreams_differ():
    h = RngHandle(1)
    assert h.substream(0) != h.substream(1)
    x = sample(InnovationModel.normal(), h.substream(0), 10)
    y = sample(InnovationModel.normal(), h.substream(1), 10)
    assert not np.array_equal(x, y)


def test_sample_kurtosis_t9(t9):
    x = sample(t9, RngHandle(11), 2_000_000)
    # E eps^4 = 3 + kappa_4 = 4.2; heavy tails make the estimator noisy
    assert np.mean(x**4) == pytest.approx(4.2, rel=0.06)
