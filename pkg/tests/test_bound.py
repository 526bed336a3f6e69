import math
import warnings

import numpy as np
import pytest

from wassbound.ar1 import AR1Model, MDepApprox, cum_Y, gamma, mdep_error
from wassbound.bound import (
    GeneralBoundInputs,
    MStarWarning,
    bound_nonstationary,
    bound_stationary,
    f_tilde,
    k_alpha_p,
    lambda_set,
    noncentered_correction,
    optimize_m,
    q_diff_bound,
    sigma_tilde_gap_bound,
    x_side_stein_term,
)
from wassbound.innovations import InnovationModel
from wassbound.qbound import QMethod, QTermContext, q_bound_method2, q_bound_sum
from wassbound.variance import sigma_asymptotic, sigma_tilde


def test_terms_recomputed_by_hand(t9):
    model = AR1Model(0.5, t9)
    m, k, n = 3, 1, 60
    b = bound_stationary(model, m, k, n)
    approx = MDepApprox(model, m)
    d2 = 0.5 ** (m + 1) / math.sqrt(1 - 0.25)
    x2 = math.sqrt(1 / (1 - 0.25))
    sig = sigma_asymptotic(model, k)
    sig_t = sigma_tilde(approx, k, n)
    assert b.term1 == pytest.approx(k / math.sqrt(n) * gamma(model, k))
    assert b.term2 == pytest.approx(math.sqrt(2 / (math.pi * sig)) * abs(sig - sig_t))
    assert b.term3 == pytest.approx(2 * (n - k) / math.sqrt(n) * (2 * d2 * x2 + d2 * d2))
    assert b.term4 == pytest.approx(2 * (n * sig_t) ** -1.5 * q_bound_sum(approx, k, n))
    assert b.total == pytest.approx(sum(b.terms))
    assert mdep_error(approx, 2) == pytest.approx(d2)


def test_iid_gaussian_has_only_the_stein_term():
    b = bound_stationary(AR1Model(0.0), 0, 0, 100)
    assert b.term1 == b.term2 == b.term3 == 0.0
    assert b.term4 == pytest.approx(2 * 100 * (math.sqrt(112) + math.sqrt(30)) / (100 * 2.0) ** 1.5)


def test_method1_is_larger(t9):
    model = AR1Model(0.3, t9)
    assert bound_stationary(model, 2, 1, 50, QMethod.METHOD1).total > bound_stationary(model, 2, 1, 50).total


@pytest.mark.parametrize("alpha", [0.1, 0.5, 0.7])
@pytest.mark.parametrize("k", [0, 2])
def test_sign_symmetry(t9, alpha, k):
    for m in (0, 3):
        plus = bound_stationary(AR1Model(alpha, t9), m, k, 75).total
        minus = bound_stationary(AR1Model(-alpha, t9), m, k, 75).total
        assert minus == pytest.approx(plus, rel=1e-12)


def test_optimize_m_is_the_minimum(t9):
    model = AR1Model(0.7, t9)
    m_star, best = optimize_m(model, 0, 25)
    totals = [bound_stationary(model, m, 0, 25).total for m in range(31)]
    assert best.total == min(totals)
    assert m_star == int(np.argmin(totals))
    assert m_star < 30 and not best.warnings


def test_optimize_m_boundary_warning(t9):
    with pytest.warns(MStarWarning):
        m_star, b = optimize_m(AR1Model(0.7, t9), 0, 2000, m_max=2)
    assert m_star == 2 and b.warnings


def test_optimize_m_tie_goes_to_smallest():
    # at alpha = 0 every m gives the same Y, hence the same total
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        m_star, _ = optimize_m(AR1Model(0.0), 0, 30, m_max=0)
    assert m_star == 0


def test_decreasing_in_n(t9):
    model = AR1Model(0.5, t9)
    totals = [optimize_m(model, 1, n)[1].total for n in (25, 50, 100, 250, 1000, 2000)]
    assert all(a > b for a, b in zip(totals, totals[1:]))


@pytest.mark.parametrize("alpha", [0.1, 0.3, 0.5, 0.7])
def test_heavier_tails_larger_bound(alpha, t9):
    for n in (25, 250):
        assert optimize_m(AR1Model(alpha, t9), 0, n)[1].total >= optimize_m(AR1Model(alpha), 0, n)[1].total


def test_input_validation(t9):
    with pytest.raises(ValueError):
        bound_stationary(AR1Model(0.5), -1, 0, 10)
    with pytest.raises(ValueError):
        bound_stationary(AR1Model(0.5), 0, 10, 10)


def _stationary_inputs(model, m, k, n):
    approx = MDepApprox(model, m)
    d2 = mdep_error(approx, 2)
    kt = 2 * d2 * math.sqrt(gamma(model, 0)) + d2 * d2
    N = n - k
    q = np.array([q_bound_method2(QTermContext(approx, k, n, t)) for t in range(1, N + 1)])
    return GeneralBoundInputs(
        n=n, k=k, gamma=gamma(model, k), sigma2=sigma_asymptotic(model, k),
        sigma_tilde=sigma_tilde(approx, k, n), k_t=np.full(N, kt),
        mean_y=np.full(N, cum_Y(approx, (k, 0))), q_t=q,
    )


@pytest.mark.parametrize("alpha, m, k, n", [(0.5, 2, 1, 40), (0.7, 4, 0, 30), (0.3, 1, 2, 60)])
def test_nonstationary_assembler_is_no_larger(t9, alpha, m, k, n):
    model = AR1Model(alpha, t9)
    assert bound_nonstationary(_stationary_inputs(model, m, k, n)) <= bound_stationary(model, m, k, n).total * (1 + 1e-12)


def test_general_inputs_validation():
    with pytest.raises(ValueError):
        GeneralBoundInputs(10, 1, 0.0, 1.0, 1.0, np.zeros(8), np.zeros(9), np.zeros(9))
    with pytest.raises(ValueError):
        GeneralBoundInputs(10, 1, 0.0, 0.0, 1.0, np.zeros(9), np.zeros(9), np.zeros(9))


@pytest.mark.parametrize("p", range(1, 9))
def test_lambda_set(p):
    lam = lambda_set(p)
    assert len(lam) == 2**p - 1
    assert all(len(ell) == p and any(ell) for ell in lam)


def test_lambda_set_small():
    assert lambda_set(2) == {(1, 0), (1, 1), (0, 1)}
    with pytest.raises(ValueError):
        lambda_set(0)


def test_k_alpha_p():
    # sum over nonzero 0/1 patterns = prod(x + d) - prod(x)
    d, x = np.array([0.1, 0.2, 0.3]), np.array([1.0, 2.0, 3.0])
    assert k_alpha_p(d, x, 3) == pytest.approx(np.prod(x + d) - np.prod(x))
    assert k_alpha_p(np.zeros(3), x, 3) == 0.0
    with pytest.raises(ValueError):
        k_alpha_p(d, x, 2)
    with pytest.raises(ValueError):
        k_alpha_p(-d, x, 3)


def test_f_tilde():
    assert f_tilde(0.5, 1.0, 2.0, 3.0, 4.0, 0, 0, 0, 0) == pytest.approx(0.5 * 3 + 3 * 4 * 7)
    sym = f_tilde(0.5, 1.0, 1.0, 2.0, 2.0, 0.1, 0.1, 0.2, 0.2)
    s2 = 2.1
    assert sym == pytest.approx(0.5 * s2 + 0.05 * s2**2 + 2.2 * 2.2 * 4.4)
    spot = f_tilde(0.3, 1.1, 1.2, 1.5, 1.6, 0.05, 0.07, 0.09, 0.11)
    s2 = 1.1 + 1.2 + 0.05
    assert spot == pytest.approx(0.3 * s2 + 0.5 * 0.07 * s2**2 + 1.59 * 1.71 * (1.5 + 1.6 + 0.09 + 0.11))


def test_sigma_tilde_gap_bound():
    assert sigma_tilde_gap_bound(50, 1, 3.0, 2.5, 0.01, 0.02, 4.0) == pytest.approx(0.5 + 2 * 49**2 / 50 * 0.02 * 4.0)


def test_q_diff_bound():
    assert q_diff_bound(0, 0, 0, 1, 1, 2, 2, 3, 3, 5, 9, 4.0) == 0.0
    v = q_diff_bound(0.1, 0.2, 0.3, 1, 1.1, 2, 2.1, 3, 3.1, 5, 9, 4.0)
    c1 = 6 * (2 * 3 * 3.1 + 0.3) ** 2 + 2 * 0.09
    c2 = 8 * (2 * 2 * 2.1 + 0.2) * (1 * 1.1 + 0.1)
    assert v == pytest.approx(0.3 * (45 + 12.5) * c1 + 0.2 * 45 * c2 + 0.1 * 9 * 8.0)
    assert v >= 0


def test_x_side_stein_term():
    assert x_side_stein_term(100, 2.0, 2.0, 10.0, 0.0) == pytest.approx(2 * 100**-1.5 / 2**1.5 * 10)
    assert x_side_stein_term(100, 2.0, 1.0, 10.0, 1.0) == pytest.approx(2 * 100**-1.5 * 11)


def test_noncentered_special_cases(t9):
    model = AR1Model(0.5)
    s0 = (4 / 3) * 1.5 / 0.5
    assert s0 == pytest.approx(4.0)
    assert noncentered_correction(model, 0, 100) == pytest.approx(s0 / 10)
    iid = AR1Model(0.0, t9)
    for k, n in [(0, 10), (3, 50)]:
        assert noncentered_correction(iid, k, n) == pytest.approx((n**-0.5 + k * n**-1.5) * 1.0)
    s1 = 2 * (4 / 3) * 0.5 / 0.25
    assert noncentered_correction(model, 2, 100) == pytest.approx(s0 / 10 + 2 / 1000 * (s0 + s1 / 100))
    assert noncentered_correction(AR1Model(-0.5), 2, 100) == noncentered_correction(model, 2, 100)
    with pytest.raises(ValueError):
        noncentered_correction(model, 0, 0)


def test_published_iid_row_omits_the_eighth_order_sum(monkeypatch, t9):
    # the printed t9 alpha = 0 bounds come out exactly when M1 is set to zero;
    # with M1 included (the correct value) the bound is far larger
    import wassbound.qbound as qb
    from wassbound.reference import BOUND_T9, N_GRID

    orig = qb._mterms_from_offsets

    def no_m1(tab, lo, hi, size_b):
        mt = orig(tab, lo, hi, size_b)
        return qb.MTerms(0.0, mt.m2a, mt.m2b, mt.m3)

    monkeypatch.setattr(qb, "_mterms_from_offsets", no_m1)
    qb.q_tables.cache_clear()
    for k in (0, 1, 2):
        got = [round(optimize_m(AR1Model(0.0, t9), k, n)[1].total, 3) for n in N_GRID]
        assert got == pytest.approx(BOUND_T9[(k, 0.0)], abs=1.1e-3)
