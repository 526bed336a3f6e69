"""Assembly of the four-term Wasserstein bound, the search over m, and the
companion inequalities for working from moments of X instead of Y."""
from __future__ import annotations

import itertools
import math
import warnings
from dataclasses import dataclass, field

import numpy as np

from .ar1 import AR1Model, MDepApprox, gamma, mdep_error
from .qbound import QMethod, q_bound_sum, q_tables
from .variance import sigma_asymptotic, sigma_tilde

__all__ = [
    "BoundBreakdown",
    "GeneralBoundInputs",
    "MStarWarning",
    "bound_stationary",
    "bound_curve",
    "optimize_m",
    "bound_nonstationary",
    "lambda_set",
    "k_alpha_p",
    "f_tilde",
    "q_diff_bound",
    "x_side_stein_term",
    "noncentered_correction",
]


class MStarWarning(UserWarning):
    """The minimising m sits on the search boundary m_max."""


@dataclass(frozen=True)
class BoundBreakdown:
    term1: float
    term2: float
    term3: float
    term4: float
    total: float
    model: AR1Model
    m: int
    k: int
    n: int
    q_method: QMethod
    gamma_k: float
    sigma: float
    sigma_tilde: float
    k_tilde: float
    sum_q: float
    warnings: tuple[str, ...] = field(default=())

    @property
    def terms(self) -> tuple[float, float, float, float]:
        return (self.term1, self.term2, self.term3, self.term4)


def bound_stationary(model: AR1Model, m: int, k: int, n: int, q_method=QMethod.METHOD2) -> BoundBreakdown:
    """Bound on ``d_W(L(sqrt(n)(gamma_hat(k) - gamma(k))), N(0, Sigma(k)))`` at truncation m.

    term1 is the estimator bias, term2 the variance mismatch, term3 the cost
    of the m-dependent approximation and term4 the Stein remainder.
    """
    if m < 0:
        raise ValueError("m must be nonnegative")
    if k < 0 or n <= k:
        raise ValueError(f"need n > k >= 0, got n={n}, k={k}")
    q_method = QMethod(q_method)
    approx = MDepApprox(model, m)
    g = gamma(model, k)
    sig = sigma_asymptotic(model, k)
    tab = q_tables(approx, k)
    sig_t = sigma_tilde(approx, k, n, tab.c)
    if not (sig > 0 and sig_t > 0):
        raise ValueError(f"variances must be positive (Sigma={sig}, Sigma_tilde={sig_t})")
    d2 = mdep_error(approx, 2)
    x2 = math.sqrt(gamma(model, 0))
    k_t = 2.0 * d2 * x2 + d2 * d2
    sum_q = q_bound_sum(approx, k, n, q_method)
    rn = math.sqrt(n)
    t1 = k / rn * abs(g)
    t2 = math.sqrt(2.0 / (math.pi * sig)) * abs(sig - sig_t)
    t3 = 2.0 * (n - k) / rn * k_t
    t4 = 2.0 / (n * sig_t) ** 1.5 * sum_q
    return BoundBreakdown(t1, t2, t3, t4, t1 + t2 + t3 + t4, model, m, k, n, q_method,
                          g, sig, sig_t, k_t, sum_q)


def bound_curve(model: AR1Model, k: int, n: int, ms, q_method=QMethod.METHOD2) -> list[BoundBreakdown]:
    return [bound_stationary(model, m, k, n, q_method) for m in ms]


def optimize_m(model: AR1Model, k: int, n: int, m_max: int = 30, q_method=QMethod.METHOD2):
    """``(m_star, breakdown)`` minimising the total over ``m = 0..m_max``.

    Ties go to the smallest m.  When ``m_star == m_max`` the breakdown
    carries a warning string and an :class:`MStarWarning` is emitted.
    """
    if m_max < 0:
        raise ValueError("m_max must be nonnegative")
    best = None
    for b in bound_curve(model, k, n, range(m_max + 1), q_method):
        if best is None or b.total < best.total:
            best = b
    if best.m == m_max and m_max > 0:
        msg = f"m_star = m_max = {m_max}; the minimum may lie beyond the search range"
        warnings.warn(msg, MStarWarning, stacklevel=2)
        best = BoundBreakdown(**{**best.__dict__, "warnings": best.warnings + (msg,)})
    return best.m, best


@dataclass(frozen=True)
class GeneralBoundInputs:
    """Per-t ingredients of the bound for possibly non-stationary data."""

    n: int
    k: int
    gamma: float
    sigma2: float
    sigma_tilde: float
    k_t: np.ndarray
    mean_y: np.ndarray
    q_t: np.ndarray

    def __post_init__(self):
        if not 0 <= self.k < self.n:
            raise ValueError("need 0 <= k < n")
        if not (self.sigma2 > 0 and self.sigma_tilde > 0):
            raise ValueError("sigma2 and sigma_tilde must be positive")
        for name in ("k_t", "mean_y", "q_t"):
            arr = np.asarray(getattr(self, name), dtype=float)
            if arr.shape != (self.n - self.k,):
                raise ValueError(f"{name} must have length n - k = {self.n - self.k}, got {arr.shape}")
            object.__setattr__(self, name, arr)


def bound_nonstationary(inp: GeneralBoundInputs) -> float:
    n, k = inp.n, inp.k
    rn = math.sqrt(n)
    t1 = inp.k_t.sum() / rn
    t2 = np.abs(n / (n - k) * inp.gamma - inp.mean_y).sum() / rn
    t3 = math.sqrt(2.0 / (math.pi * inp.sigma2)) * abs(inp.sigma2 - inp.sigma_tilde)
    t4 = 2.0 / (n ** 1.5 * inp.sigma_tilde ** 1.5) * inp.q_t.sum()
    return float(t1 + t2 + t3 + t4)


def lambda_set(p: int) -> frozenset[tuple[int, ...]]:
    """Index patterns of the telescoping expansion of ``prod X - prod Y``.

    For p >= 3 this is ``{1} x {0,1}^(p-1)``, then ``{0}^(j-1) x {1} x {0,1}^(p-j)``
    for ``j = 2..p-1``, then ``{0}^(p-1) x {1}``: every nonzero 0/1 tuple.
    """
    if not isinstance(p, (int, np.integer)) or not 1 <= p <= 8:
        raise ValueError(f"p must be in 1..8, got {p!r}")
    if p == 1:
        return frozenset({(1,)})
    out = set()
    for j in range(1, p + 1):
        head = (0,) * (j - 1) + (1,)
        if j == p:
            out.add(head)
            continue
        for tail in itertools.product((0, 1), repeat=p - j):
            out.add(head + tail)
    return frozenset(out)


def k_alpha_p(d, x, p: int, alpha: float = 1.0) -> float:
    """``sum_{l in Lambda_p} prod_i d_i^l_i x_i^(1-l_i)``.

    ``d`` are the L^(alpha p) approximation errors and ``x`` the matching
    L^(alpha p) norms of X; ``alpha`` only fixes which norms the caller used.
    """
    if alpha < 1:
        raise ValueError("alpha must be >= 1")
    d = np.asarray(d, dtype=float)
    x = np.asarray(x, dtype=float)
    if d.shape != (p,) or x.shape != (p,):
        raise ValueError(f"d and x must both have length p = {p}")
    if (d < 0).any() or (x < 0).any():
        raise ValueError("errors and norms must be nonnegative")
    total = 0.0
    for ell in sorted(lambda_set(p)):
        term = 1.0
        for i, li in enumerate(ell):
            term *= d[i] if li else x[i]
        total += term
    return total


def f_tilde(gamma_k, x2a, x2b, x4a, x4b, d2a, d2b, d4a, d4b) -> float:
    """Constant multiplying ``2 (n-k)^2/n * max D^(4)`` in the variance-replacement inequality."""
    dmin, dmax = min(d2a, d2b), max(d2a, d2b)
    s2 = x2a + x2b + dmin
    return (abs(gamma_k) * s2
            + 0.5 * dmax * s2**2
            + (x4a + d4a) * (x4b + d4b) * (x4a + x4b + d4a + d4b))


def sigma_tilde_gap_bound(n, k, n_var_gamma_hat, sigma, d4a, d4b, f) -> float:
    """Upper bound on ``|Sigma_tilde - Sigma|`` from X-side quantities."""
    return abs(n_var_gamma_hat - sigma) + 2.0 * (n - k) ** 2 / n * max(d4a, d4b) * f


def q_diff_bound(k2_1, k2_2, k2_3, x2a, x2b, x4a, x4b, x6a, x6b, a_size, b_size, c3_sum) -> float:
    """Upper bound on ``|Q_t - Q_tilde_t|``.

    ``k2_j`` is the pair quantity ``K_2^(j)`` for ``j = 1, 2, 3`` and
    ``c3_sum`` is ``sum_{j in A_t} E[Z(t) Z(j)]``.
    """
    c1 = 6.0 * (2.0 * x6a * x6b + k2_3) ** 2 + 2.0 * k2_3**2
    c2 = 8.0 * (2.0 * x4a * x4b + k2_2) * (x2a * x2b + k2_1)
    c3 = 2.0 * abs(c3_sum)
    return (k2_3 * (a_size * b_size + 0.5 * a_size**2) * c1
            + k2_2 * a_size * b_size * c2
            + k2_1 * b_size * c3)


def x_side_stein_term(n, sigma, sigma_tilde, sum_q, sum_q_diff) -> float:
    """Stein term rewritten with X-side Q_t sums, rescaled by ``(Sigma/Sigma_tilde)^(3/2)``."""
    base = 2.0 * n ** -1.5 / sigma ** 1.5
    return (base * sum_q + base * sum_q_diff) * (sigma / sigma_tilde) ** 1.5


def noncentered_correction(model: AR1Model, k: int, n: int) -> float:
    """Distance between the empirically centred and the mean-known statistics."""
    if n < 1:
        raise ValueError("n must be positive")
    if k < 0:
        raise ValueError("k must be nonnegative")
    a = abs(model.alpha)
    g0 = gamma(model, 0)
    s0 = g0 * (1.0 + a) / (1.0 - a)
    s1 = 2.0 * g0 * a / (1.0 - a) ** 2
    return s0 / math.sqrt(n) + k / n**1.5 * (s0 + s1 / n)
