"""Asymptotic and finite-sample variances of the lag-k product sum."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .ar1 import AR1Model, MDepApprox, cum_Y

__all__ = ["VariancePair", "sigma_asymptotic", "c_tilde", "c_tilde_array", "sigma_tilde", "variance_pair"]


@dataclass(frozen=True)
class VariancePair:
    sigma: float
    sigma_tilde: float
    k: int
    n: int
    m: int

    def __post_init__(self):
        if not (self.sigma > 0 and self.sigma_tilde > 0):
            raise ValueError("both variances must be strictly positive")


def sigma_asymptotic(model: AR1Model, k: int) -> float:
    """Long-run variance of ``sqrt(n) * gamma_hat(k)`` for k >= 0."""
    if k < 0:
        raise ValueError("k must be nonnegative (the variance is even in k)")
    a2 = model.alpha**2
    k2, k4 = model.kappa[2], model.kappa[4]
    a2k = model.alpha ** (2 * k)
    return (k2 * k2 * (1.0 + a2 + a2k * (1.0 + a2 + 2.0 * k * (1.0 - a2))) / (1.0 - a2) ** 3
            + k4 * a2k / (1.0 - a2) ** 2)


def _gamma_y(approx: MDepApprox, h: int) -> float:
    return cum_Y(approx, (h, 0))


def c_tilde(approx: MDepApprox, k: int, u: int) -> float:
    """Autocovariance at lag u of ``Z(t) = Y(t+k) Y(t) - E[Y(t+k) Y(t)]``."""
    return (cum_Y(approx, (k, 0, u + k, u))
            + _gamma_y(approx, u) ** 2
            + _gamma_y(approx, k - u) * _gamma_y(approx, k + u))


def c_tilde_array(approx: MDepApprox, k: int, umax: int) -> np.ndarray:
    """``c_tilde(u)`` for ``u = 0..umax``; entries past lag m are exactly zero."""
    out = np.zeros(umax + 1)
    for u in range(min(umax, approx.m) + 1):
        out[u] = c_tilde(approx, k, u)
    return out


def bartlett_sum(c: np.ndarray, length: int, width: int) -> float:
    """``sum_{|u| <= width} (1 - |u|/length) c(|u|)`` with ``c`` indexed by |u|."""
    w = min(width, len(c) - 1)
    if w < 0:
        return 0.0
    u = np.arange(1, w + 1)
    return float(c[0] + 2.0 * np.sum((1.0 - u / length) * c[1:w + 1]))


def sigma_tilde(approx: MDepApprox, k: int, n: int, c: np.ndarray | None = None) -> float:
    """``n^-1 var(sum_{t=1}^{n-k} Y(t+k) Y(t))`` by the Bartlett-weighted lag sum."""
    if k < 0 or n <= k:
        raise ValueError(f"need n > k >= 0, got n={n}, k={k}")
    L = n - k
    width = min(L - 1, approx.m)
    if c is None:
        c = c_tilde_array(approx, k, width)
    return L / n * bartlett_sum(c, L, width)


def variance_pair(approx: MDepApprox, k: int, n: int) -> VariancePair:
    return VariancePair(sigma_asymptotic(approx.model, k), sigma_tilde(approx, k, n), k, n, approx.m)
